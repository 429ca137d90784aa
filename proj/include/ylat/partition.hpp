#ifndef YLAT_PARTITION_HPP
#define YLAT_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ylat {

/// An integer partition: weakly decreasing positive parts.  Zero parts are
/// never stored; the constructor strips trailing zeros, so (3,1,0) and (3,1)
/// are the same value.  Indexing past the last part reads as 0, which is how
/// containment pads the shorter partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Comma-separated decimal parts, e.g. "5,5,4,2,2"; "" is the empty partition.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long rank() const;

    /// 0-based part access with zero padding.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::span<const int> parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Containment order of Young diagrams: mu_i <= lambda_i for every i.
bool contains(const Partition& mu, const Partition& lambda);

/// The interval [mu, lambda] of Young's lattice; mu <= lambda is enforced.
struct SkewInterval {
    Partition mu;
    Partition lambda;

    SkewInterval() = default;
    SkewInterval(Partition lower, Partition upper);

    friend bool operator==(const SkewInterval&, const SkewInterval&) = default;
};

/// Subtract `power` from every part and drop parts that reach zero.
/// Throws InvalidArgument when power exceeds the largest part.
Partition rho(const Partition& lambda, int power = 1);

/// (lambda_1..lambda_r, lambda_{r+1}..lambda_k) for 0 <= r <= length.
std::pair<Partition, Partition> slice(const Partition& lambda, std::size_t r);

/// Concatenate two partitions; the last part of `head` must be >= the first of `tail`.
Partition concat(const Partition& head, const Partition& tail);

/// (n^k): k rows of length n (empty when n or k is 0).
Partition rectangle(int n, std::size_t k);

/// Removes a box from row r of lambda (the "left" partition) and raises the
/// first r rows of mu to at least lambda_r (the "right" one), splitting
/// [mu, lambda] by whether nu_r == lambda_r.  r is 1-based and must satisfy
/// lambda_r > lambda_{r+1} and mu_r < lambda_r.
std::pair<SkewInterval, SkewInterval> lemma_sum_split(const Partition& mu, const Partition& lambda,
                                                      std::size_t r);

/// Adds a box to row r of mu, splitting [mu, lambda] by whether nu_r > mu_r:
/// returns ([mu + box, lambda], [mu, lambda']) with lambda'_i = min(lambda_i, mu_r) for i >= r.
/// r is 1-based and must satisfy mu_r < mu_{r-1} (mu_0 = infinity), mu_r < lambda_r,
/// and r <= length(lambda).
std::pair<SkewInterval, SkewInterval> lemma_sum2_split(const Partition& mu, const Partition& lambda,
                                                       std::size_t r);

/// Calls `fn` for every partition with exactly k parts and rank n, in
/// descending lexicographic order.
void for_each_partition(std::size_t k, long n, const std::function<void(const Partition&)>& fn);

/// Calls `fn` for every partition with exactly k parts and rank <= max_rank,
/// ordered by rank, then descending lexicographically.
void for_each_partition_up_to(std::size_t k, long max_rank,
                              const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_partitions(std::size_t k, long n);

/// Every nu with mu <= nu <= lambda, in descending lexicographic order.
std::vector<Partition> enumerate_interval(const Partition& mu, const Partition& lambda);

/// (alpha_{k,m}(r), beta_{k,m}(r)); 1 <= r <= k.
std::pair<Partition, Partition> alpha_beta(std::size_t k, int m, std::size_t r);

/// The shifted staircase (m+k, ..., m+1).
Partition shifted_staircase(std::size_t k, int m);

/// I_{k,m} = [(m+k, ..., m+1), (m+k)^k].  I_{0,m} = {empty}.
SkewInterval staircase_interval(std::size_t k, int m);
std::vector<Partition> enumerate_staircase_interval(std::size_t k, int m);

/// The k blocks [alpha_{k,m}(r), beta_{k,m}(r)], r = 1..k, partitioning I_{k,m}.
std::vector<SkewInterval> decompose_staircase_interval(std::size_t k, int m);

/// (lam, lam2) -> (k+m, lam_1..lam_{k-r}, lam2_1..lam2_{r-1}) for
/// lam in I_{k-r, r+m} and lam2 in I_{r-1, m}.
Partition concat_map(std::size_t k, int m, std::size_t r, const Partition& lam, const Partition& lam2);

}  // namespace ylat

template <>
struct std::hash<ylat::Partition> {
    std::size_t operator()(const ylat::Partition& p) const noexcept;
};

#endif  // YLAT_PARTITION_HPP
