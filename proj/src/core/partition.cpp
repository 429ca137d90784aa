#include "ylat/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ylat/error.hpp"

namespace ylat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size())
            throw InvalidArgument("malformed partition '" + std::string(text) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const InvalidArgument& e) {
        throw InvalidArgument("invalid partition '" + std::string(text) + "': " + e.what());
    }
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long Partition::rank() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

bool contains(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length())
        return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i])
            return false;
    return true;
}

SkewInterval::SkewInterval(Partition lower, Partition upper) : mu(std::move(lower)), lambda(std::move(upper)) {
    if (!contains(mu, lambda))
        throw PreconditionError("(" + mu.to_string() + ") is not contained in (" + lambda.to_string() + ")");
}

Partition rho(const Partition& lambda, int power) {
    if (power < 0)
        throw InvalidArgument("rho power must be nonnegative");
    if (power > lambda[0])
        throw InvalidArgument("rho power exceeds the largest part");
    std::vector<int> out;
    for (int p : lambda.parts())
        if (p > power)
            out.push_back(p - power);
    return Partition(std::move(out));
}

std::pair<Partition, Partition> slice(const Partition& lambda, std::size_t r) {
    if (r > lambda.length())
        throw InvalidArgument("slice index out of range");
    const auto parts = lambda.parts();
    return {Partition(std::vector<int>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(r))),
            Partition(std::vector<int>(parts.begin() + static_cast<std::ptrdiff_t>(r), parts.end()))};
}

Partition concat(const Partition& head, const Partition& tail) {
    std::vector<int> parts(head.parts().begin(), head.parts().end());
    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
    return Partition(std::move(parts));
}

Partition rectangle(int n, std::size_t k) {
    if (n < 0)
        throw InvalidArgument("rectangle width must be nonnegative");
    return n == 0 ? Partition{} : Partition(std::vector<int>(k, n));
}

std::pair<SkewInterval, SkewInterval> lemma_sum_split(const Partition& mu, const Partition& lambda,
                                                      std::size_t r) {
    if (!contains(mu, lambda))
        throw PreconditionError("lemma_sum_split: mu is not contained in lambda");
    if (r < 1 || r > lambda.length())
        throw PreconditionError("lemma_sum_split: row index out of range");
    const int lr = lambda[r - 1];
    if (lr <= lambda[r])
        throw PreconditionError("lemma_sum_split: need lambda_r > lambda_{r+1}");
    if (mu[r - 1] >= lr)
        throw PreconditionError("lemma_sum_split: need mu_r < lambda_r");

    std::vector<int> left(lambda.parts().begin(), lambda.parts().end());
    left[r - 1] -= 1;
    std::vector<int> right(std::max(mu.length(), r), 0);
    for (std::size_t i = 0; i < right.size(); ++i)
        right[i] = i < r ? std::max(mu[i], lr) : mu[i];
    return {SkewInterval(mu, Partition(std::move(left))), SkewInterval(Partition(std::move(right)), lambda)};
}

std::pair<SkewInterval, SkewInterval> lemma_sum2_split(const Partition& mu, const Partition& lambda,
                                                       std::size_t r) {
    if (!contains(mu, lambda))
        throw PreconditionError("lemma_sum2_split: mu is not contained in lambda");
    if (r < 1 || r > lambda.length())
        throw PreconditionError("lemma_sum2_split: row index out of range");
    const int mr = mu[r - 1];
    if (r > 1 && mr >= mu[r - 2])
        throw PreconditionError("lemma_sum2_split: need mu_r < mu_{r-1}");
    if (mr >= lambda[r - 1])
        throw PreconditionError("lemma_sum2_split: need mu_r < lambda_r");

    std::vector<int> raised(std::max(mu.length(), r), 0);
    for (std::size_t i = 0; i < raised.size(); ++i)
        raised[i] = mu[i];
    raised[r - 1] += 1;
    std::vector<int> capped(lambda.length());
    for (std::size_t i = 0; i < capped.size(); ++i)
        capped[i] = i + 1 < r ? lambda[i] : std::min(lambda[i], mr);
    return {SkewInterval(Partition(std::move(raised)), lambda), SkewInterval(mu, Partition(std::move(capped)))};
}

namespace {

// Parts k..1 of a partition of n with every part <= cap, largest first.
void partitions_rec(std::vector<int>& buf, std::size_t k, long n, long cap,
                    const std::function<void(const Partition&)>& fn) {
    if (k == 0) {
        if (n == 0)
            fn(Partition(buf));
        return;
    }
    const long hi = std::min(cap, n - static_cast<long>(k - 1));
    const long lo = std::max(1L, (n + static_cast<long>(k) - 1) / static_cast<long>(k));
    for (long a = hi; a >= lo; --a) {
        buf.push_back(static_cast<int>(a));
        partitions_rec(buf, k - 1, n - a, a, fn);
        buf.pop_back();
    }
}

void interval_rec(std::vector<int>& buf, const Partition& mu, const Partition& lambda, int prev,
                  std::vector<Partition>& out) {
    const std::size_t i = buf.size();
    if (i == lambda.length()) {
        out.emplace_back(buf);
        return;
    }
    for (int v = std::min(prev, lambda[i]); v >= mu[i]; --v) {
        buf.push_back(v);
        interval_rec(buf, mu, lambda, v, out);
        buf.pop_back();
    }
}

bool in_interval(const Partition& p, const SkewInterval& iv) {
    return contains(iv.mu, p) && contains(p, iv.lambda);
}

}  // namespace

void for_each_partition(std::size_t k, long n, const std::function<void(const Partition&)>& fn) {
    if (n < static_cast<long>(k) || (k == 0 && n != 0))
        return;
    std::vector<int> buf;
    buf.reserve(k);
    partitions_rec(buf, k, n, n, fn);
}

void for_each_partition_up_to(std::size_t k, long max_rank, const std::function<void(const Partition&)>& fn) {
    for (long n = static_cast<long>(k); n <= max_rank; ++n)
        for_each_partition(k, n, fn);
}

std::vector<Partition> enumerate_partitions(std::size_t k, long n) {
    std::vector<Partition> out;
    for_each_partition(k, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_interval(const Partition& mu, const Partition& lambda) {
    if (!contains(mu, lambda))
        throw PreconditionError("enumerate_interval: mu is not contained in lambda");
    std::vector<Partition> out;
    std::vector<int> buf;
    interval_rec(buf, mu, lambda, lambda[0], out);
    return out;
}

std::pair<Partition, Partition> alpha_beta(std::size_t k, int m, std::size_t r) {
    if (r < 1 || r > k)
        throw InvalidArgument("alpha_beta: need 1 <= r <= k");
    if (m < 0)
        throw InvalidArgument("alpha_beta: need m >= 0");
    const int ki = static_cast<int>(k);
    const std::size_t split = k - r + 1;
    std::vector<int> alpha(k), beta(k);
    for (std::size_t i = 1; i <= k; ++i) {
        const int ii = static_cast<int>(i);
        if (i == 1)
            alpha[i - 1] = m + ki;
        else if (i > split)
            alpha[i - 1] = m + ki + 1 - ii;
        else
            alpha[i - 1] = m + ki + 2 - ii;
        beta[i - 1] = i <= split ? m + ki : m + static_cast<int>(r) - 1;
    }
    return {Partition(std::move(alpha)), Partition(std::move(beta))};
}

Partition shifted_staircase(std::size_t k, int m) {
    if (m < 0)
        throw InvalidArgument("staircase shift must be nonnegative");
    std::vector<int> parts(k);
    for (std::size_t i = 0; i < k; ++i)
        parts[i] = m + static_cast<int>(k - i);
    return Partition(std::move(parts));
}

SkewInterval staircase_interval(std::size_t k, int m) {
    return SkewInterval(shifted_staircase(k, m), rectangle(m + static_cast<int>(k), k));
}

std::vector<Partition> enumerate_staircase_interval(std::size_t k, int m) {
    const SkewInterval iv = staircase_interval(k, m);
    return enumerate_interval(iv.mu, iv.lambda);
}

std::vector<SkewInterval> decompose_staircase_interval(std::size_t k, int m) {
    if (k < 1)
        throw InvalidArgument("decompose_staircase_interval: need k >= 1");
    std::vector<SkewInterval> blocks;
    blocks.reserve(k);
    for (std::size_t r = 1; r <= k; ++r) {
        auto [alpha, beta] = alpha_beta(k, m, r);
        blocks.emplace_back(std::move(alpha), std::move(beta));
    }
    return blocks;
}

Partition concat_map(std::size_t k, int m, std::size_t r, const Partition& lam, const Partition& lam2) {
    if (r < 1 || r > k || m < 0)
        throw InvalidArgument("concat_map: need 1 <= r <= k and m >= 0");
    if (!in_interval(lam, staircase_interval(k - r, static_cast<int>(r) + m)))
        throw PreconditionError("concat_map: first argument is not in I_{k-r, r+m}");
    if (!in_interval(lam2, staircase_interval(r - 1, m)))
        throw PreconditionError("concat_map: second argument is not in I_{r-1, m}");
    std::vector<int> parts;
    parts.reserve(k);
    parts.push_back(static_cast<int>(k) + m);
    parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
    parts.insert(parts.end(), lam2.parts().begin(), lam2.parts().end());
    return Partition(std::move(parts));
}

}  // namespace ylat

std::size_t std::hash<ylat::Partition>::operator()(const ylat::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ULL;
    }
    return h;
}
