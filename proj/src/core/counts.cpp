#include "ylat/counts.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "ylat/error.hpp"
#include "ylat/rankpoly.hpp"

namespace ylat {

unsigned worker_count() {
    if (const char* env = std::getenv("YL_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

BigInt c_kn(std::size_t k, long n) {
    if (n < 0)
        return 0;
    const std::size_t nn = static_cast<std::size_t>(n);
    // table[j][t] = partitions of t into exactly j parts
    //            = table[j-1][t-1] + table[j][t-j]
    std::vector<std::vector<BigInt>> table(k + 1, std::vector<BigInt>(nn + 1));
    table[0][0] = 1;
    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t t = j; t <= nn; ++t)
            table[j][t] = table[j - 1][t - 1] + table[j][t - j];
    return table[k][nn];
}

BigInt C_kn(std::size_t k, long n, int m) {
    if (k < 1)
        throw InvalidArgument("C_kn: k must be at least 1");
    if (m < 0)
        throw InvalidArgument("C_kn: m must be nonnegative");
    std::vector<Partition> parts;
    // |lambda| + m lambda_1 = n bounds |lambda| by n.
    for_each_partition_up_to(k, n, [&](const Partition& lam) {
        if (lam.rank() + static_cast<long>(m) * lam[0] == n)
            parts.push_back(lam);
    });

    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(parts.size(), 1)));
    if (workers <= 1) {
        BigInt total = 0;
        for (const auto& lam : parts)
            total += interval_count(lam);
        return total;
    }
    std::vector<BigInt> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < parts.size(); i += workers)
                partial[w] += interval_count(parts[i]);
        });
    }
    for (auto& t : threads)
        t.join();
    BigInt total = 0;
    for (const auto& p : partial)
        total += p;
    return total;
}

BigRational A_kn(std::size_t k, long n) {
    const BigInt c = c_kn(k, n);
    if (sgn(c) == 0)
        throw InvalidArgument("A_kn: no partitions with " + std::to_string(k) + " parts of rank " +
                              std::to_string(n));
    return BigRational(C_kn(k, n), c);
}

BigRational A_le_kn(std::size_t k, long n) {
    if (n < 1)
        throw InvalidArgument("A_le_kn: n must be positive");
    BigInt num = 0;
    BigInt den = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        const BigInt c = c_kn(j, n);
        if (sgn(c) == 0)
            continue;
        num += C_kn(j, n);
        den += c;
    }
    if (sgn(den) == 0)
        throw InvalidArgument("A_le_kn: no partitions to average over");
    return BigRational(num, den);
}

BigRational reciprocal_product(const Partition& lambda) {
    BigInt den = 1;
    for (int p : lambda.parts())
        den *= p;
    return BigRational(BigInt(1), den);
}

namespace {

std::mutex b_mutex;
std::map<std::pair<std::size_t, int>, BigRational> b_memo;

}  // namespace

BigRational b_recursive(std::size_t k, int m) {
    if (m < 0)
        throw InvalidArgument("b_recursive: m must be nonnegative");
    if (k == 0)
        return 1;
    {
        std::lock_guard lock(b_mutex);
        auto it = b_memo.find({k, m});
        if (it != b_memo.end())
            return it->second;
    }
    const long mk = static_cast<long>(k) + m;
    BigRational sum = 0;
    for (std::size_t r = 1; r <= k; ++r) {
        const long mr = static_cast<long>(r) + m;
        sum += b_recursive(k - r, static_cast<int>(mr)) * b_recursive(r - 1, m) / BigRational(mk * mr);
    }
    std::lock_guard lock(b_mutex);
    b_memo.try_emplace({k, m}, sum);
    return sum;
}

BigRational b_direct(std::size_t k, int m) {
    if (m < 0)
        throw InvalidArgument("b_direct: m must be nonnegative");
    if (k == 0)
        return 1;
    BigRational sum = 0;
    for (const auto& lam : enumerate_staircase_interval(k, m))
        sum += reciprocal_product(lam);
    const long top = static_cast<long>(k) + m;
    return sum / BigRational(falling_factorial(top, static_cast<long>(k)));
}

BigRational g_k(std::size_t k) {
    if (k < 1)
        throw InvalidArgument("g_k: k must be at least 1");
    BigRational sum = 0;
    for (const auto& lam : enumerate_staircase_interval(k, 0))
        sum += reciprocal_product(lam);
    const long kl = static_cast<long>(k);
    return sum * BigRational(factorial(kl - 1), factorial(2 * kl - 1));
}

BigRational g_k_from_b(std::size_t k) {
    if (k < 1)
        throw InvalidArgument("g_k_from_b: k must be at least 1");
    const long kl = static_cast<long>(k);
    return b_recursive(k, 0) * BigRational(factorial(kl) * factorial(kl - 1), factorial(2 * kl - 1));
}

std::vector<ConvergenceRow> convergence_table(std::size_t k, const std::vector<long>& n_values) {
    if (k < 1)
        throw InvalidArgument("convergence_table: k must be at least 1");
    const BigRational g = g_k(k);
    std::vector<ConvergenceRow> rows;
    for (long n : n_values) {
        const BigInt c = c_kn(k, n);
        if (sgn(c) == 0)
            continue;
        const BigInt big_c = C_kn(k, n);
        BigRational a(big_c, c);
        BigInt nk;
        mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        BigRational ratio = a / (g * BigRational(nk));
        rows.push_back({n, c, big_c, std::move(a), std::move(ratio)});
    }
    return rows;
}

}  // namespace ylat
