#include "ylat/rankpoly.hpp"

#include <vector>

#include "memo.hpp"
#include "ylat/error.hpp"

namespace ylat {

namespace {

struct IntervalKey {
    Partition mu;
    Partition lambda;
    friend bool operator==(const IntervalKey&, const IntervalKey&) = default;
};

struct IntervalKeyHash {
    std::size_t operator()(const IntervalKey& k) const noexcept {
        const std::hash<Partition> h;
        return h(k.mu) * 0x9e3779b97f4a7c15ULL ^ h(k.lambda);
    }
};

template <class V>
using IntervalMemo = detail::SharedMemo<IntervalKey, V, IntervalKeyHash>;

IntervalMemo<YPoly>& poly_memo() {
    static IntervalMemo<YPoly> memo;
    return memo;
}

IntervalMemo<BigInt>& count_memo() {
    static IntervalMemo<BigInt> memo;
    return memo;
}

YPoly base_value(const Partition& lambda, const YPoly*) {
    return YPoly::monomial(static_cast<std::size_t>(lambda.rank()));
}
BigInt base_value(const Partition&, const BigInt*) { return 1; }

// First row r (1-based, r < length) where mu and lambda agree, or 0.
std::size_t product_row(const Partition& mu, const Partition& lambda) {
    for (std::size_t r = 1; r < lambda.length(); ++r)
        if (mu[r - 1] == lambda[r - 1])
            return r;
    return 0;
}

// Smallest r with lambda_r > lambda_{r+1} and mu_r < lambda_r.  Exists
// whenever mu != lambda.
std::size_t sum_row(const Partition& mu, const Partition& lambda) {
    for (std::size_t r = 1; r <= lambda.length(); ++r)
        if (lambda[r - 1] > lambda[r] && mu[r - 1] < lambda[r - 1])
            return r;
    return 0;
}

template <class V>
V evaluate(const Partition& mu, const Partition& lambda, IntervalMemo<V>& memo) {
    if (mu == lambda)
        return base_value(lambda, static_cast<const V*>(nullptr));
    IntervalKey key{mu, lambda};
    if (auto hit = memo.find(key))
        return *std::move(hit);

    V value;
    if (const std::size_t r = product_row(mu, lambda)) {
        const auto [mu_top, mu_bottom] = slice(mu, std::min(r, mu.length()));
        const auto [lam_top, lam_bottom] = slice(lambda, r);
        value = evaluate(mu_top, lam_top, memo) * evaluate(mu_bottom, lam_bottom, memo);
    } else {
        const std::size_t s = sum_row(mu, lambda);
        if (s == 0)
            throw ArithmeticError("no valid split row for a non-trivial interval");
        const auto [left, right] = lemma_sum_split(mu, lambda, s);
        value = evaluate(left.mu, left.lambda, memo);
        value += evaluate(right.mu, right.lambda, memo);
    }
    memo.insert(std::move(key), value);
    return value;
}

}  // namespace

YPoly rank_gen_poly(const Partition& mu, const Partition& lambda) {
    if (!contains(mu, lambda))
        throw PreconditionError("rank_gen_poly: (" + mu.to_string() + ") is not contained in (" +
                                lambda.to_string() + ")");
    return evaluate(mu, lambda, poly_memo());
}

BigInt interval_count(const Partition& mu, const Partition& lambda) {
    if (!contains(mu, lambda))
        throw PreconditionError("interval_count: (" + mu.to_string() + ") is not contained in (" +
                                lambda.to_string() + ")");
    return evaluate(mu, lambda, count_memo());
}

YPoly gaussian_poly(int n, int k) {
    if (n < 0 || k < 0)
        throw InvalidArgument("gaussian_poly: n and k must be nonnegative");
    YPoly num{1};
    YPoly den{1};
    for (int i = 1; i <= k; ++i) {
        num *= YPoly{1} - YPoly::monomial(static_cast<std::size_t>(n + i));
        den *= YPoly{1} - YPoly::monomial(static_cast<std::size_t>(i));
    }
    return num.divide_exact(den);
}

YPoly poincare_poly(const Partition& lambda) { return rank_gen_poly(lambda).stretch(2); }

MemoStats rankpoly_memo_stats() { return {poly_memo().size(), count_memo().size()}; }

void clear_rankpoly_memos() {
    poly_memo().clear();
    count_memo().clear();
}

}  // namespace ylat
