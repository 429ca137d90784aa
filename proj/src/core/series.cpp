#include "ylat/series.hpp"

#include <algorithm>

#include "ylat/error.hpp"
#include "ylat/partition.hpp"
#include "ylat/rankpoly.hpp"

namespace ylat {

namespace {

Exponents unit(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return e;
}

}  // namespace

MultiSeries qk_direct(std::size_t k, long trunc) {
    if (trunc < static_cast<long>(k))
        throw InvalidArgument("qk_direct: truncation order must be at least k");
    MultiSeries q(k, trunc);
    if (k == 0) {
        q.add_term({}, YPoly{1});
        return q;
    }
    for_each_partition_up_to(k, trunc, [&](const Partition& lam) {
        q.add_term(Exponents(lam.parts().begin(), lam.parts().end()), rank_gen_poly(lam));
    });
    return q;
}

MultiSeries qk_substituted(std::size_t k_minus_r, std::size_t r, long trunc) {
    if (r < 1)
        throw InvalidArgument("qk_substituted: r must be positive");
    const std::size_t k = k_minus_r + r;
    if (k_minus_r == 0)
        return MultiSeries::one(k, trunc);
    MultiSeries out(k, trunc);
    const long head = static_cast<long>(r) + 1;
    for_each_partition_up_to(k_minus_r, trunc, [&](const Partition& lam) {
        const long degree = head * lam[0] + (lam.rank() - lam[0]);
        if (degree > trunc)
            return;
        Exponents e(k, 0);
        for (std::size_t i = 0; i <= r; ++i)
            e[i] = lam[0];
        for (std::size_t i = 1; i < k_minus_r; ++i)
            e[r + i] = lam[i];
        out.add_term(e, rank_gen_poly(lam).shifted(r * static_cast<std::size_t>(lam[0])));
    });
    return out;
}

MultiSeries geometric_factor(const Exponents& monomial, std::size_t y_power, long trunc) {
    const long d = total_degree(monomial);
    if (d <= 0)
        throw InvalidArgument("geometric_factor: monomial must have positive degree");
    MultiSeries out(monomial.size(), trunc);
    Exponents e(monomial.size(), 0);
    for (long t = 0; t * d <= trunc; ++t) {
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<int>(t) * monomial[i];
        out.add_term(e, YPoly::monomial(static_cast<std::size_t>(t) * y_power));
    }
    return out;
}

MultiSeries qk_recursive(std::size_t k, long trunc) {
    if (k < 1)
        throw InvalidArgument("qk_recursive: k must be at least 1");
    if (trunc < static_cast<long>(k))
        throw InvalidArgument("qk_recursive: truncation order must be at least k");

    std::vector<MultiSeries> q;
    q.reserve(k + 1);
    q.push_back(MultiSeries::one(0, trunc));
    for (std::size_t kk = 1; kk <= k; ++kk) {
        const Exponents pk = MultiSeries::square_free(kk, kk);
        MultiSeries rhs = q[kk - 1].embedded(kk).times_monomial(unit(kk, kk - 1));
        MultiSeries lower_sum(kk, trunc);  // sum_{i<r} Q_i
        for (std::size_t r = 1; r <= kk; ++r) {
            lower_sum += q[r - 1].embedded(kk);
            MultiSeries term = geometric_factor(MultiSeries::square_free(kk, r), r, trunc) *
                               qk_substituted(kk - r, r, trunc);
            term = term * lower_sum;
            rhs += term.times_monomial(pk, r);
        }
        q.push_back(geometric_factor(pk, 0, trunc) * rhs);
    }
    return q[k];
}

MultiSeries dk_polynomial(std::size_t k, long trunc) {
    MultiSeries d = MultiSeries::one(k, trunc);
    for (std::size_t m = 1; m <= k; ++m) {
        const Exponents pm = MultiSeries::square_free(k, m);
        for (std::size_t j = 0; j <= m; ++j)
            d -= d.times_monomial(pm, j);
    }
    return d;
}

DenominatorReport dk_product_check(std::size_t k, long trunc) {
    if (k < 1)
        throw InvalidArgument("dk_product_check: k must be at least 1");
    MultiSeries prod = qk_direct(k, trunc);
    // Multiply one (1 - y^j p_m) factor at a time.
    for (std::size_t m = 1; m <= k; ++m) {
        const Exponents pm = MultiSeries::square_free(k, m);
        for (std::size_t j = 0; j <= m; ++j)
            prod -= prod.times_monomial(pm, j);
    }
    const long d0 = prod.max_degree();
    return {std::move(prod), d0, trunc, d0 < trunc};
}

MultiSeries specialize_y0(std::size_t k, long trunc) {
    return qk_direct(k, trunc).map_coefficients([](const YPoly& p) { return YPoly::constant(p.coeff(0)); });
}

MultiSeries y0_product_formula(std::size_t k, long trunc) {
    MultiSeries out = MultiSeries::monomial(MultiSeries::square_free(k, k), YPoly{1}, trunc);
    for (std::size_t m = 1; m <= k; ++m)
        out = out * geometric_factor(MultiSeries::square_free(k, m), 0, trunc);
    return out;
}

UniSeries specialize_univariate(const MultiSeries& s, const std::vector<int>& weights, const BigInt& y_value) {
    if (weights.size() != s.nvars())
        throw InvalidArgument("specialize_univariate: one weight per variable required");
    if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 1; }))
        throw InvalidArgument("specialize_univariate: weights must be positive");
    UniSeries out(static_cast<std::size_t>(s.trunc()) + 1);
    for (const auto& [e, c] : s.terms()) {
        long deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            deg += static_cast<long>(weights[i]) * e[i];
        if (deg <= s.trunc())
            out[static_cast<std::size_t>(deg)] += c.evaluate(y_value);
    }
    return out;
}

UniSeries qk_xm(std::size_t k, int m, long trunc) {
    if (m < 0 || trunc < 0)
        throw InvalidArgument("qk_xm: m and trunc must be nonnegative");
    UniSeries out(static_cast<std::size_t>(trunc) + 1);
    if (k == 0) {
        out[0] = 1;
        return out;
    }
    for_each_partition_up_to(k, trunc, [&](const Partition& lam) {
        const long n = lam.rank() + static_cast<long>(m) * lam[0];
        if (n <= trunc)
            out[static_cast<std::size_t>(n)] += interval_count(lam);
    });
    return out;
}

XmReport verify_xm_recursion(std::size_t k, int m, long trunc) {
    if (k < 1)
        throw InvalidArgument("verify_xm_recursion: k must be at least 1");
    if (m < 0 || trunc < 0)
        throw InvalidArgument("verify_xm_recursion: m and trunc must be nonnegative");
    const long km = static_cast<long>(k) + m;
    const UniSeries lhs = qk_xm(k, m, trunc);

    // x_k becomes x^{m+1} when it is the first variable, x otherwise.
    const long lead_shift = k == 1 ? m + 1 : 1;
    const UniSeries first = uni::shift(qk_xm(k - 1, m, trunc), lead_shift, trunc);
    UniSeries rest(static_cast<std::size_t>(trunc) + 1);
    for (std::size_t r = 1; r <= k; ++r) {
        const UniSeries upper = qk_xm(k - r, static_cast<int>(r) + m, trunc);
        const UniSeries geo_r = uni::geometric(static_cast<long>(r) + m, trunc);
        for (std::size_t i = 0; i < r; ++i) {
            UniSeries t = uni::mul(upper, qk_xm(i, m, trunc), trunc);
            t = uni::mul(uni::shift(t, km, trunc), geo_r, trunc);
            rest = uni::add(rest, t);
        }
    }
    const UniSeries geo_k = uni::geometric(km, trunc);
    const UniSeries rhs = uni::mul(uni::add(first, rest), geo_k, trunc);

    // Multiplied through by (1 - x^{k+m}): no series inversion on the left.
    const UniSeries lhs_times = uni::sub(lhs, uni::shift(lhs, km, trunc));
    const UniSeries rhs_times = uni::add(first, rest);

    long mismatch = -1;
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        if (lhs[n] != rhs[n] || lhs_times[n] != rhs_times[n]) {
            mismatch = static_cast<long>(n);
            break;
        }
    }
    return {mismatch < 0, mismatch, lhs, rhs};
}

namespace uni {

UniSeries add(const UniSeries& a, const UniSeries& b) {
    UniSeries out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

UniSeries sub(const UniSeries& a, const UniSeries& b) {
    UniSeries out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return out;
}

UniSeries mul(const UniSeries& a, const UniSeries& b, long trunc) {
    const std::size_t len = static_cast<std::size_t>(trunc) + 1;
    UniSeries out(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

UniSeries shift(const UniSeries& a, long shift, long trunc) {
    const std::size_t len = static_cast<std::size_t>(trunc) + 1;
    UniSeries out(len);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(shift);
        if (j >= len)
            break;
        out[j] = a[i];
    }
    return out;
}

UniSeries geometric(long step, long trunc) {
    if (step < 1)
        throw InvalidArgument("geometric: step must be positive");
    UniSeries out(static_cast<std::size_t>(trunc) + 1);
    for (long i = 0; i <= trunc; i += step)
        out[static_cast<std::size_t>(i)] = 1;
    return out;
}

}  // namespace uni

}  // namespace ylat
