#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "printers.hpp"
#include "ylat/error.hpp"
#include "ylat/rankpoly.hpp"
#include "ylat/series.hpp"
#include "ylat/verify.hpp"

using namespace ylat;

namespace {

struct Term {
    Exponents exps;
    std::size_t ypow;
    long coeff;
};

MultiSeries from_terms(std::size_t nvars, long trunc, const std::vector<Term>& terms) {
    MultiSeries s(nvars, trunc);
    for (const auto& t : terms)
        s.add_term(t.exps, YPoly::monomial(t.ypow, t.coeff));
    return s;
}

// x1 + (x1 - x1^2) y
MultiSeries q1_numerator(long trunc) { return from_terms(1, trunc, {{{1}, 0, 1}, {{1}, 1, 1}, {{2}, 1, -1}}); }

// x1x2 + (x1x2 - x1^2x2 - x1^2x2^2) y + (x1x2 - x1^2x2^2) y^2 + (x1^3x2^3 - x1^2x2^2) y^3
MultiSeries q2_numerator(long trunc) {
    return from_terms(2, trunc,
                      {{{1, 1}, 0, 1},
                       {{1, 1}, 1, 1},
                       {{2, 1}, 1, -1},
                       {{2, 2}, 1, -1},
                       {{1, 1}, 2, 1},
                       {{2, 2}, 2, -1},
                       {{3, 3}, 3, 1},
                       {{2, 2}, 3, -1}});
}

Exponents p(std::size_t nvars, std::size_t m) { return MultiSeries::square_free(nvars, m); }

// 1 / prod (1 - y^j p_m) over the factors of D_k
MultiSeries inverse_dk(std::size_t k, long trunc) {
    MultiSeries out = MultiSeries::one(k, trunc);
    for (std::size_t m = 1; m <= k; ++m)
        for (std::size_t j = 0; j <= m; ++j)
            out = out * geometric_factor(p(k, m), j, trunc);
    return out;
}

MultiSeries restrict_last(const MultiSeries& s, std::size_t k, int m) {
    MultiSeries out(s.nvars(), s.trunc());
    for (const auto& [e, c] : s.terms())
        if (e[k - 1] == m)
            out.add_term(e, c);
    return out;
}

MultiSeries lower_sum(std::size_t upto, std::size_t nvars, long trunc) {
    MultiSeries out(nvars, trunc);
    for (std::size_t i = 0; i < upto; ++i)
        out += qk_direct(i, trunc).embedded(nvars);
    return out;
}

Exponents exps_of(const Partition& lam, std::size_t nvars) {
    Exponents e(nvars, 0);
    for (std::size_t i = 0; i < lam.length(); ++i)
        e[i] = lam[i];
    return e;
}

// Partitions of length k, rank <= trunc, last part m.
std::vector<Partition> lambda_km(std::size_t k, int m, long trunc) {
    std::vector<Partition> out;
    for (long n = 0; n <= trunc; ++n)
        for (const auto& lam : enumerate_partitions(k, n))
            if (lam[k - 1] == m)
                out.push_back(lam);
    return out;
}

// Q_{k-r}(Z_r) restricted to lambda''_{k-r} = last, built term by term.
MultiSeries substituted_oracle(std::size_t k, std::size_t r, int last, long trunc) {
    MultiSeries out(k, trunc);
    for (long n = 0; n <= trunc; ++n)
        for (const auto& lam : enumerate_partitions(k - r, n)) {
            if (last >= 0 && lam[k - r - 1] != last)
                continue;
            Exponents e(k, 0);
            for (std::size_t i = 0; i <= r; ++i)
                e[i] = lam[0];
            for (std::size_t i = 1; i < k - r; ++i)
                e[r + i] = lam[i];
            out.add_term(e, oracle::interval_poly(Partition{}, lam).shifted(r * static_cast<std::size_t>(lam[0])));
        }
    return out;
}

MultiSeries random_series(std::mt19937& rng, std::size_t nvars, long trunc) {
    std::uniform_int_distribution<int> expo(0, 3), coef(-4, 4), terms(0, 6);
    MultiSeries s(nvars, trunc);
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(nvars);
        for (auto& v : e)
            v = expo(rng);
        s.add_term(e, YPoly{coef(rng), coef(rng), coef(rng)});
    }
    return s;
}

}  // namespace

TEST_SUITE("multiseries") {

TEST_CASE("basic operations") {
    MultiSeries a(2, 4);
    a.add_term({1, 0}, YPoly{1, 1});
    a.add_term({3, 2}, YPoly{1});
    CHECK(a.size() == 1);
    a.add_term({1, 0}, YPoly{-1, -1});
    CHECK(a.is_zero());
    CHECK(MultiSeries::square_free(4, 2) == Exponents{1, 1, 0, 0});
    CHECK(MultiSeries::one(3, 5).coeff({0, 0, 0}) == YPoly{1});
    CHECK(MultiSeries::monomial({1, 1}, YPoly{0, 1}, 4).times_monomial({1, 0}, 2).coeff({2, 1}) == YPoly{0, 0, 0, 1});
    CHECK_THROWS(MultiSeries(2, 4) + MultiSeries(3, 4));
    CHECK_THROWS(MultiSeries(2, 4).add_term({1}, YPoly{1}));
}

TEST_CASE("graded lex order") {
    MultiSeries s(2, 4);
    s.add_term({0, 2}, YPoly{1});
    s.add_term({1, 0}, YPoly{1});
    s.add_term({2, 0}, YPoly{1});
    s.add_term({1, 1}, YPoly{1});
    std::vector<Exponents> order;
    for (const auto& [e, c] : s.terms())
        order.push_back(e);
    CHECK(order == std::vector<Exponents>{{1, 0}, {2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("ring axioms, random") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t nvars = 1 + trial % 3;
        const long trunc = 3 + trial % 5;
        const auto a = random_series(rng, nvars, trunc);
        const auto b = random_series(rng, nvars, trunc);
        const auto c = random_series(rng, nvars, trunc);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * MultiSeries::one(nvars, trunc) == a);
    }
}

}  // TEST_SUITE

TEST_SUITE("series") {

TEST_CASE("qk_direct") {
    const auto q2 = qk_direct(2, 4);
    CHECK(q2.coeff({2, 1}) == YPoly{1, 1, 2, 1});
    CHECK(q2.coeff({1, 1}) == YPoly{1, 1, 1});
    CHECK(q2.coeff({1, 0}).is_zero());
    CHECK(qk_direct(0, 6) == MultiSeries::one(0, 6));
    CHECK_THROWS_AS(qk_direct(3, 2), InvalidArgument);
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto q = qk_direct(k, 9);
        for (const auto& [e, c] : q.terms())
            REQUIRE(c == oracle::interval_poly(Partition{}, Partition(std::vector<int>(e.begin(), e.end()))));
    }
}

TEST_CASE("geometric_factor") {
    CHECK(geometric_factor({1}, 0, 3) == from_terms(1, 3, {{{0}, 0, 1}, {{1}, 0, 1}, {{2}, 0, 1}, {{3}, 0, 1}}));
    CHECK(geometric_factor({1, 1}, 1, 4) == from_terms(2, 4, {{{0, 0}, 0, 1}, {{1, 1}, 1, 1}, {{2, 2}, 2, 1}}));
    for (long n = 2; n <= 9; ++n) {
        MultiSeries one_minus = MultiSeries::one(2, n);
        one_minus.add_term({1, 1}, YPoly::monomial(1, -1));
        CHECK(one_minus * geometric_factor({1, 1}, 1, n) == MultiSeries::one(2, n));
    }
}

TEST_CASE("qk_substituted") {
    CHECK(qk_substituted(0, 3, 6) == MultiSeries::one(3, 6));
    MultiSeries want(2, 6);
    for (int a = 1; a <= 3; ++a)
        want.add_term({a, a}, rank_gen_poly(Partition{a}).shifted(static_cast<std::size_t>(a)));
    CHECK(qk_substituted(1, 1, 6) == want);
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t r = 1; r < k; ++r)
            CHECK(qk_substituted(k - r, r, 10) == substituted_oracle(k, r, -1, 10));
}

TEST_CASE("recursion equals definition") {
    for (std::size_t k = 1; k <= 4; ++k)
        for (long n = static_cast<long>(k); n <= 10; ++n)
            REQUIRE_MESSAGE(qk_recursive(k, n) == qk_direct(k, n), "k=" << k << " N=" << n);
}

TEST_CASE("closed forms for Q_1 and Q_2") {
    CHECK(closed_form_numerator(1, 12) == q1_numerator(12));
    CHECK(closed_form_numerator(2, 12) == q2_numerator(12));
    CHECK_FALSE(closed_form_numerator(3, 12).has_value());
    CHECK(q1_numerator(12) * inverse_dk(1, 12) == qk_direct(1, 12));
    CHECK(q2_numerator(12) * inverse_dk(2, 12) == qk_direct(2, 12));
    CHECK(qk_recursive(1, 6) == q1_numerator(6) * inverse_dk(1, 6));
    CHECK(*closed_form_q(2, 10) == qk_direct(2, 10));
}

TEST_CASE("dk_product_check") {
    const auto d1 = dk_product_check(1, 8);
    CHECK(d1.product == q1_numerator(8));
    CHECK(d1.stabilized);
    CHECK(d1.max_degree == 2);

    const auto d2 = dk_product_check(2, 10);
    CHECK(d2.product == q2_numerator(10));
    CHECK(d2.product.size() == 4);
    CHECK(d2.max_degree == 6);
    CHECK(d2.stabilized);

    // The numerator of Q_3 reaches degree 15, so 12 is not enough.
    const auto d3_short = dk_product_check(3, 12);
    CHECK_FALSE(d3_short.stabilized);
    for (long n : {16L, 20L, 24L}) {
        const auto d3 = dk_product_check(3, n);
        CHECK(d3.stabilized);
        CHECK(d3.max_degree == 15);
    }
    CHECK(dk_product_check(3, 24).product == dk_product_check(3, 16).product);

    const auto d4 = dk_product_check(4, 36);
    CHECK(d4.stabilized);
    CHECK(d4.max_degree == 31);

    CHECK(dk_polynomial(1, 5) == from_terms(1, 5, {{{0}, 0, 1}, {{1}, 0, -1}, {{1}, 1, -1}, {{2}, 1, 1}}));
}

TEST_CASE("y = 0 specialisation") {
    const auto s1 = specialize_y0(1, 6);
    for (int a = 1; a <= 6; ++a)
        CHECK(s1.coeff({a}) == YPoly{1});
    CHECK(s1.size() == 6);

    const auto s2 = specialize_y0(2, 5);
    MultiSeries want(2, 5);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= a && a + b <= 5; ++b)
            want.add_term({a, b}, YPoly{1});
    CHECK(s2 == want);

    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(specialize_y0(k, 12) == y0_product_formula(k, 12));
        const auto uni = specialize_univariate(specialize_y0(k, 16), std::vector<int>(k, 1), 0);
        for (long n = 0; n <= 16; ++n)
            REQUIRE(uni[static_cast<std::size_t>(n)] == static_cast<unsigned long>(oracle::partitions_exact(k, n).size()));
    }
}

TEST_CASE("qk_xm") {
    CHECK(qk_xm(1, 0, 5)[3] == 4);
    CHECK(qk_xm(1, 1, 6)[4] == 3);
    CHECK(qk_xm(2, 0, 5)[3] == 5);
    CHECK(qk_xm(0, 2, 4) == UniSeries{1, 0, 0, 0, 0});

    // (2x^{m+1} - x^{2m+2}) / (1 - x^{m+1})^2
    for (int m = 0; m <= 3; ++m) {
        const long n = 24;
        UniSeries num(n + 1);
        num[static_cast<std::size_t>(m + 1)] += 2;
        num[static_cast<std::size_t>(2 * m + 2)] -= 1;
        const auto g = uni::geometric(m + 1, n);
        CHECK(qk_xm(1, m, n) == uni::mul(uni::mul(num, g, n), g, n));
    }

    for (std::size_t k = 1; k <= 3; ++k)
        for (int m = 0; m <= 2; ++m) {
            std::vector<int> weights(k, 1);
            weights[0] = m + 1;
            CHECK(qk_xm(k, m, 20) == specialize_univariate(qk_direct(k, 20), weights, 1));
        }
}

TEST_CASE("single-variable recursion") {
    CHECK(verify_xm_recursion(1, 0, 30).ok);
    CHECK(verify_xm_recursion(2, 1, 30).ok);
    CHECK(verify_xm_recursion(3, 2, 25).ok);
    for (std::size_t k = 1; k <= 3; ++k)
        for (int m = 0; m <= 2; ++m) {
            const auto rep = verify_xm_recursion(k, m, 30);
            CHECK_MESSAGE(rep.ok, "k=" << k << " m=" << m << " first mismatch " << rep.first_mismatch);
        }
}

TEST_CASE("single-variable recursion with a bare x leading term") {
    // Taking x instead of x^{m+1} for the leading factor at k = 1 breaks the
    // identity as soon as m >= 1; for k >= 2 the two readings agree.
    auto literal_rhs = [](std::size_t k, int m, long n) {
        const auto top = uni::geometric(static_cast<long>(k) + m, n);
        UniSeries rhs = uni::mul(uni::shift(qk_xm(k - 1, m, n), 1, n), top, n);
        for (std::size_t r = 1; r <= k; ++r)
            for (std::size_t i = 0; i < r; ++i) {
                UniSeries t = uni::mul(qk_xm(k - r, m + static_cast<int>(r), n), qk_xm(i, m, n), n);
                t = uni::mul(t, uni::geometric(static_cast<long>(r) + m, n), n);
                t = uni::mul(t, top, n);
                rhs = uni::add(rhs, uni::shift(t, static_cast<long>(k) + m, n));
            }
        return rhs;
    };
    CHECK(literal_rhs(1, 0, 30) == qk_xm(1, 0, 30));
    CHECK(literal_rhs(1, 1, 30) != qk_xm(1, 1, 30));
    CHECK(literal_rhs(1, 2, 30) != qk_xm(1, 2, 30));
    for (std::size_t k = 2; k <= 3; ++k)
        for (int m = 0; m <= 2; ++m)
            CHECK(literal_rhs(k, m, 30) == qk_xm(k, m, 30));
}

TEST_CASE("Q_{k,1} recursion") {
    const long n = 10;
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto lhs = restrict_last(qk_direct(k, n), k, 1);
        Exponents xk(k, 0);
        xk[k - 1] = 1;
        const auto rhs = qk_direct(k - 1, n).embedded(k).times_monomial(xk) +
                         lower_sum(k, k, n).times_monomial(p(k, k), k);
        CHECK_MESSAGE(lhs == rhs, "k=" << k);
    }
}

TEST_CASE("summand identities for m >= 2") {
    const long n = 10;
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto qk = qk_direct(k, n);
        const auto below = lower_sum(k, k, n);
        for (int m = 2; m <= 3; ++m) {
            const auto lams = lambda_km(k, m, n);

            MultiSeries first(k, n), second(k, n);
            for (const auto& lam : lams) {
                first.add_term(exps_of(lam, k), rank_gen_poly(rho(lam, 1)));
                second.add_term(exps_of(lam, k), rank_gen_poly(rectangle(m, k), lam));
            }
            CHECK(first == restrict_last(qk, k, m - 1).times_monomial(p(k, k)));
            MultiSeries second_rhs = below;
            for (int t = 0; t < m; ++t)
                second_rhs = second_rhs.times_monomial(p(k, k), k);
            CHECK(second == second_rhs);

            MultiSeries third_total(k, n);
            for (std::size_t r = 1; r < k; ++r) {
                MultiSeries third(k, n);
                for (const auto& lam : lams) {
                    const auto [head, tail] = slice(lam, r);
                    third.add_term(exps_of(lam, k), rank_gen_poly(rectangle(lam[r - 1], r), head) *
                                                        rank_gen_poly(rho(tail, 1)));
                }
                third_total += third;
                const auto zr = substituted_oracle(k, r, m - 1, n);
                CHECK(restrict_last(qk_substituted(k - r, r, n), k, m - 1) == zr);
                const auto core = (lower_sum(r, k, n) * zr).times_monomial(p(k, k), r);
                // multiplied through by (1 - y^r p_r)
                CHECK(third - third.times_monomial(p(k, r), r) == core);
                CHECK(third == core * geometric_factor(p(k, r), r, n));
            }

            // Q_{k,m} = p_k Q_{k,m-1} + (y^k p_k)^m sum Q_i + third summands
            CHECK(restrict_last(qk, k, m) == first + second + third_total);
        }
    }
}

TEST_CASE("product-sum expansion of P_lambda") {
    for (const auto& lp : oracle::all_partitions(12)) {
        const Partition lam(lp);
        const std::size_t k = lam.length();
        if (k == 0)
            continue;
        YPoly rhs = rank_gen_poly(rho(lam, 1)) + rank_gen_poly(rectangle(lam[k - 1], k), lam);
        for (std::size_t r = 1; r < k; ++r) {
            const auto [head, tail] = slice(lam, r);
            rhs += rank_gen_poly(rectangle(lam[r - 1], r), head) * rank_gen_poly(rho(tail, 1));
        }
        REQUIRE_MESSAGE(rank_gen_poly(lam) == rhs, lam);
    }
}

}  // TEST_SUITE
