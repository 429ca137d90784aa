#include <doctest.h>

#include <random>
#include <thread>

#include "oracle.hpp"
#include "printers.hpp"
#include "ylat/error.hpp"
#include "ylat/rankpoly.hpp"

using namespace ylat;

TEST_SUITE("bigint") {

TEST_CASE("rational basics") {
    const BigRational a(BigInt(6), BigInt(-4));
    CHECK(a.to_string() == "-3/2");
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(BigRational(BigInt(4), BigInt(2)).to_string() == "2");
    CHECK(BigRational::parse("49/6480") == BigRational(BigInt(49), BigInt(6480)));
    CHECK(BigRational::parse("-7") == BigRational(-7));
    CHECK(BigRational::parse("10/4").to_string() == "5/2");
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), InvalidArgument);
    CHECK_THROWS_AS(BigRational::parse("1/0"), InvalidArgument);
    CHECK_THROWS_AS(BigRational::parse("x/2"), InvalidArgument);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), InvalidArgument);
    CHECK(BigRational(1) / BigRational(3) + BigRational(1) / BigRational(6) == BigRational(BigInt(1), BigInt(2)));
    CHECK(BigRational(BigInt(1), BigInt(3)) < BigRational(BigInt(1), BigInt(2)));
    CHECK(BigRational(-2).abs() == BigRational(2));
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == parse_bigint("2432902008176640000"));
    CHECK(falling_factorial(7, 3) == 210);
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(3, 5) == 0);
    const long cats[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (long n = 0; n < 8; ++n)
        CHECK(catalan(n) == cats[n]);
    CHECK(to_string(parse_bigint("-123456789012345678901234567890")) == "-123456789012345678901234567890");
    CHECK_THROWS_AS(parse_bigint("12a"), InvalidArgument);
}

}  // TEST_SUITE

TEST_SUITE("ypoly") {

TEST_CASE("arithmetic and rendering") {
    const YPoly p{1, 1, 2, 1};
    CHECK(p.to_string() == "1 + y + 2*y^2 + y^3");
    CHECK(YPoly{}.to_string() == "0");
    CHECK(YPoly::monomial(4).to_string() == "y^4");
    CHECK(YPoly{0, -1, 0, 3}.to_string() == "-y + 3*y^3");
    CHECK(YPoly{1, 0, 0}.degree() == 0);
    CHECK(YPoly{}.degree() == -1);
    CHECK(YPoly{0, 0, 5}.low_degree() == 2);
    CHECK(p.evaluate(1) == 5);
    CHECK(p.evaluate(2) == 1 + 2 + 8 + 8);
    CHECK(p.stretch(2) == YPoly{1, 0, 1, 0, 2, 0, 1});
    CHECK(p.shifted(2) == YPoly{0, 0, 1, 1, 2, 1});
    CHECK((YPoly{1, 1} * YPoly{1, -1}) == YPoly{1, 0, -1});
    CHECK((p - p).is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK((p * BigInt(3)) == YPoly{3, 3, 6, 3});
    CHECK(YPoly{1, 2, 1}.is_palindromic());
    CHECK_FALSE(p.is_palindromic());
}

TEST_CASE("exact division") {
    const YPoly num = YPoly{1, 0, -1} * YPoly{1, 1, 1};
    CHECK(num.divide_exact(YPoly{1, 1}) == YPoly{1, -1} * YPoly{1, 1, 1});
    CHECK_THROWS_AS(YPoly({1, 0, 1}).divide_exact(YPoly{1, 1}), ArithmeticError);
    CHECK_THROWS_AS(YPoly({1, 1}).divide_exact(YPoly{2, 2}), ArithmeticError);
    CHECK_THROWS_AS(YPoly({1, 1}).divide_exact(YPoly{}), ArithmeticError);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> a(1 + trial % 6), b(1 + trial % 4);
        for (auto& c : a)
            c = coef(rng);
        for (auto& c : b)
            c = coef(rng);
        b.back() = 1 + (trial % 3);
        b.front() = 1;
        const YPoly pa(a), pb(b);
        if (pa.is_zero())
            continue;
        REQUIRE((pa * pb).divide_exact(pb) == pa);
    }
}

}  // TEST_SUITE

TEST_SUITE("rankpoly") {

TEST_CASE("examples") {
    CHECK(rank_gen_poly(Partition{2, 1}) == YPoly{1, 1, 2, 1});
    CHECK(rank_gen_poly(Partition{2, 2}) == YPoly{1, 1, 2, 1, 1});
    CHECK(rank_gen_poly(Partition{3, 1}) == YPoly{1, 1, 2, 2, 1});
    CHECK(rank_gen_poly(Partition{}) == YPoly{1});
    for (const auto& lam : {Partition{1}, Partition{4, 2, 2}, Partition{5, 5, 4, 2, 2}})
        CHECK(rank_gen_poly(lam, lam) == YPoly::monomial(static_cast<std::size_t>(lam.rank())));
    CHECK(rank_gen_poly(Partition{2, 2}, Partition{2, 2}).to_string() == "y^4");
    CHECK_THROWS_AS(rank_gen_poly(Partition{3}, Partition{2, 1}), PreconditionError);

    CHECK(gaussian_poly(2, 2) == YPoly{1, 1, 2, 1, 1});
    for (int n = 0; n <= 5; ++n)
        CHECK(gaussian_poly(n, 0) == YPoly{1});
    CHECK(gaussian_poly(1, 1) == YPoly{1, 1});
    CHECK_THROWS_AS(gaussian_poly(-1, 2), InvalidArgument);

    CHECK(interval_count(Partition{2, 1}) == 5);
    CHECK(interval_count(Partition{3, 1}) == 7);
    for (int n = 1; n <= 10; ++n)
        CHECK(interval_count(Partition{n}) == n + 1);
    CHECK_THROWS_AS(interval_count(Partition{3}, Partition{2, 1}), PreconditionError);

    CHECK(poincare_poly(Partition{2, 1}) == YPoly{1, 0, 1, 0, 2, 0, 1});
    CHECK(poincare_poly(Partition{}) == YPoly{1});
    CHECK(poincare_poly(Partition{1}) == YPoly{1, 0, 1});
}

TEST_CASE("enumeration oracle, exhaustive to rank 10") {
    for (const auto& lp : oracle::all_partitions(10)) {
        const Partition lam(lp);
        for (const auto& mp : oracle::interval(Partition{}, lam)) {
            const Partition mu(mp);
            REQUIRE_MESSAGE(rank_gen_poly(mu, lam) == oracle::interval_poly(mu, lam), mu << " " << lam);
        }
    }
}

TEST_CASE("enumeration oracle, sampled to rank 12 with |lambda|-|mu| <= 8") {
    std::mt19937 rng(12);
    const auto all = oracle::all_partitions(12);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    int done = 0;
    while (done < 400) {
        const Partition lam(all[pick(rng)]);
        const Partition mu = oracle::random_below(rng, lam);
        if (lam.rank() - mu.rank() > 8)
            continue;
        REQUIRE_MESSAGE(rank_gen_poly(mu, lam) == oracle::interval_poly(mu, lam), mu << " " << lam);
        ++done;
    }
}

TEST_CASE("rectangles are Gaussian polynomials") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k) {
            const YPoly g = gaussian_poly(n, k);
            CHECK(rank_gen_poly(rectangle(n, static_cast<std::size_t>(k))) == g);
            CHECK(g.is_palindromic());
            CHECK(g.degree() == n * k);
            CHECK(g.evaluate(1) == binomial(n + k, k));
        }
}

TEST_CASE("additive and multiplicative splits, random") {
    std::mt19937 rng(31);
    int additive = 0, multiplicative = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const Partition lam = oracle::random_partition(rng, 5, 5);
        const Partition mu = oracle::random_below(rng, lam);
        const YPoly whole = rank_gen_poly(mu, lam);
        for (std::size_t r = 1; r <= lam.length(); ++r) {
            if (lam[r - 1] > lam[r] && mu[r - 1] < lam[r - 1]) {
                auto [a, b] = lemma_sum_split(mu, lam, r);
                REQUIRE(whole == rank_gen_poly(a.mu, a.lambda) + rank_gen_poly(b.mu, b.lambda));
                ++additive;
            }
            if (mu[r - 1] == lam[r - 1]) {
                auto [mh, mt] = slice(mu, r);
                auto [lh, lt] = slice(lam, r);
                REQUIRE(whole == rank_gen_poly(mh, lh) * rank_gen_poly(mt, lt));
                ++multiplicative;
            }
        }
    }
    CHECK(additive > 100);
    CHECK(multiplicative > 100);
}

TEST_CASE("interval_count matches a row DP to rank 20") {
    for (const auto& lp : oracle::all_partitions(14))
        REQUIRE(interval_count(Partition(lp)) == oracle::row_dp_count(Partition{}, Partition(lp)));
    std::mt19937 rng(20);
    for (int trial = 0; trial < 300; ++trial) {
        const Partition lam = oracle::random_partition(rng, 6, 6);
        if (lam.rank() > 20)
            continue;
        const Partition mu = oracle::random_below(rng, lam);
        REQUIRE(interval_count(mu, lam) == oracle::row_dp_count(mu, lam));
        REQUIRE(interval_count(mu, lam) == rank_gen_poly(mu, lam).evaluate(1));
    }
}

TEST_CASE("memo is safe under concurrent use") {
    clear_rankpoly_memos();
    std::vector<Partition> shapes;
    for (const auto& lp : oracle::all_partitions(11))
        shapes.emplace_back(lp);
    std::vector<YPoly> serial;
    for (const auto& s : shapes)
        serial.push_back(oracle::interval_poly(Partition{}, s));

    std::vector<std::vector<YPoly>> got(4);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < got.size(); ++t)
        threads.emplace_back([&, t] {
            for (std::size_t i = 0; i < shapes.size(); ++i) {
                const auto& s = shapes[(i * (t + 1)) % shapes.size()];
                got[t].push_back(rank_gen_poly(s));
                interval_count(s);
            }
        });
    for (auto& th : threads)
        th.join();
    for (std::size_t t = 0; t < got.size(); ++t)
        for (std::size_t i = 0; i < shapes.size(); ++i)
            REQUIRE(got[t][i] == serial[(i * (t + 1)) % shapes.size()]);
    CHECK(rankpoly_memo_stats().poly_entries > 0);
}

}  // TEST_SUITE
