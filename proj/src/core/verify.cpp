#include "ylat/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "ylat/bigint.hpp"
#include "ylat/counts.hpp"
#include "ylat/error.hpp"
#include "ylat/partition.hpp"
#include "ylat/rankpoly.hpp"
#include "ylat/series.hpp"

namespace ylat {

namespace {

std::string show(const SkewInterval& iv) { return "[(" + iv.mu.to_string() + "),(" + iv.lambda.to_string() + ")]"; }

YPoly oracle_poly(const Partition& mu, const Partition& lambda) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(lambda.rank()) + 1);
    for (const auto& nu : enumerate_interval(mu, lambda))
        coeffs[static_cast<std::size_t>(nu.rank())] += 1;
    return YPoly(std::move(coeffs));
}

// True iff the pieces are pairwise disjoint and their union is `whole`.
bool is_disjoint_union(const std::vector<Partition>& whole, const std::vector<std::vector<Partition>>& pieces) {
    std::set<Partition> seen;
    std::size_t total = 0;
    for (const auto& piece : pieces) {
        total += piece.size();
        seen.insert(piece.begin(), piece.end());
    }
    if (seen.size() != total || total != whole.size())
        return false;
    return std::all_of(whole.begin(), whole.end(), [&](const Partition& p) { return seen.count(p) == 1; });
}

std::vector<Partition> enumerate(const SkewInterval& iv) { return enumerate_interval(iv.mu, iv.lambda); }

void all_partitions_up_to(long max_rank, std::vector<Partition>& out) {
    out.emplace_back();
    for (std::size_t k = 1; k <= static_cast<std::size_t>(max_rank); ++k)
        for_each_partition_up_to(k, max_rank, [&](const Partition& p) { out.push_back(p); });
}

MultiSeries from_terms(std::size_t nvars, long trunc,
                       std::initializer_list<std::pair<Exponents, std::initializer_list<long>>> terms) {
    MultiSeries s(nvars, trunc);
    for (const auto& [e, c] : terms)
        s.add_term(e, YPoly(c));
    return s;
}

}  // namespace

std::optional<MultiSeries> closed_form_numerator(std::size_t k, long trunc) {
    if (k == 1) {
        // x1 + (x1 - x1^2) y
        return from_terms(1, trunc, {{{1}, {1, 1}}, {{2}, {0, -1}}});
    }
    if (k == 2) {
        // x1x2 + (x1x2 - x1^2x2 - x1^2x2^2) y + (x1x2 - x1^2x2^2) y^2 + (x1^3x2^3 - x1^2x2^2) y^3
        return from_terms(2, trunc,
                          {{{1, 1}, {1, 1, 1}}, {{2, 1}, {0, -1}}, {{2, 2}, {0, -1, -1, -1}}, {{3, 3}, {0, 0, 0, 1}}});
    }
    return std::nullopt;
}

std::optional<MultiSeries> closed_form_q(std::size_t k, long trunc) {
    auto num = closed_form_numerator(k, trunc);
    if (!num)
        return std::nullopt;
    MultiSeries q = *num;
    for (std::size_t m = 1; m <= k; ++m)
        for (std::size_t j = 0; j <= m; ++j)
            q = q * geometric_factor(MultiSeries::square_free(k, m), j, trunc);
    return q;
}

VerifyReport verify_recursion(std::size_t k, long trunc) {
    VerifyReport rep;
    const MultiSeries direct = qk_direct(k, trunc);
    const MultiSeries recursive = qk_recursive(k, trunc);
    ++rep.checks;
    if (!(direct == recursive)) {
        for (const auto& [e, c] : direct.terms()) {
            if (recursive.coeff(e) != c) {
                std::ostringstream os;
                os << "k=" << k << ": coefficient of exponent (";
                for (std::size_t i = 0; i < e.size(); ++i)
                    os << (i ? "," : "") << e[i];
                os << ") is " << recursive.coeff(e).to_string() << " by recursion, " << c.to_string()
                   << " by definition";
                rep.fail(os.str());
                break;
            }
        }
        rep.fail("k=" + std::to_string(k) + ": recursion produced terms absent from the definition");
        return rep;
    }

    // Multiplied through by (1 - p_k) prod_r (1 - y^r p_r): only products remain.
    auto times_factor = [&](const MultiSeries& s, std::size_t m, std::size_t j) {
        return s - s.times_monomial(MultiSeries::square_free(k, m), j);
    };
    auto times_all_except = [&](MultiSeries s, std::size_t skip) {
        for (std::size_t r = 1; r <= k; ++r)
            if (r != skip)
                s = times_factor(s, r, r);
        return s;
    };
    std::vector<MultiSeries> lower;
    for (std::size_t i = 0; i < k; ++i)
        lower.push_back(qk_direct(i, trunc).embedded(k));

    const MultiSeries lhs = times_all_except(times_factor(direct, k, 0), 0);
    Exponents xk(k, 0);
    xk[k - 1] = 1;
    MultiSeries rhs = times_all_except(lower[k - 1].times_monomial(xk), 0);
    MultiSeries lower_sum(k, trunc);
    for (std::size_t r = 1; r <= k; ++r) {
        lower_sum += lower[r - 1];
        MultiSeries term = qk_substituted(k - r, r, trunc) * lower_sum;
        term = term.times_monomial(MultiSeries::square_free(k, k), r);
        rhs += times_all_except(term, r);
    }
    ++rep.checks;
    if (!(lhs == rhs))
        rep.fail("k=" + std::to_string(k) + ": multiplied form of the recursion does not hold");
    rep.summary = "Q_" + std::to_string(k) + " recursion == definition to degree " + std::to_string(trunc) + " (" +
                  std::to_string(direct.size()) + " terms)";
    return rep;
}

VerifyReport verify_xm(std::size_t k, int m, long trunc) {
    VerifyReport rep;
    const XmReport xm = verify_xm_recursion(k, m, trunc);
    ++rep.checks;
    if (!xm.ok) {
        const auto n = static_cast<std::size_t>(xm.first_mismatch);
        rep.fail("k=" + std::to_string(k) + " m=" + std::to_string(m) + ": coefficient of x^" + std::to_string(n) +
                 " is " + to_string(xm.lhs[n]) + " on the left, " + to_string(xm.rhs[n]) + " on the right");
    }
    rep.summary = "X_m recursion holds for k=" + std::to_string(k) + " m=" + std::to_string(m) + " to order " +
                  std::to_string(trunc);
    return rep;
}

VerifyReport verify_denominator(std::size_t k, long trunc) {
    VerifyReport rep;
    const DenominatorReport d = dk_product_check(k, trunc);
    ++rep.checks;
    if (!d.stabilized)
        rep.fail("k=" + std::to_string(k) + ": Q_k*D_k has nonzero terms at degree " + std::to_string(d.max_degree) +
                 " = truncation order; raise --trunc");
    if (auto num = closed_form_numerator(k, trunc)) {
        ++rep.checks;
        if (!(d.product == *num))
            rep.fail("k=" + std::to_string(k) + ": Q_k*D_k differs from the closed-form numerator");
    }
    rep.summary = "Q_" + std::to_string(k) + "*D_" + std::to_string(k) + " has degree " +
                  std::to_string(d.max_degree) + (d.stabilized ? " < " : " at truncation order ") +
                  std::to_string(trunc);
    return rep;
}

VerifyReport verify_decomposition(std::size_t max_k, int max_m) {
    VerifyReport rep;
    for (std::size_t k = 1; k <= max_k && rep.ok; ++k) {
        for (int m = 0; m <= max_m && rep.ok; ++m) {
            const std::string where = "k=" + std::to_string(k) + " m=" + std::to_string(m);
            const auto whole = enumerate_staircase_interval(k, m);
            ++rep.checks;
            if (BigInt(static_cast<unsigned long>(whole.size())) != catalan(static_cast<long>(k)))
                rep.fail(where + ": |I_{k,m}| = " + std::to_string(whole.size()) + " is not Catalan(k)");

            std::vector<std::vector<Partition>> pieces;
            const auto blocks = decompose_staircase_interval(k, m);
            for (const auto& b : blocks)
                pieces.push_back(enumerate(b));
            ++rep.checks;
            if (!is_disjoint_union(whole, pieces))
                rep.fail(where + ": alpha/beta blocks do not partition I_{k,m}");

            for (std::size_t r = 1; r <= k && rep.ok; ++r) {
                const auto left = enumerate_staircase_interval(k - r, static_cast<int>(r) + m);
                const auto right = enumerate_staircase_interval(r - 1, m);
                std::set<Partition> image;
                for (const auto& a : left)
                    for (const auto& b : right)
                        image.insert(concat_map(k, m, r, a, b));
                const auto& block = pieces[r - 1];
                ++rep.checks;
                if (image.size() != left.size() * right.size() ||
                    image != std::set<Partition>(block.begin(), block.end()))
                    rep.fail(where + " r=" + std::to_string(r) + ": concatenation is not a bijection onto " +
                             show(blocks[r - 1]));
            }
        }
    }
    rep.summary = "staircase decomposition and concatenation bijection hold for k<=" + std::to_string(max_k) +
                  ", m<=" + std::to_string(max_m);
    return rep;
}

VerifyReport verify_bkm(std::size_t max_sum) {
    VerifyReport rep;
    for (std::size_t k = 0; k <= max_sum && rep.ok; ++k) {
        for (std::size_t m = 0; k + m <= max_sum && rep.ok; ++m) {
            const BigRational rec = b_recursive(k, static_cast<int>(m));
            const BigRational dir = b_direct(k, static_cast<int>(m));
            ++rep.checks;
            if (rec != dir)
                rep.fail("B(" + std::to_string(k) + "," + std::to_string(m) + "): recursion gives " + rec.to_string() +
                         ", staircase sum gives " + dir.to_string());
        }
    }
    for (std::size_t k = 1; k <= max_sum && rep.ok; ++k) {
        ++rep.checks;
        if (g_k(k) != g_k_from_b(k))
            rep.fail("G_" + std::to_string(k) + " differs between the staircase sum and B(k,0)");
    }
    rep.summary = "B recursion == staircase sum for k+m<=" + std::to_string(max_sum);
    return rep;
}

VerifyReport verify_gaussian(int max_n, int max_k) {
    VerifyReport rep;
    for (int n = 0; n <= max_n && rep.ok; ++n) {
        for (int k = 0; k <= max_k && rep.ok; ++k) {
            const YPoly rect = rank_gen_poly(rectangle(n, static_cast<std::size_t>(k)));
            const YPoly gauss = gaussian_poly(n, k);
            const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            ++rep.checks;
            if (rect != gauss)
                rep.fail(where + ": rectangle gives " + rect.to_string() + ", Gaussian gives " + gauss.to_string());
            else if (!gauss.is_palindromic())
                rep.fail(where + ": Gaussian polynomial is not palindromic");
            else if (gauss.evaluate(1) != binomial(n + k, k))
                rep.fail(where + ": value at y=1 is not C(n+k,k)");
        }
    }
    rep.summary = "Gaussian identity holds for n<=" + std::to_string(max_n) + ", k<=" + std::to_string(max_k);
    return rep;
}

VerifyReport verify_lemmas(long max_rank) {
    VerifyReport rep;
    std::vector<Partition> lambdas;
    all_partitions_up_to(max_rank, lambdas);
    for (const auto& lambda : lambdas) {
        if (!rep.ok)
            break;
        const std::size_t k = lambda.length();
        for (const auto& mu : enumerate_interval(Partition{}, lambda)) {
            const SkewInterval iv(mu, lambda);
            const auto whole = enumerate_interval(mu, lambda);
            const YPoly p = rank_gen_poly(mu, lambda);
            ++rep.checks;
            if (p != oracle_poly(mu, lambda)) {
                rep.fail(show(iv) + ": recursion gives " + p.to_string() + ", enumeration gives " +
                         oracle_poly(mu, lambda).to_string());
                break;
            }
            ++rep.checks;
            if (interval_count(mu, lambda) != p.evaluate(1)) {
                rep.fail(show(iv) + ": interval_count disagrees with P(1)");
                break;
            }
            for (std::size_t r = 1; r <= k; ++r) {
                if (lambda[r - 1] > lambda[r] && mu[r - 1] < lambda[r - 1]) {
                    const auto [a, b] = lemma_sum_split(mu, lambda, r);
                    ++rep.checks;
                    if (!is_disjoint_union(whole, {enumerate(a), enumerate(b)}) ||
                        p != rank_gen_poly(a.mu, a.lambda) + rank_gen_poly(b.mu, b.lambda))
                        rep.fail(show(iv) + " r=" + std::to_string(r) + ": remove-a-box split fails");
                }
                if ((r == 1 || mu[r - 1] < mu[r - 2]) && mu[r - 1] < lambda[r - 1]) {
                    const auto [a, b] = lemma_sum2_split(mu, lambda, r);
                    ++rep.checks;
                    if (!is_disjoint_union(whole, {enumerate(a), enumerate(b)}) ||
                        p != rank_gen_poly(a.mu, a.lambda) + rank_gen_poly(b.mu, b.lambda))
                        rep.fail(show(iv) + " r=" + std::to_string(r) + ": add-a-box split fails");
                }
                if (mu[r - 1] == lambda[r - 1]) {
                    const auto [mu_top, mu_bottom] = slice(mu, r);
                    const auto [lam_top, lam_bottom] = slice(lambda, r);
                    ++rep.checks;
                    if (p != rank_gen_poly(mu_top, lam_top) * rank_gen_poly(mu_bottom, lam_bottom))
                        rep.fail(show(iv) + " r=" + std::to_string(r) + ": product split fails");
                }
            }
            if (!rep.ok)
                break;
        }
        if (!rep.ok || k == 0)
            continue;

        // P_lambda = P_rho(lambda) + P_{(lambda_k)^k, lambda}
        //          + sum_{r<k} P_{(lambda_r)^r, lambda(r)} * P_rho(lambda(r)^c)
        YPoly expansion = rank_gen_poly(rho(lambda)) + rank_gen_poly(rectangle(lambda[k - 1], k), lambda);
        for (std::size_t r = 1; r < k; ++r) {
            const auto [top, bottom] = slice(lambda, r);
            expansion += rank_gen_poly(rectangle(lambda[r - 1], r), top) * rank_gen_poly(rho(bottom));
        }
        ++rep.checks;
        if (expansion != rank_gen_poly(lambda))
            rep.fail("(" + lambda.to_string() + "): product-sum expansion gives " + expansion.to_string());
    }
    rep.summary = "interval identities hold for all |lambda|<=" + std::to_string(max_rank) + " (" +
                  std::to_string(rep.checks) + " checks)";
    return rep;
}

}  // namespace ylat
