#ifndef YLAT_VERIFY_HPP
#define YLAT_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "ylat/multiseries.hpp"

namespace ylat {

/// Outcome of an identity sweep.  `counterexample` is set on the first
/// failure and the sweep stops there.
struct VerifyReport {
    bool ok = true;
    std::size_t checks = 0;
    std::string summary;
    std::string counterexample;

    void fail(std::string what) {
        if (ok) {
            ok = false;
            counterexample = std::move(what);
        }
    }
};

/// qk_recursive(k, trunc) == qk_direct(k, trunc), plus the recursion in
/// multiplied form (no geometric inversion of 1 - p_k).
VerifyReport verify_recursion(std::size_t k, long trunc);

/// verify_xm_recursion for the given k, m.
VerifyReport verify_xm(std::size_t k, int m, long trunc);

/// Q_k * D_k: stabilizes below trunc, and for k = 1, 2 equals the known
/// closed-form numerator exactly.
VerifyReport verify_denominator(std::size_t k, long trunc);

/// For every k <= max_k, m <= max_m: the alpha/beta blocks partition I_{k,m},
/// concat_map is a bijection onto each block, and |I_{k,m}| is Catalan(k).
VerifyReport verify_decomposition(std::size_t max_k, int max_m);

/// b_recursive == b_direct for k + m <= max_sum, and g_k == g_k_from_b for
/// 1 <= k <= max_sum.
VerifyReport verify_bkm(std::size_t max_sum);

/// rank_gen_poly of the n x k rectangle equals gaussian_poly(n, k); both
/// palindromic; value at 1 is C(n+k, k).
VerifyReport verify_gaussian(int max_n, int max_k);

/// For every lambda with |lambda| <= max_rank and every mu <= lambda:
/// brute-force enumeration oracle, additive split (both split primitives,
/// as disjoint unions and as polynomial sums), product split, the
/// product-sum expansion of P_lambda, and interval_count == P(1).
VerifyReport verify_lemmas(long max_rank);

/// Numerator of Q_k over D_k for k = 1, 2 in closed form; nullopt otherwise.
std::optional<MultiSeries> closed_form_numerator(std::size_t k, long trunc);

/// Truncated expansion of the closed-form rational function Q_k (k = 1, 2):
/// numerator times the geometric expansion of every factor of D_k.
std::optional<MultiSeries> closed_form_q(std::size_t k, long trunc);

}  // namespace ylat

#endif  // YLAT_VERIFY_HPP
