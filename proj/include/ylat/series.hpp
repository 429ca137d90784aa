#ifndef YLAT_SERIES_HPP
#define YLAT_SERIES_HPP

#include <cstddef>
#include <vector>

#include "ylat/bigint.hpp"
#include "ylat/multiseries.hpp"

namespace ylat {

// Truncated generating series Q_k = sum over partitions lambda with exactly
// k parts of P_lambda(y) x^lambda, and the univariate specialisations used by
// the asymptotics.  Every function takes the truncation order (maximum total
// x-degree kept) explicitly; all results are exact up to that order.

/// Q_k by definition: sum of rank_gen_poly(lambda) x^lambda over |lambda| <= trunc.
/// Q_0 = 1.  Requires trunc >= k.
MultiSeries qk_direct(std::size_t k, long trunc);

/// Q_k from the rational recursion
///   (1 - p_k) Q_k = x_k Q_{k-1} + sum_{0<=i<r<=k} y^r p_k / (1 - y^r p_r) * Q_{k-r}(Z_r) * Q_i
/// with every 1/(1 - g) expanded as a truncated geometric series and the
/// lower Q_i obtained from the same recursion.  Requires k >= 1, trunc >= k.
MultiSeries qk_recursive(std::size_t k, long trunc);

/// Q_{k-r}(Z_r) with Z_r = (y^r p_{r+1}, x_{r+2}, ..., x_k, y), as a series in
/// the k = k_minus_r + r variables x_1..x_k.  Built by enumerating the
/// partitions of length k_minus_r rather than by substitution.  Requires r >= 1.
MultiSeries qk_substituted(std::size_t k_minus_r, std::size_t r, long trunc);

/// sum_{t>=0} (y^y_power x^monomial)^t truncated at trunc.  The monomial must
/// have positive total degree.
MultiSeries geometric_factor(const Exponents& monomial, std::size_t y_power, long trunc);

/// D_k = prod_{m=1..k} prod_{j=0..m} (1 - y^j p_m) as a series in k variables.
MultiSeries dk_polynomial(std::size_t k, long trunc);

struct DenominatorReport {
    MultiSeries product;   // Q_k * D_k truncated at trunc
    long max_degree;       // highest total degree with a nonzero term (-1 if none)
    long trunc;
    bool stabilized;       // every degree in (max_degree, trunc] vanished
};

/// Truncated Q_k * D_k.  Requires k >= 1.
DenominatorReport dk_product_check(std::size_t k, long trunc);

/// Q_k with every coefficient replaced by its constant term (y = 0).
MultiSeries specialize_y0(std::size_t k, long trunc);

/// p_k * prod_{m=1..k} (1 - p_m)^{-1}, truncated; the closed form of specialize_y0.
MultiSeries y0_product_formula(std::size_t k, long trunc);

using UniSeries = std::vector<BigInt>;

/// Substitutes x_i -> x^{weights[i]} (all weights >= 1) and y -> y_value.
/// Returns coefficients of x^0..x^trunc, which are exact for weights >= 1.
UniSeries specialize_univariate(const MultiSeries& s, const std::vector<int>& weights, const BigInt& y_value);

/// Coefficients C^m_{k,n}, n = 0..trunc, of Q_k(X_m) with
/// X_m = (x^{m+1}, x, ..., x, 1), by direct enumeration:
/// C^m_{k,n} = sum of #[0, lambda] over lambda with k parts and |lambda| + m lambda_1 = n.
/// k = 0 gives the constant series 1.
UniSeries qk_xm(std::size_t k, int m, long trunc);

struct XmReport {
    bool ok;
    long first_mismatch;   // -1 when ok
    UniSeries lhs;
    UniSeries rhs;
};

/// Checks the X_m specialisation of the rational recursion coefficient-wise:
///   Q_k(X_m) = x_k|X_m * Q_{k-1}(X_m) / (1 - x^{k+m})
///            + sum_{0<=i<r<=k} x^{k+m} Q_{k-r}(X_{r+m}) Q_i(X_m) / ((1 - x^{k+m})(1 - x^{r+m}))
/// where x_k|X_m is x^{m+1} for k = 1 and x otherwise.  Both the divided
/// form above and the form multiplied through by (1 - x^{k+m}) must agree.
XmReport verify_xm_recursion(std::size_t k, int m, long trunc);

namespace uni {

UniSeries add(const UniSeries& a, const UniSeries& b);
UniSeries sub(const UniSeries& a, const UniSeries& b);
UniSeries mul(const UniSeries& a, const UniSeries& b, long trunc);
/// a * x^shift, truncated
UniSeries shift(const UniSeries& a, long shift, long trunc);
/// 1 / (1 - x^step) truncated; step >= 1.
UniSeries geometric(long step, long trunc);

}  // namespace uni

}  // namespace ylat

#endif  // YLAT_SERIES_HPP
