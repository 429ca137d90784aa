#ifndef YLAT_YPOLY_HPP
#define YLAT_YPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ylat/bigint.hpp"

namespace ylat {

/// Dense univariate polynomial in y with big-integer coefficients.
/// Index i of coefficients() is the coefficient of y^i; no leading zeros are
/// stored, so the zero polynomial has an empty coefficient vector.
class YPoly {
public:
    YPoly() = default;
    explicit YPoly(std::vector<BigInt> coefficients);
    YPoly(std::initializer_list<long> coefficients);

    static YPoly constant(const BigInt& c);
    /// c * y^degree
    static YPoly monomial(std::size_t degree, const BigInt& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; -1 for zero.
    long low_degree() const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    BigInt evaluate(const BigInt& y) const;
    /// p(y^factor); factor 2 gives the Poincare substitution y -> y^2.
    YPoly stretch(std::size_t factor) const;
    /// p(y) * y^shift
    YPoly shifted(std::size_t shift) const;
    bool is_palindromic() const;

    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    YPoly& operator*=(const YPoly& o);
    YPoly& operator*=(const BigInt& c);
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);
    friend YPoly operator*(YPoly a, const BigInt& c) { return a *= c; }
    YPoly operator-() const;

    /// Exact quotient; throws ArithmeticError if the remainder is nonzero or a
    /// quotient coefficient is not integral.
    YPoly divide_exact(const YPoly& divisor) const;

    friend bool operator==(const YPoly& a, const YPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// "1 + y + 2*y^2 + y^3"; zero renders as "0".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

}  // namespace ylat

#endif  // YLAT_YPOLY_HPP
