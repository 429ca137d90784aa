#ifndef YLAT_BIGINT_HPP
#define YLAT_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ylat {

using BigInt = mpz_class;

/// Exact fraction of arbitrary-precision integers, always in lowest terms with
/// a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& value) : value_(value) {}
    BigRational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    double to_double() const { return value_.get_d(); }

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;
    /// Accepts "num/den" or "num"; the result is reduced.
    static BigRational parse(std::string_view text);

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { BigRational r; r.value_ = -value_; return r; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    BigRational abs() const { BigRational r; r.value_ = ::abs(value_); return r; }

private:
    mpq_class value_;
};

/// p (p-1) ... (p-q+1); requires 0 <= q <= p.
BigInt falling_factorial(long p, long q);
BigInt factorial(long n);
/// C(n, k) over nonnegative integers.
BigInt binomial(long n, long k);
BigInt catalan(long n);

std::string to_string(const BigInt& value);
BigInt parse_bigint(std::string_view text);

}  // namespace ylat

#endif  // YLAT_BIGINT_HPP
