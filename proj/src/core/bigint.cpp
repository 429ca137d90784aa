#include "ylat/bigint.hpp"

#include "ylat/error.hpp"

namespace ylat {

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (sgn(den) == 0)
        throw InvalidArgument("rational with zero denominator");
    value_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero())
        throw InvalidArgument("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_bigint(text));
    return BigRational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

BigInt falling_factorial(long p, long q) {
    if (q < 0 || p < q)
        throw InvalidArgument("falling factorial requires 0 <= q <= p");
    BigInt r = 1;
    for (long i = 0; i < q; ++i)
        r *= p - i;
    return r;
}

BigInt factorial(long n) {
    if (n < 0)
        throw InvalidArgument("factorial of a negative number");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt catalan(long n) {
    BigInt r = binomial(2 * n, n);
    r /= n + 1;
    return r;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw InvalidArgument("empty integer literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (!(c >= '0' && c <= '9') && !(i == 0 && c == '-' && s.size() > 1))
            throw InvalidArgument("malformed integer literal: '" + s + "'");
    }
    return BigInt(s, 10);
}

}  // namespace ylat
