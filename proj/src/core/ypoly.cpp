#include "ylat/ypoly.hpp"

#include <algorithm>

#include "ylat/error.hpp"

namespace ylat {

YPoly::YPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

YPoly::YPoly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients)
        coeffs_.emplace_back(c);
    normalize();
}

YPoly YPoly::constant(const BigInt& c) { return YPoly(std::vector<BigInt>{c}); }

YPoly YPoly::monomial(std::size_t degree, const BigInt& c) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return YPoly(std::move(v));
}

void YPoly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

long YPoly::low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0)
            return static_cast<long>(i);
    return -1;
}

BigInt YPoly::evaluate(const BigInt& y) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * y + *it;
    return acc;
}

YPoly YPoly::stretch(std::size_t factor) const {
    if (factor == 0)
        return YPoly::constant(evaluate(1));
    if (is_zero())
        return {};
    std::vector<BigInt> v((coeffs_.size() - 1) * factor + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * factor] = coeffs_[i];
    return YPoly(std::move(v));
}

YPoly YPoly::shifted(std::size_t shift) const {
    if (is_zero())
        return {};
    std::vector<BigInt> v(coeffs_.size() + shift);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(shift));
    YPoly out;
    out.coeffs_ = std::move(v);
    return out;
}

bool YPoly::is_palindromic() const {
    const long lo = low_degree();
    if (lo < 0)
        return true;
    for (long i = lo, j = degree(); i < j; ++i, --j)
        if (coeffs_[static_cast<std::size_t>(i)] != coeffs_[static_cast<std::size_t>(j)])
            return false;
    return true;
}

YPoly& YPoly::operator+=(const YPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return YPoly(std::move(v));
}

YPoly& YPoly::operator*=(const YPoly& o) { return *this = *this * o; }

YPoly& YPoly::operator*=(const BigInt& c) {
    for (auto& x : coeffs_)
        x *= c;
    normalize();
    return *this;
}

YPoly YPoly::operator-() const {
    YPoly r = *this;
    for (auto& x : r.coeffs_)
        x = -x;
    return r;
}

YPoly YPoly::divide_exact(const YPoly& divisor) const {
    if (divisor.is_zero())
        throw ArithmeticError("polynomial division by zero");
    if (is_zero())
        return {};
    if (degree() < divisor.degree())
        throw ArithmeticError("inexact polynomial division");
    std::vector<BigInt> rem = coeffs_;
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    const BigInt& lead = divisor.coeffs_.back();
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt& top = rem[i + dd];
        if (sgn(top) == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw ArithmeticError("inexact polynomial division");
        BigInt q = top / lead;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i + j] -= q * divisor.coeffs_[j];
        quot[i] = std::move(q);
    }
    for (const auto& r : rem)
        if (sgn(r) != 0)
            throw ArithmeticError("inexact polynomial division");
    return YPoly(std::move(quot));
}

std::string YPoly::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (sgn(c) == 0)
            continue;
        const bool negative = sgn(c) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const BigInt mag = abs(c);
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += "y";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace ylat
