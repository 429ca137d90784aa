#include "ylat/multiseries.hpp"

#include <algorithm>
#include <numeric>

#include "ylat/error.hpp"

namespace ylat {

long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    const long da = total_degree(a);
    const long db = total_degree(b);
    if (da != db)
        return da < db;
    return b < a;
}

MultiSeries::MultiSeries(std::size_t nvars, long trunc) : nvars_(nvars), trunc_(trunc) {
    if (trunc < 0)
        throw InvalidArgument("truncation order must be nonnegative");
}

MultiSeries MultiSeries::one(std::size_t nvars, long trunc) {
    MultiSeries s(nvars, trunc);
    s.add_term(Exponents(nvars, 0), YPoly{1});
    return s;
}

MultiSeries MultiSeries::monomial(const Exponents& exps, const YPoly& coeff, long trunc) {
    MultiSeries s(exps.size(), trunc);
    s.add_term(exps, coeff);
    return s;
}

Exponents MultiSeries::square_free(std::size_t nvars, std::size_t m) {
    if (m > nvars)
        throw InvalidArgument("square-free monomial uses more variables than available");
    Exponents e(nvars, 0);
    std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m), 1);
    return e;
}

YPoly MultiSeries::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? YPoly{} : it->second;
}

long MultiSeries::max_degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

void MultiSeries::add_term(const Exponents& exps, const YPoly& c) {
    if (exps.size() != nvars_)
        throw InvalidArgument("exponent vector has the wrong number of variables");
    if (c.is_zero() || total_degree(exps) > trunc_)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void MultiSeries::check_compatible(const MultiSeries& o) const {
    if (o.nvars_ != nvars_)
        throw InvalidArgument("series have different numbers of variables");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    check_compatible(o);
    trunc_ = std::min(trunc_, o.trunc_);
    if (!terms_.empty() && max_degree() > trunc_)
        *this = truncated(trunc_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    check_compatible(o);
    trunc_ = std::min(trunc_, o.trunc_);
    if (!terms_.empty() && max_degree() > trunc_)
        *this = truncated(trunc_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    const long n = std::min(a.trunc_, b.trunc_);
    MultiSeries out(a.nvars_, n);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        const long da = total_degree(ea);
        if (da > n)
            break;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > n)
                break;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiSeries MultiSeries::operator*(const YPoly& c) const {
    MultiSeries out(nvars_, trunc_);
    for (const auto& [e, p] : terms_)
        out.add_term(e, p * c);
    return out;
}

MultiSeries MultiSeries::times_monomial(const Exponents& exps, std::size_t ypow) const {
    if (exps.size() != nvars_)
        throw InvalidArgument("exponent vector has the wrong number of variables");
    MultiSeries out(nvars_, trunc_);
    Exponents e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = ea[i] + exps[i];
        out.add_term(e, c.shifted(ypow));
    }
    return out;
}

MultiSeries MultiSeries::embedded(std::size_t nvars) const {
    if (nvars < nvars_)
        throw InvalidArgument("cannot embed into fewer variables");
    MultiSeries out(nvars, trunc_);
    for (const auto& [e, c] : terms_) {
        Exponents wide(e);
        wide.resize(nvars, 0);
        out.terms_.emplace(std::move(wide), c);
    }
    return out;
}

MultiSeries MultiSeries::truncated(long trunc) const {
    MultiSeries out(nvars_, std::min(trunc, trunc_));
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > out.trunc_)
            break;
        out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
}

MultiSeries MultiSeries::map_coefficients(const std::function<YPoly(const YPoly&)>& fn) const {
    MultiSeries out(nvars_, trunc_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, fn(c));
    return out;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
    if (a.nvars_ != b.nvars_)
        return false;
    const long n = std::min(a.trunc_, b.trunc_);
    return a.truncated(n).terms_ == b.truncated(n).terms_;
}

}  // namespace ylat
