#ifndef YLAT_MULTISERIES_HPP
#define YLAT_MULTISERIES_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "ylat/ypoly.hpp"

namespace ylat {

using Exponents = std::vector<int>;

long total_degree(const Exponents& e);

/// Graded lexicographic order with x_1 > x_2 > ...: total degree ascending,
/// then larger leading exponents first.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Truncated power series in x_1..x_k with YPoly coefficients.  Only terms of
/// total x-degree <= trunc() are kept; the y-degree is unbounded.  Zero
/// coefficients are never stored.
class MultiSeries {
public:
    using TermMap = std::map<Exponents, YPoly, GradedLex>;

    MultiSeries(std::size_t nvars, long trunc);

    static MultiSeries one(std::size_t nvars, long trunc);
    static MultiSeries monomial(const Exponents& exps, const YPoly& coeff, long trunc);
    /// x_1 x_2 ... x_m in nvars variables.
    static Exponents square_free(std::size_t nvars, std::size_t m);

    std::size_t nvars() const { return nvars_; }
    long trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    YPoly coeff(const Exponents& exps) const;
    /// Highest total degree among stored terms, -1 for zero.
    long max_degree() const;

    /// Adds c * x^exps; silently dropped when the degree exceeds trunc().
    void add_term(const Exponents& exps, const YPoly& c);

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    /// Product truncated at min(a.trunc(), b.trunc()).
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    MultiSeries operator*(const YPoly& c) const;

    /// this * y^ypow * x^exps
    MultiSeries times_monomial(const Exponents& exps, std::size_t ypow = 0) const;
    /// Same series viewed in nvars >= nvars() variables (extra exponents 0).
    MultiSeries embedded(std::size_t nvars) const;
    MultiSeries truncated(long trunc) const;
    MultiSeries map_coefficients(const std::function<YPoly(const YPoly&)>& fn) const;

    /// Equal after truncating both to the smaller order.
    friend bool operator==(const MultiSeries& a, const MultiSeries& b);

private:
    void check_compatible(const MultiSeries& o) const;

    std::size_t nvars_;
    long trunc_;
    TermMap terms_;
};

}  // namespace ylat

#endif  // YLAT_MULTISERIES_HPP
