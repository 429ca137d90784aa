#include "ylat/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "ylat/error.hpp"

namespace ylat {

namespace {

std::string as_decimal_string(const nlohmann::json& j) {
    if (!j.is_string())
        throw InvalidArgument("expected a decimal string, got " + j.dump());
    return j.get<std::string>();
}

}  // namespace

nlohmann::json ypoly_to_json(const YPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : p.coefficients())
        out.push_back(c.get_str());
    return out;
}

YPoly ypoly_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw InvalidArgument("polynomial JSON must be an array");
    std::vector<BigInt> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j)
        coeffs.push_back(parse_bigint(as_decimal_string(c)));
    return YPoly(std::move(coeffs));
}

nlohmann::json series_to_json(const MultiSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [e, c] : s.terms())
        out.push_back({{"exponents", e}, {"coeff", ypoly_to_json(c)}});
    return out;
}

MultiSeries series_from_json(const nlohmann::json& j, std::size_t nvars, long trunc) {
    if (!j.is_array())
        throw InvalidArgument("series JSON must be an array of terms");
    MultiSeries s(nvars, trunc);
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
            throw InvalidArgument("series term must have 'exponents' and 'coeff'");
        s.add_term(term.at("exponents").get<Exponents>(), ypoly_from_json(term.at("coeff")));
    }
    return s;
}

nlohmann::json rational_to_json(const BigRational& q) { return q.to_string(); }

BigRational rational_from_json(const nlohmann::json& j) { return BigRational::parse(as_decimal_string(j)); }

nlohmann::json uniseries_to_json(const UniSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s)
        out.push_back(c.get_str());
    return out;
}

UniSeries uniseries_from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw InvalidArgument("series JSON must be an array");
    UniSeries out;
    for (const auto& c : j)
        out.push_back(parse_bigint(as_decimal_string(c)));
    return out;
}

std::string to_decimal(const BigRational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", q.to_double());
    return buf;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << "n,c,C,A_num,A_den,ratio_decimal\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.c.get_str() << ',' << r.C.get_str() << ',' << r.A.numerator().get_str() << ','
           << r.A.denominator().get_str() << ',' << to_decimal(r.ratio) << '\n';
    return os.str();
}

nlohmann::json convergence_json(std::size_t k, const std::vector<ConvergenceRow>& rows) {
    nlohmann::json out = {{"k", k}, {"rows", nlohmann::json::array()}};
    for (const auto& r : rows)
        out["rows"].push_back({{"n", r.n},
                               {"c", r.c.get_str()},
                               {"C", r.C.get_str()},
                               {"A", rational_to_json(r.A)},
                               {"ratio", rational_to_json(r.ratio)},
                               {"ratio_decimal", to_decimal(r.ratio)}});
    return out;
}

}  // namespace ylat
