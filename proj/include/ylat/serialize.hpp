#ifndef YLAT_SERIALIZE_HPP
#define YLAT_SERIALIZE_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

#include "ylat/bigint.hpp"
#include "ylat/counts.hpp"
#include "ylat/multiseries.hpp"
#include "ylat/series.hpp"
#include "ylat/ypoly.hpp"

namespace ylat {

// JSON forms.  Big numbers are always decimal strings.
//   YPoly        ["1","1","2","1"]            index = degree in y
//   MultiSeries  [{"exponents":[2,1],"coeff":[...]}, ...]   graded lex order
//   BigRational  "49/6480"
//   UniSeries    ["0","2","3","4"]

nlohmann::json ypoly_to_json(const YPoly& p);
YPoly ypoly_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const MultiSeries& s);
/// The term list does not record the variable count or truncation order.
MultiSeries series_from_json(const nlohmann::json& j, std::size_t nvars, long trunc);

nlohmann::json rational_to_json(const BigRational& q);
BigRational rational_from_json(const nlohmann::json& j);

nlohmann::json uniseries_to_json(const UniSeries& s);
UniSeries uniseries_from_json(const nlohmann::json& j);

/// Decimal rendering for display only ("%.15g").
std::string to_decimal(const BigRational& q);

/// CSV with header n,c,C,A_num,A_den,ratio_decimal.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
nlohmann::json convergence_json(std::size_t k, const std::vector<ConvergenceRow>& rows);

}  // namespace ylat

#endif  // YLAT_SERIALIZE_HPP
