#ifndef SCHURKIT_IO_HPP
#define SCHURKIT_IO_HPP

#include "schurkit/chern_poly.hpp"
#include "schurkit/chern_weil.hpp"
#include "schurkit/forms.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/twist_series.hpp"
#include "schurkit/variety.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace schurkit {

using Json = nlohmann::ordered_json;

// { "rank": r, "terms": [ [[e_1,...,e_r], "p/q"], ... ] } in canonical
// graded-lex term order.
Json chern_poly_to_json(const ChernPoly& p);
ChernPoly chern_poly_from_json(const Json& j);

// { "rank": r, "series": [ [i, <chern poly json>], ... ] } by delta power.
Json twist_series_to_json(const TwistSeries& s);

// [ [ [parts...], "p/q" ], ... ] in canonical (lex-decreasing) order.
Json schur_coefficients_to_json(const std::map<Partition, Rational>& coeffs);

// { "n":., "p":., "q":., "coefficients": [ [[I...],[J...], re, im], ... ] }
// with 1-based indices.
Json form_to_json(const ConstForm& f);
ConstForm form_from_json(const Json& j);

// { "n":., "r":., "c": [ [j,k,l,m,re,im], ... ] } storing one entry per
// Hermitian pair, 1-based indices.
Json curvature_to_json(const CurvatureTensor& t);
CurvatureTensor curvature_from_json(const Json& j);

// "2,1" -> Partition{2,1}; "" or "0" -> empty partition.
Partition partition_from_string(std::string_view text);

// Infix polynomial over c1..cr with rational coefficients: terms joined by
// +/-, factors by '*', powers by '^'. Rank is inferred from the largest
// variable index unless given.
ChernPoly parse_chern_poly_expr(std::string_view text, std::optional<int> rank = std::nullopt);

// Expression over the variety's generator names, e.g. "f1+f2" or "2*H";
// must be homogeneous.
CohomClass parse_class_expr(std::string_view text, const VarietyModel& v);

// Aligned key/value text rendering of a JSON report (arrays and nested
// objects are printed compactly); the single source of truth stays JSON.
std::string render_text(const Json& j);

} // namespace schurkit

#endif
