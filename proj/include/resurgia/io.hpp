#pragma once

// Text grammar and JSON encodings for ideals, families, polyhedra,
// certificates, Rees tables and resurgence results.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "resurgia/rees.hpp"

namespace resurgia {

using Json = nlohmann::ordered_json;

/// Syntax error carrying the 0-based offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// `vars = x,y,z ; gens = x^2*y, y*z^3` ("1" is the unit ideal, an empty or
/// "0" list the zero ideal). Text starting with '{' is read as ideal JSON.
MonomialIdeal parse_ideal(std::string_view text);

/// Inverse of parse_ideal for canonical ideals.
std::string print_ideal(const MonomialIdeal& ideal);

/// Family shorthand: powers:I, symbolic:I, closure-powers:I,
/// piecewise:I:alpha:beta:gamma[:k=J^p ...], truncate:<family>:<n>.
/// Names refer to `ideals`; an override J^p is the p-th power of ideal J.
GradedFamily parse_family(std::string_view text, const std::map<std::string, MonomialIdeal>& ideals);

// ---------------------------------------------------------------- JSON

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json point_json(const Point& p);
Point point_from_json(const Json& j);

Json polyhedron_json(const QPolyhedron& p);
/// Rebuilds from the vertices; supplied facets must match the recomputed ones.
QPolyhedron polyhedron_from_json(const Json& j);

Json ideal_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json family_json(const GradedFamily& family);
GradedFamily family_from_json(const Json& j);

Json certificate_json(const BodyCertificate& cert);
BodyCertificate certificate_from_json(const Json& j);

Json result_json(const ResurgenceResult& result);
ResurgenceResult result_from_json(const Json& j);

/// Explicit Rees table file.
struct ReesTable {
  ReesPackageData package;
  ReesValuedFamily family;
  std::vector<std::string> assertions;
};

Json rees_table_json(const ReesTable& table);
ReesTable rees_table_from_json(const Json& j);

}  // namespace resurgia
