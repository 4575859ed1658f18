#include "resurgia/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace resurgia {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("parse error at position " + std::to_string(position) + ": " + message), position_(position) {}

// ---------------------------------------------------------------- ideal grammar

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::uint32_t exponent() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a nonnegative integer exponent");
    return static_cast<std::uint32_t>(value);
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& message) { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& message) { throw ParseError(at, message); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void expect_keyword(Cursor& c, const char* word) {
  const std::size_t at = c.position();
  if (c.identifier() != word) c.fail_at(at, std::string("expected '") + word + "'");
}

Exponent parse_monomial(Cursor& c, const Ring& ring) {
  Exponent a(ring.n(), 0);
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    const std::size_t at = c.position();
    if (c.exponent() != 1) c.fail_at(at, "the only numeric monomial is 1");
    return a;
  }
  do {
    const std::size_t at = c.position();
    const std::string name = c.identifier();
    const std::size_t idx = ring.index_of(name);
    if (idx == ring.n()) c.fail_at(at, "unknown variable '" + name + "'");
    std::uint32_t e = 1;
    if (c.accept('^')) e = c.exponent();
    a[idx] += e;
  } while (c.accept('*'));
  return a;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text) {
  Cursor c(text);
  if (c.peek() == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
    return ideal_from_json(j);
  }
  expect_keyword(c, "vars");
  c.expect('=');
  std::vector<std::string> names;
  do {
    names.push_back(c.identifier());
  } while (c.accept(','));
  std::optional<Ring> ring;
  try {
    ring.emplace(names);
  } catch (const Error& e) {
    c.fail(e.what());
  }
  c.expect(';');
  expect_keyword(c, "gens");
  c.expect('=');
  std::vector<Exponent> gens;
  if (c.done()) return MonomialIdeal::zero(*ring);
  if (c.peek() == '0') {
    c.exponent();
    if (!c.done()) c.fail("trailing input after the zero ideal");
    return MonomialIdeal::zero(*ring);
  }
  do {
    gens.push_back(parse_monomial(c, *ring));
  } while (c.accept(','));
  if (!c.done()) c.fail("unexpected character");
  return MonomialIdeal(*ring, std::move(gens));
}

std::string print_ideal(const MonomialIdeal& ideal) {
  std::string out = "vars=";
  const auto& names = ideal.ring().names();
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  out += "; gens=";
  if (ideal.is_zero()) return out + "0";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    out += (i ? ", " : "") + monomial_string(ideal.ring(), ideal.generators()[i]);
  return out;
}

// ---------------------------------------------------------------- family shorthand

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw Error(std::string("family: ") + what + " must be an integer, got '" + s + "'");
  }
}

const MonomialIdeal& lookup(const std::map<std::string, MonomialIdeal>& ideals, const std::string& name) {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("family: unknown ideal '" + name + "'");
  return it->second;
}

}  // namespace

GradedFamily parse_family(std::string_view text, const std::map<std::string, MonomialIdeal>& ideals) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("family: expected kind:arguments, got '" + std::string(text) + "'");
  const std::string kind(text.substr(0, colon));
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "truncate") {
    const auto last = rest.rfind(':');
    if (last == std::string_view::npos) throw Error("family: truncate needs <family>:<n>");
    const std::int64_t n = parse_int(std::string(rest.substr(last + 1)), "truncation index");
    if (n < 1) throw Error("family: truncation index must be positive");
    return truncate(parse_family(rest.substr(0, last), ideals), static_cast<unsigned>(n));
  }
  const auto args = split(rest, ':');
  if (kind == "powers" || kind == "symbolic" || kind == "closure-powers") {
    if (args.size() != 1) throw Error("family: " + kind + " takes one ideal name");
    const MonomialIdeal& ideal = lookup(ideals, args[0]);
    if (kind == "powers") return GradedFamily::powers(ideal);
    if (kind == "symbolic") return GradedFamily::symbolic_powers(ideal);
    return GradedFamily::closure_powers(ideal);
  }
  if (kind == "piecewise") {
    if (args.size() < 4) throw Error("family: piecewise:I:alpha:beta:gamma[:k=J^p ...]");
    const MonomialIdeal& ideal = lookup(ideals, args[0]);
    std::map<unsigned, MonomialIdeal> overrides;
    for (std::size_t i = 4; i < args.size(); ++i) {
      const auto eq = args[i].find('=');
      if (eq == std::string::npos) throw Error("family: override must read k=J or k=J^p");
      const std::int64_t k = parse_int(args[i].substr(0, eq), "override index");
      if (k < 1) throw Error("family: override index must be positive");
      std::string target = args[i].substr(eq + 1);
      std::int64_t p = 1;
      if (const auto caret = target.find('^'); caret != std::string::npos) {
        p = parse_int(target.substr(caret + 1), "override power");
        if (p < 0) throw Error("family: negative override power");
        target = target.substr(0, caret);
      }
      overrides.insert_or_assign(static_cast<unsigned>(k), power(lookup(ideals, target), static_cast<unsigned>(p)));
    }
    return GradedFamily::piecewise(ideal, parse_int(args[1], "alpha"), parse_int(args[2], "beta"),
                                   parse_int(args[3], "gamma"), std::move(overrides));
  }
  throw Error("family: unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------- JSON scalars

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("JSON: missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("JSON: bad value for ") + what);
  }
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  throw Error("JSON: rationals must be \"p/q\" strings or integers");
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw Error("JSON: expected an integer");
    return q.get_num();
  }
  throw Error("JSON: expected an integer");
}

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(rational_json(c));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw Error("JSON: points are arrays");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Point(std::move(coords));
}

namespace {

Json halfspace_json(const Halfspace& h) {
  Json normal = Json::array();
  for (const auto& c : h.normal()) normal.push_back(integer_json(c));
  Json out;
  out["normal"] = std::move(normal);
  out["offset"] = integer_json(h.offset());
  return out;
}

Halfspace halfspace_from_json(const Json& j) {
  std::vector<Rational> normal;
  for (const auto& c : field(j, "normal")) normal.push_back(Rational(integer_from_json(c)));
  return Halfspace::primitive(normal, Rational(integer_from_json(field(j, "offset"))));
}

}  // namespace

Json polyhedron_json(const QPolyhedron& p) {
  Json out;
  out["dim"] = p.dim();
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(point_json(v));
  out["vertices"] = std::move(vertices);
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(halfspace_json(f));
  out["facets"] = std::move(facets);
  return out;
}

QPolyhedron polyhedron_from_json(const Json& j) {
  const auto dim = get_as<std::size_t>(field(j, "dim"), "dim");
  std::vector<Point> vertices;
  for (const auto& v : field(j, "vertices")) {
    vertices.push_back(point_from_json(v));
    if (vertices.back().dim() != dim) throw Error("JSON: vertex dimension does not match dim");
  }
  if (vertices.empty()) throw Error("JSON: a polyhedron needs at least one vertex");
  QPolyhedron p = hull_plus_orthant(vertices);
  if (j.contains("facets")) {
    std::vector<Halfspace> facets;
    for (const auto& f : j.at("facets")) facets.push_back(halfspace_from_json(f));
    std::sort(facets.begin(), facets.end());
    if (facets != p.facets()) throw Error("JSON: facets do not match the vertices");
  }
  return p;
}

Json ideal_json(const MonomialIdeal& ideal) {
  Json out;
  out["ring"] = ideal.ring().names();
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g);
  out["gens"] = std::move(gens);
  return out;
}

MonomialIdeal ideal_from_json(const Json& j) {
  Ring ring(get_as<std::vector<std::string>>(field(j, "ring"), "ring"));
  std::vector<Exponent> gens;
  for (const auto& g : field(j, "gens")) {
    if (!g.is_array() || g.size() != ring.n()) throw Error("JSON: generator length does not match the ring");
    Exponent a;
    for (const auto& e : g) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0) throw Error("JSON: exponents are nonnegative integers");
      if (e.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) throw Error("JSON: exponent too large");
      a.push_back(static_cast<std::uint32_t>(e.get<std::int64_t>()));
    }
    gens.push_back(std::move(a));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

// ---------------------------------------------------------------- families

Json family_json(const GradedFamily& family) {
  Json out;
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, PowersRule>) {
          out["kind"] = "powers";
          out["ideal"] = ideal_json(r.ideal);
        } else if constexpr (std::is_same_v<R, SymbolicPowersRule>) {
          out["kind"] = "symbolic";
          out["ideal"] = ideal_json(r.ideal);
        } else if constexpr (std::is_same_v<R, ClosurePowersRule>) {
          out["kind"] = "closure_powers";
          out["ideal"] = ideal_json(r.ideal);
        } else if constexpr (std::is_same_v<R, PiecewiseRule>) {
          out["kind"] = "piecewise";
          out["ideal"] = ideal_json(r.ideal);
          out["alpha"] = r.alpha;
          out["beta"] = r.beta;
          out["gamma"] = r.gamma;
          Json overrides = Json::object();
          for (const auto& [k, ideal] : r.overrides) overrides[std::to_string(k)] = ideal_json(ideal);
          out["overrides"] = std::move(overrides);
        } else {
          out["kind"] = "truncate";
          out["parent"] = family_json(*r.parent);
          out["n"] = r.n;
        }
      },
      family.rule());
  return out;
}

GradedFamily family_from_json(const Json& j) {
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "truncate") {
    const auto n = get_as<std::int64_t>(field(j, "n"), "n");
    if (n < 1) throw Error("JSON: truncation index must be positive");
    return truncate(family_from_json(field(j, "parent")), static_cast<unsigned>(n));
  }
  MonomialIdeal ideal = ideal_from_json(field(j, "ideal"));
  if (kind == "powers") return GradedFamily::powers(std::move(ideal));
  if (kind == "symbolic") return GradedFamily::symbolic_powers(std::move(ideal));
  if (kind == "closure_powers") return GradedFamily::closure_powers(std::move(ideal));
  if (kind == "piecewise") {
    std::map<unsigned, MonomialIdeal> overrides;
    if (j.contains("overrides")) {
      for (const auto& [key, value] : j.at("overrides").items()) {
        std::int64_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoll(key, &used);
          if (used != key.size()) k = 0;
        } catch (const std::logic_error&) {
        }
        if (k < 1) throw Error("JSON: override keys are positive integers");
        overrides.insert_or_assign(static_cast<unsigned>(k), ideal_from_json(value));
      }
    }
    return GradedFamily::piecewise(std::move(ideal), get_as<std::int64_t>(field(j, "alpha"), "alpha"),
                                   get_as<std::int64_t>(field(j, "beta"), "beta"),
                                   get_as<std::int64_t>(field(j, "gamma"), "gamma"), std::move(overrides));
  }
  throw Error("JSON: unknown family kind '" + kind + "'");
}

// ---------------------------------------------------------------- certificates and results

namespace {

BodyStatus status_from_string(const std::string& s) {
  for (BodyStatus b : {BodyStatus::Exact, BodyStatus::ClosedForm, BodyStatus::Approximate})
    if (to_string(b) == s) return b;
  throw Error("JSON: unknown certificate status '" + s + "'");
}

BoundDirection direction_from_string(const std::string& s) {
  for (BoundDirection d : {BoundDirection::Exact, BoundDirection::Lower, BoundDirection::Unknown})
    if (to_string(d) == s) return d;
  throw Error("JSON: unknown bound direction '" + s + "'");
}

Json summary_json(const CertificateSummary& s) {
  Json out;
  out["status"] = to_string(s.status);
  out["index"] = s.index;
  return out;
}

CertificateSummary summary_from_json(const Json& j) {
  return {status_from_string(get_as<std::string>(field(j, "status"), "status")),
          get_as<unsigned>(field(j, "index"), "index")};
}

}  // namespace

Json certificate_json(const BodyCertificate& cert) {
  Json out;
  out["status"] = to_string(cert.status);
  out["index"] = cert.index;
  out["body"] = polyhedron_json(cert.body);
  return out;
}

BodyCertificate certificate_from_json(const Json& j) {
  return {status_from_string(get_as<std::string>(field(j, "status"), "status")),
          get_as<unsigned>(field(j, "index"), "index"), polyhedron_from_json(field(j, "body"))};
}

Json result_json(const ResurgenceResult& result) {
  Json out;
  out["value"] = result.value.str();
  out["exact"] = result.exact;
  out["bound_direction"] = to_string(result.direction);
  Json method;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, BodyFormulaMethod>) {
          method["kind"] = "body_formula";
          method["a"] = summary_json(m.a);
          method["b"] = summary_json(m.b);
        } else if constexpr (std::is_same_v<M, VertexSearchMethod>) {
          method["kind"] = "vertex_search";
          method["s_max"] = m.s_max;
          method["r_max"] = m.r_max;
          method["closure"] = m.closure;
        } else {
          method["kind"] = "rees_formula";
          method["body"] = summary_json(m.body);
          method["veronese"] = m.veronese;
          method["b_equivalent"] = m.b_equivalent;
        }
      },
      result.method);
  out["method"] = std::move(method);
  Json witness = nullptr;
  if (result.witness) {
    std::visit(
        [&](const auto& w) {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, VertexFacetWitness>) {
            witness["kind"] = "vertex_facet";
            witness["vertex"] = point_json(w.vertex);
            witness["facet"] = halfspace_json(w.facet);
          } else {
            witness["kind"] = "search";
            witness["s"] = w.s;
            witness["r"] = w.r;
          }
        },
        *result.witness);
  }
  out["witness"] = std::move(witness);
  out["assertions"] = result.assertions;
  out["equals"] = result.equals;
  return out;
}

ResurgenceResult result_from_json(const Json& j) {
  ResurgenceResult r;
  r.value = ExtRational::parse(get_as<std::string>(field(j, "value"), "value"));
  r.exact = get_as<bool>(field(j, "exact"), "exact");
  r.direction = direction_from_string(get_as<std::string>(field(j, "bound_direction"), "bound_direction"));
  const Json& m = field(j, "method");
  const auto kind = get_as<std::string>(field(m, "kind"), "method kind");
  if (kind == "body_formula") {
    r.method = BodyFormulaMethod{summary_from_json(field(m, "a")), summary_from_json(field(m, "b"))};
  } else if (kind == "vertex_search") {
    r.method = VertexSearchMethod{get_as<unsigned>(field(m, "s_max"), "s_max"),
                                  get_as<unsigned>(field(m, "r_max"), "r_max"),
                                  get_as<bool>(field(m, "closure"), "closure")};
  } else if (kind == "rees_formula") {
    r.method = ReesFormulaMethod{summary_from_json(field(m, "body")), get_as<unsigned>(field(m, "veronese"), "veronese"),
                                 get_as<bool>(field(m, "b_equivalent"), "b_equivalent")};
  } else {
    throw Error("JSON: unknown method '" + kind + "'");
  }
  const Json& w = field(j, "witness");
  if (!w.is_null()) {
    const auto wkind = get_as<std::string>(field(w, "kind"), "witness kind");
    if (wkind == "vertex_facet")
      r.witness = VertexFacetWitness{point_from_json(field(w, "vertex")), halfspace_from_json(field(w, "facet"))};
    else if (wkind == "search")
      r.witness = SearchWitness{get_as<unsigned>(field(w, "s"), "s"), get_as<unsigned>(field(w, "r"), "r")};
    else
      throw Error("JSON: unknown witness '" + wkind + "'");
  }
  if (j.contains("assertions")) r.assertions = get_as<std::vector<std::string>>(j.at("assertions"), "assertions");
  if (j.contains("equals")) r.equals = get_as<std::vector<std::string>>(j.at("equals"), "equals");
  return r;
}

// ---------------------------------------------------------------- Rees tables

Json rees_table_json(const ReesTable& table) {
  Json out;
  out["d"] = table.package.d;
  out["gamma"] = polyhedron_json(table.package.gamma);
  Json values = Json::object();
  for (const auto& [k, pts] : table.family.table()) {
    Json list = Json::array();
    for (const auto& p : pts) list.push_back(point_json(p));
    values[std::to_string(k)] = std::move(list);
  }
  out["values"] = std::move(values);
  out["assertions"] = table.assertions;
  return out;
}

ReesTable rees_table_from_json(const Json& j) {
  const auto d = get_as<std::size_t>(field(j, "d"), "d");
  QPolyhedron gamma = polyhedron_from_json(field(j, "gamma"));
  if (gamma.dim() != d) throw Error("Rees table: Gamma dimension does not match d");
  std::map<unsigned, std::vector<Point>> values;
  for (const auto& [key, list] : field(j, "values").items()) {
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoll(key, &used);
      if (used != key.size()) k = 0;
    } catch (const std::logic_error&) {
    }
    if (k < 1) throw Error("Rees table: value keys are positive integers");
    std::vector<Point> pts;
    for (const auto& p : list) pts.push_back(point_from_json(p));
    values.emplace(static_cast<unsigned>(k), std::move(pts));
  }
  std::vector<std::string> assertions;
  if (j.contains("assertions")) assertions = get_as<std::vector<std::string>>(j.at("assertions"), "assertions");
  return {make_rees_package(std::move(gamma), "table"), ReesValuedFamily::explicit_table(d, std::move(values)),
          std::move(assertions)};
}

}  // namespace resurgia
