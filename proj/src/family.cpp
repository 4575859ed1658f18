#include "resurgia/family.hpp"

#include <algorithm>
#include <numeric>

namespace resurgia {

namespace {

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

void require_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw Error(std::string(what) + ": zero ideal");
}

}  // namespace

std::int64_t PiecewiseRule::exponent(unsigned i) const { return ceil_div(alpha * i + beta, gamma); }

// ---------------------------------------------------------------- construction

GradedFamily GradedFamily::powers(MonomialIdeal ideal) {
  require_nonzero(ideal, "powers family");
  Ring ring = ideal.ring();
  return GradedFamily(std::make_shared<State>(PowersRule{std::move(ideal)}, std::move(ring)));
}

GradedFamily GradedFamily::symbolic_powers(MonomialIdeal ideal) {
  require_nonzero(ideal, "symbolic family");
  if (ideal.is_unit()) throw Error("symbolic family: unit ideal");
  if (!ideal.is_squarefree() && !has_no_embedded_components(ideal))
    throw Error("symbolic family: ideal has embedded components");
  Ring ring = ideal.ring();
  return GradedFamily(std::make_shared<State>(SymbolicPowersRule{std::move(ideal)}, std::move(ring)));
}

GradedFamily GradedFamily::closure_powers(MonomialIdeal ideal) {
  require_nonzero(ideal, "closure-powers family");
  Ring ring = ideal.ring();
  return GradedFamily(std::make_shared<State>(ClosurePowersRule{std::move(ideal)}, std::move(ring)));
}

GradedFamily GradedFamily::piecewise(MonomialIdeal ideal, std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                     std::map<unsigned, MonomialIdeal> overrides) {
  require_nonzero(ideal, "piecewise family");
  if (gamma <= 0) throw Error("piecewise family: gamma must be positive");
  if (alpha < 0) throw Error("piecewise family: alpha must be nonnegative");
  for (const auto& [k, j] : overrides) {
    if (k == 0) throw Error("piecewise family: override index 0");
    if (!(j.ring() == ideal.ring())) throw Error("piecewise family: override ring mismatch");
    require_nonzero(j, "piecewise override");
  }
  Ring ring = ideal.ring();
  return GradedFamily(
      std::make_shared<State>(PiecewiseRule{std::move(ideal), alpha, beta, gamma, std::move(overrides)}, std::move(ring)));
}

GradedFamily truncate(const GradedFamily& family, unsigned n) {
  if (n == 0) throw Error("truncate: n must be at least 1");
  if (!family.supports_generators()) throw Error("truncate: family does not support generator extraction");
  auto parent = std::make_shared<const GradedFamily>(family);
  return GradedFamily(std::make_shared<GradedFamily::State>(TruncatedRule{std::move(parent), n}, family.ring()));
}

// ---------------------------------------------------------------- members

bool GradedFamily::supports_generators() const {
  return !std::holds_alternative<ClosurePowersRule>(state_->rule);
}

MonomialIdeal GradedFamily::member(unsigned i) const {
  if (i == 0) throw Error("family member index must be at least 1");
  if (!supports_generators()) throw Error("closure-powers family supports membership queries only");
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->members.find(i); it != state_->members.end()) return it->second;
  }
  MonomialIdeal computed = compute_member(i);
  std::lock_guard lock(state_->mutex);
  return state_->members.emplace(i, std::move(computed)).first->second;
}

MonomialIdeal GradedFamily::compute_member(unsigned i) const {
  struct Visitor {
    const GradedFamily& self;
    unsigned i;
    MonomialIdeal operator()(const PowersRule& r) const {
      if (i > 1) return product(self.member(i - 1), r.ideal);
      return r.ideal;
    }
    MonomialIdeal operator()(const SymbolicPowersRule& r) const { return symbolic_power(r.ideal, i); }
    MonomialIdeal operator()(const ClosurePowersRule&) const {
      throw Error("closure-powers family supports membership queries only");
    }
    MonomialIdeal operator()(const PiecewiseRule& r) const {
      if (auto it = r.overrides.find(i); it != r.overrides.end()) return it->second;
      std::int64_t e = r.exponent(i);
      if (e <= 0) return MonomialIdeal::unit(r.ideal.ring());
      return power(r.ideal, static_cast<unsigned>(e));
    }
    MonomialIdeal operator()(const TruncatedRule& r) const {
      if (i <= r.n) return r.parent->member(i);
      // Splits with the smaller index <= n generate all other splits.
      MonomialIdeal acc = MonomialIdeal::zero(self.ring());
      for (unsigned j = 1; j <= r.n; ++j) acc = sum(acc, product(self.member(j), self.member(i - j)));
      return acc;
    }
  };
  return std::visit(Visitor{*this, i}, state_->rule);
}

bool GradedFamily::member_contains(unsigned i, const Exponent& a) const {
  if (i == 0) throw Error("family member index must be at least 1");
  if (const auto* c = std::get_if<ClosurePowersRule>(&state_->rule)) {
    if (a.size() != c->ideal.n()) throw Error("membership: exponent length does not match the ring");
    return member_newton(i).contains_point(Point::from_integers(a));
  }
  return member(i).contains(a);
}

QPolyhedron GradedFamily::member_newton(unsigned i) const {
  if (i == 0) throw Error("family member index must be at least 1");
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->bodies.find(i); it != state_->bodies.end()) return it->second;
  }
  // NP(I^e) = e NP(I) spares the generator blowup of large powers.
  auto power_body = [&](const MonomialIdeal& base, std::int64_t e) -> QPolyhedron {
    if (e <= 0) return orthant(base.n());
    return scale(Rational(static_cast<long>(e)), newton_polyhedron(base));
  };
  QPolyhedron computed = [&] {
    if (const auto* p = std::get_if<PowersRule>(&state_->rule)) return power_body(p->ideal, i);
    if (const auto* c = std::get_if<ClosurePowersRule>(&state_->rule)) return power_body(c->ideal, i);
    if (const auto* w = std::get_if<PiecewiseRule>(&state_->rule); w && !w->overrides.contains(i))
      return power_body(w->ideal, w->exponent(i));
    return newton_polyhedron(member(i));
  }();
  std::lock_guard lock(state_->mutex);
  return state_->bodies.emplace(i, std::move(computed)).first->second;
}

std::string GradedFamily::describe() const {
  struct Visitor {
    std::string operator()(const PowersRule&) const { return "powers"; }
    std::string operator()(const SymbolicPowersRule&) const { return "symbolic"; }
    std::string operator()(const ClosurePowersRule&) const { return "closure_powers"; }
    std::string operator()(const PiecewiseRule& r) const {
      std::string s = "piecewise(" + std::to_string(r.alpha) + "," + std::to_string(r.beta) + "," +
                      std::to_string(r.gamma);
      for (const auto& [k, j] : r.overrides) s += ";" + std::to_string(k) + "=" + j.str();
      return s + ")";
    }
    std::string operator()(const TruncatedRule& r) const {
      return "truncate(" + r.parent->describe() + "," + std::to_string(r.n) + ")";
    }
  };
  return std::visit(Visitor{}, state_->rule);
}

// ---------------------------------------------------------------- checks

bool validate_graded(const GradedFamily& family, unsigned n) {
  if (!family.supports_generators()) throw Error("validate_graded: family does not support generator extraction");
  for (unsigned p = 1; p < n; ++p)
    for (unsigned q = p; p + q <= n; ++q)
      if (!family.member(p + q).contains(product(family.member(p), family.member(q)))) return false;
  return true;
}

bool is_filtration(const GradedFamily& family, unsigned n) {
  if (!family.supports_generators()) throw Error("is_filtration: family does not support generator extraction");
  for (unsigned i = 1; i < n; ++i)
    if (!family.member(i).contains(family.member(i + 1))) return false;
  return true;
}

// ---------------------------------------------------------------- bodies

std::string to_string(BodyStatus status) {
  switch (status) {
    case BodyStatus::Exact: return "exact";
    case BodyStatus::ClosedForm: return "closed_form";
    case BodyStatus::Approximate: return "approximate";
  }
  return "?";
}

Rational piecewise_body_scale(const PiecewiseRule& rule) {
  if (rule.gamma <= 0) throw Error("piecewise: gamma must be positive");
  if (rule.alpha == 0) return 0;  // e is eventually constant, so e(k)/k -> 0
  const Rational limit(rule.alpha, rule.gamma);
  Rational best = limit;
  // e(k + gamma) = e(k) + alpha, so whether e(k)/k < alpha/gamma depends only on
  // k mod gamma, and within a class the ratio increases towards alpha/gamma.
  for (std::int64_t r = 1; r <= rule.gamma; ++r) {
    if (rule.exponent(static_cast<unsigned>(r)) * rule.gamma >= rule.alpha * r) continue;
    std::int64_t k = r;
    while (rule.overrides.contains(static_cast<unsigned>(k))) k += rule.gamma;
    std::int64_t e = rule.exponent(static_cast<unsigned>(k));
    if (e <= 0) return 0;
    Rational c(e, k);
    c.canonicalize();
    if (c < best) best = c;
  }
  return best;
}

namespace {

bool stabilizes_at(const GradedFamily& family, unsigned k) {
  const QPolyhedron base = family.member_newton(k);
  for (unsigned m : {2u, 3u})
    if (!(family.member_newton(m * k) == scale(Rational(m), base))) return false;
  return true;
}

QPolyhedron scaled_member(const GradedFamily& family, unsigned k) {
  return scale(Rational(1, k), family.member_newton(k));
}

// First k <= budget where the body stabilizes and already absorbs every earlier (1/j) NP(a_j).
std::optional<unsigned> find_stabilization(const GradedFamily& family, unsigned budget,
                                           const std::optional<QPolyhedron>& expected) {
  // A candidate must absorb every (1/j) NP(a_j) seen within the budget, not
  // only the earlier ones: multiples of k can agree while a later j is larger.
  std::vector<QPolyhedron> seen;
  for (unsigned j = 1; j <= budget; ++j) seen.push_back(scaled_member(family, j));
  for (unsigned k = 1; k <= budget; ++k) {
    const QPolyhedron& here = seen[k - 1];
    if (expected && !(here == *expected)) continue;
    bool absorbs = std::all_of(seen.begin(), seen.end(), [&](const QPolyhedron& e) { return contains(here, e); });
    if (absorbs && stabilizes_at(family, k)) return k;
  }
  return std::nullopt;
}

QPolyhedron piecewise_body(const PiecewiseRule& rule) {
  Rational c = piecewise_body_scale(rule);
  const std::size_t n = rule.ideal.n();
  if (sgn(c) == 0) return orthant(n);
  std::vector<QPolyhedron> parts{scale(c, newton_polyhedron(rule.ideal))};
  for (const auto& [k, j] : rule.overrides) parts.push_back(scale(Rational(1, k), newton_polyhedron(j)));
  return hull_of_union(parts);
}

}  // namespace

BodyCertificate okounkov_body(const GradedFamily& family, unsigned budget) {
  if (budget == 0) throw Error("okounkov_body: budget must be at least 1");
  const FamilyRule& rule = family.rule();

  if (const auto* p = std::get_if<PowersRule>(&rule)) {
    if (!stabilizes_at(family, 1)) throw std::logic_error("powers family failed to stabilize at 1");
    return {BodyStatus::Exact, 1, newton_polyhedron(p->ideal)};
  }
  if (const auto* c = std::get_if<ClosurePowersRule>(&rule))
    return {BodyStatus::Exact, 1, newton_polyhedron(c->ideal)};

  if (const auto* s = std::get_if<SymbolicPowersRule>(&rule)) {
    QPolyhedron body = symbolic_polyhedron(s->ideal);
    std::vector<Rational> coords;
    for (const auto& v : body.vertices()) coords.insert(coords.end(), v.coords().begin(), v.coords().end());
    Integer k = common_denominator(coords);
    if (k <= budget) {
      unsigned kk = static_cast<unsigned>(k.get_ui());
      if (scaled_member(family, kk) == body && stabilizes_at(family, kk)) return {BodyStatus::Exact, kk, body};
    }
    return {BodyStatus::ClosedForm, 0, body};
  }

  if (const auto* w = std::get_if<PiecewiseRule>(&rule)) {
    QPolyhedron body = piecewise_body(*w);
    if (auto k = find_stabilization(family, budget, body)) return {BodyStatus::Exact, *k, body};
    return {BodyStatus::ClosedForm, 0, body};
  }

  // Generated in degrees <= n, so the body is the hull of the first n slices.
  if (const auto* t = std::get_if<TruncatedRule>(&rule)) {
    std::vector<QPolyhedron> parts;
    for (unsigned k = 1; k <= t->n; ++k) parts.push_back(scaled_member(family, k));
    QPolyhedron body = hull_of_union(parts);
    if (auto k = find_stabilization(family, budget, body)) return {BodyStatus::Exact, *k, body};
    return {BodyStatus::ClosedForm, 0, body};
  }

  if (auto k = find_stabilization(family, budget, std::nullopt))
    return {BodyStatus::Exact, *k, scaled_member(family, *k)};
  std::vector<QPolyhedron> parts;
  for (unsigned k = 1; k <= budget; ++k) parts.push_back(scaled_member(family, k));
  return {BodyStatus::Approximate, budget, hull_of_union(parts)};
}

std::vector<std::pair<unsigned, QPolyhedron>> okounkov_truncation_profile(const GradedFamily& family, unsigned n_max,
                                                                          unsigned budget) {
  std::vector<std::pair<unsigned, QPolyhedron>> out;
  for (unsigned n = 1; n <= n_max; ++n) out.emplace_back(n, okounkov_body(truncate(family, n), budget).body);
  return out;
}

}  // namespace resurgia
