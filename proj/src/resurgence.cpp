#include "resurgia/resurgence.hpp"

#include <algorithm>
#include <stdexcept>

namespace resurgia {

std::string to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::Exact: return "exact";
    case BoundDirection::Lower: return "lower";
    case BoundDirection::Unknown: return "unknown";
  }
  return "?";
}

ExtRational witness_value(const VertexFacetWitness& w) {
  Rational pairing = w.facet.evaluate(w.vertex);
  if (sgn(pairing) == 0) return ExtRational::pos_inf();
  return ExtRational(Rational(Rational(w.facet.offset()) / pairing));
}

namespace {

void require_same_ring(const GradedFamily& a, const GradedFamily& b) {
  if (!(a.ring() == b.ring())) throw Error("families live in different rings");
}

BoundDirection direction_for(const BodyCertificate& a, const BodyCertificate& b) {
  if (!b.exact()) return BoundDirection::Unknown;
  return a.exact() ? BoundDirection::Exact : BoundDirection::Lower;
}

}  // namespace

std::pair<ExtRational, std::optional<Witness>> checked_sup_noncontainment(const QPolyhedron& p, const QPolyhedron& q) {
  NoncontainmentValue nv = sup_noncontainment(p, q);
  std::optional<Witness> witness;
  if (nv.vertex) witness = VertexFacetWitness{p.vertices()[*nv.vertex], q.facets()[*nv.facet]};
  if (nv.value.finite()) {
    auto q_polar = polar(q);
    if (!q_polar) throw std::logic_error("finite noncontainment value but the target contains the origin");
    PairingValue pv = min_pairing(p, *q_polar);
    if (sgn(pv.value) == 0 || Rational(1 / pv.value) != nv.value.value())
      throw std::logic_error("polar-body recomputation disagrees with the noncontainment value");
  }
  return {nv.value, witness};
}

ResurgenceResult asymptotic_resurgence(const GradedFamily& a, const GradedFamily& b, unsigned budget) {
  require_same_ring(a, b);
  BodyCertificate ca = okounkov_body(a, budget);
  BodyCertificate cb = okounkov_body(b, budget);
  auto [value, witness] = checked_sup_noncontainment(ca.body, cb.body);
  ResurgenceResult res;
  res.value = value;
  res.method = BodyFormulaMethod{{ca.status, ca.index}, {cb.status, cb.index}};
  res.direction = direction_for(ca, cb);
  res.exact = res.direction == BoundDirection::Exact;
  res.witness = witness;
  res.equals = {"asymptotic_resurgence(a, closure(b))"};
  return res;
}

ExtRational dual_pair_resurgence(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!a.is_squarefree() || !b.is_squarefree()) throw Error("dual pair resurgence: inputs must be squarefree");
  QPolyhedron sp_a = symbolic_polyhedron(a);
  QPolyhedron sp_dual = symbolic_polyhedron(alexander_dual(b));
  PairingValue pv = min_pairing(sp_a, sp_dual);
  if (sgn(pv.value) == 0) return ExtRational::pos_inf();
  return ExtRational(Rational(1 / pv.value));
}

bool duality_check(const MonomialIdeal& a) {
  MonomialIdeal d = alexander_dual(a);
  return dual_pair_resurgence(a, a) == dual_pair_resurgence(d, d);
}

bool noncontainment(const GradedFamily& a, const GradedFamily& b, unsigned s, unsigned r, bool closure) {
  const MonomialIdeal as = a.member(s);
  if (closure) {
    const QPolyhedron np = b.member_newton(r);
    return std::any_of(as.generators().begin(), as.generators().end(),
                       [&](const Exponent& g) { return !np.contains_point(Point::from_integers(g)); });
  }
  return std::any_of(as.generators().begin(), as.generators().end(),
                     [&](const Exponent& g) { return !b.member_contains(r, g); });
}

ResurgenceResult resurgence_search(const GradedFamily& a, const GradedFamily& b, unsigned s_max, unsigned r_max,
                                   bool closure) {
  require_same_ring(a, b);
  if (s_max == 0 || r_max == 0) throw Error("search bounds must be positive");
  ResurgenceResult res;
  res.value = ExtRational::neg_inf();
  res.method = VertexSearchMethod{s_max, r_max, closure};
  res.direction = BoundDirection::Lower;
  for (unsigned s = 1; s <= s_max; ++s) {
    // The smallest r with a_s not in b_r gives the largest ratio for this s.
    for (unsigned r = 1; r <= r_max; ++r) {
      if (ExtRational(Rational(s, r)) <= res.value) break;
      if (noncontainment(a, b, s, r, closure)) {
        Rational ratio(s, r);
        ratio.canonicalize();
        res.value = ExtRational(ratio);
        res.witness = SearchWitness{s, r};
        break;
      }
    }
  }
  res.equals = {closure ? "resurgence(a, closure(b)) lower bound" : "resurgence(a, b) lower bound"};
  return res;
}

std::vector<std::pair<unsigned, ResurgenceResult>> truncation_resurgence_profile(const GradedFamily& a,
                                                                                 const GradedFamily& b,
                                                                                 unsigned n_max, unsigned s_max,
                                                                                 unsigned r_max, bool closure) {
  std::vector<std::pair<unsigned, ResurgenceResult>> out;
  for (unsigned n = 1; n <= n_max; ++n) out.emplace_back(n, resurgence_search(truncate(a, n), b, s_max, r_max, closure));
  return out;
}

Rational waldschmidt(const GradedFamily& family, const std::vector<Rational>& weights, unsigned budget) {
  if (weights.size() != family.ring().n()) throw Error("waldschmidt: weight length does not match the ring");
  bool nonzero = false;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw Error("waldschmidt: weights must be nonnegative");
    nonzero = nonzero || sgn(w) != 0;
  }
  if (!nonzero) throw Error("waldschmidt: zero weight vector");
  const Point wp(weights);
  auto min_over = [&](const QPolyhedron& body) {
    Rational best = dot(wp, body.vertices().front());
    for (const auto& v : body.vertices()) best = std::min(best, Rational(dot(wp, v)));
    return best;
  };
  BodyCertificate cert = okounkov_body(family, budget);
  if (cert.exact()) return min_over(cert.body);
  Rational best = min_over(family.member_newton(1));
  for (unsigned k = 2; k <= budget; ++k) best = std::min(best, Rational(min_over(family.member_newton(k)) / k));
  return best;
}

}  // namespace resurgia
