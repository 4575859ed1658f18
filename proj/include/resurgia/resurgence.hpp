#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "resurgia/family.hpp"

namespace resurgia {

enum class BoundDirection {
  Exact,    // the value is the invariant under the theorem's hypotheses
  Lower,    // certified lower bound
  Unknown,  // no direction can be claimed
};

std::string to_string(BoundDirection d);

struct CertificateSummary {
  BodyStatus status;
  unsigned index;
};

/// sup over the convex bodies (asymptotic resurgence against closures).
struct BodyFormulaMethod {
  CertificateSummary a;
  CertificateSummary b;
};

/// Finite scan of s <= s_max, r <= r_max.
struct VertexSearchMethod {
  unsigned s_max;
  unsigned r_max;
  bool closure;
};

/// sup{lambda : lambda Gamma_R(a) not in Gamma}, divided by the Veronese degree.
struct ReesFormulaMethod {
  CertificateSummary body;
  unsigned veronese = 1;
  bool b_equivalent = false;
};

using ResurgenceMethod = std::variant<BodyFormulaMethod, VertexSearchMethod, ReesFormulaMethod>;

/// A vertex u of the first body and a facet (h, c) of the second; value c / <h, u>.
struct VertexFacetWitness {
  Point vertex;
  Halfspace facet;
};

/// a_s is not contained in b_r; value s / r.
struct SearchWitness {
  unsigned s;
  unsigned r;
};

using Witness = std::variant<VertexFacetWitness, SearchWitness>;

struct ResurgenceResult {
  ExtRational value;
  ResurgenceMethod method;
  bool exact = false;
  BoundDirection direction = BoundDirection::Unknown;
  std::optional<Witness> witness;
  /// Caller-asserted hypotheses, echoed verbatim.
  std::vector<std::string> assertions;
  /// Invariants the value equals under the asserted hypotheses.
  std::vector<std::string> equals;
};

/// Recomputes the value from a vertex/facet witness alone.
ExtRational witness_value(const VertexFacetWitness& w);

/// sup_noncontainment(p, q) with the polar recomputation enforced: a finite
/// value must equal 1 / min_pairing(p, polar(q)) or std::logic_error is thrown.
std::pair<ExtRational, std::optional<Witness>> checked_sup_noncontainment(const QPolyhedron& p, const QPolyhedron& q);

/// sup{lambda : lambda Delta(a) not in Delta(b)}, cross-checked against
/// 1 / min <Delta(a), polar(Delta(b))> when finite.
ResurgenceResult asymptotic_resurgence(const GradedFamily& a, const GradedFamily& b,
                                       unsigned budget = kDefaultBodyBudget);

/// 1 / min <SP(a), SP(b^vee)>, the asymptotic resurgence of a^(.) against
/// the closures of the powers of b.
ExtRational dual_pair_resurgence(const MonomialIdeal& a, const MonomialIdeal& b);

/// dual_pair_resurgence(a, a) == dual_pair_resurgence(a^vee, a^vee).
bool duality_check(const MonomialIdeal& a);

inline constexpr unsigned kDefaultSearchBound = 24;
inline constexpr unsigned kDefaultTruncationMax = 12;

/// max s/r over s <= s_max, r <= r_max with a_s not in b_r (or not in the
/// closure of b_r when closure is set). Lower bound for the resurgence;
/// -inf when every pair is contained. Ties keep the smallest (s, r).
ResurgenceResult resurgence_search(const GradedFamily& a, const GradedFamily& b, unsigned s_max, unsigned r_max,
                                   bool closure = false);

/// True iff a_s is not contained in b_r (or its closure).
bool noncontainment(const GradedFamily& a, const GradedFamily& b, unsigned s, unsigned r, bool closure);

/// Search values for (truncate(a, n), b), n = 1..n_max.
std::vector<std::pair<unsigned, ResurgenceResult>> truncation_resurgence_profile(const GradedFamily& a,
                                                                                 const GradedFamily& b,
                                                                                 unsigned n_max, unsigned s_max,
                                                                                 unsigned r_max, bool closure = false);

/// Skew Waldschmidt constant of a monomial valuation with weights w.
/// Exact families: min over vertices of Delta of <w, x>. Otherwise the
/// running bound min_{k <= budget} v(a_k) / k.
Rational waldschmidt(const GradedFamily& family, const std::vector<Rational>& weights,
                     unsigned budget = kDefaultBodyBudget);

}  // namespace resurgia
