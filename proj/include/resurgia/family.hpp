#pragma once

// Graded families of monomial ideals a_1, a_2, ... with a_p * a_q in a_{p+q},
// described by rules, evaluated lazily and memoized.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "resurgia/monomial.hpp"

namespace resurgia {

class GradedFamily;

/// a_i = I^i
struct PowersRule {
  MonomialIdeal ideal;
};

/// a_i = I^(i)
struct SymbolicPowersRule {
  MonomialIdeal ideal;
};

/// a_i = integral closure of I^i. Membership queries only.
struct ClosurePowersRule {
  MonomialIdeal ideal;
};

/// a_i = I^e(i), e(i) = ceil((alpha*i + beta) / gamma), except at overridden indices.
struct PiecewiseRule {
  MonomialIdeal ideal;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 1;
  std::map<unsigned, MonomialIdeal> overrides;

  std::int64_t exponent(unsigned i) const;
};

/// n-th truncation: a_{n,k} = a_k for k <= n, else sum over i+j=k of a_{n,i} a_{n,j}.
struct TruncatedRule {
  std::shared_ptr<const GradedFamily> parent;
  unsigned n = 1;
};

using FamilyRule = std::variant<PowersRule, SymbolicPowersRule, ClosurePowersRule, PiecewiseRule, TruncatedRule>;

/// Handle to an immutable rule plus a shared memo. Copies share the cache;
/// member() is safe to call concurrently.
class GradedFamily {
 public:
  static GradedFamily powers(MonomialIdeal ideal);
  static GradedFamily symbolic_powers(MonomialIdeal ideal);
  static GradedFamily closure_powers(MonomialIdeal ideal);
  static GradedFamily piecewise(MonomialIdeal ideal, std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                std::map<unsigned, MonomialIdeal> overrides = {});

  const FamilyRule& rule() const { return state_->rule; }
  const Ring& ring() const { return state_->ring; }

  /// False for closure-powers families.
  bool supports_generators() const;

  /// a_i. Throws for i == 0 or for closure-only families.
  MonomialIdeal member(unsigned i) const;

  /// x^a in a_i (integral-closure membership for closure-powers families).
  bool member_contains(unsigned i, const Exponent& a) const;

  /// NP(a_i), memoized.
  QPolyhedron member_newton(unsigned i) const;

  /// Short description, e.g. "truncate(symbolic,3)".
  std::string describe() const;

 private:
  struct State {
    FamilyRule rule;
    Ring ring;
    mutable std::mutex mutex;
    mutable std::map<unsigned, MonomialIdeal> members;
    mutable std::map<unsigned, QPolyhedron> bodies;
    State(FamilyRule r, Ring g) : rule(std::move(r)), ring(std::move(g)) {}
  };
  explicit GradedFamily(std::shared_ptr<const State> s) : state_(std::move(s)) {}
  MonomialIdeal compute_member(unsigned i) const;

  std::shared_ptr<const State> state_;

  friend GradedFamily truncate(const GradedFamily& family, unsigned n);
};

/// n-th truncation of a family supporting generator extraction.
GradedFamily truncate(const GradedFamily& family, unsigned n);

/// a_p * a_q is contained in a_{p+q} for all p + q <= n.
bool validate_graded(const GradedFamily& family, unsigned n);

/// a_i contains a_{i+1} for all i < n.
bool is_filtration(const GradedFamily& family, unsigned n);

enum class BodyStatus {
  Exact,        // NP(a_{mk}) == m NP(a_k) verified for m in {2, 3}
  ClosedForm,   // body derived from the rule, no stabilization index verified
  Approximate,  // hull of (1/k) NP(a_k) for k <= budget
};

std::string to_string(BodyStatus status);

struct BodyCertificate {
  BodyStatus status;
  /// Stabilization index for Exact, budget for Approximate, 0 for ClosedForm.
  unsigned index;
  QPolyhedron body;

  bool exact() const { return status != BodyStatus::Approximate; }
};

inline constexpr unsigned kDefaultBodyBudget = 12;

/// Newton-Okounkov body: closure of the union of (1/k) NP(a_k).
BodyCertificate okounkov_body(const GradedFamily& family, unsigned budget = kDefaultBodyBudget);

/// Delta(a_{n,.}) for n = 1..n_max.
std::vector<std::pair<unsigned, QPolyhedron>> okounkov_truncation_profile(const GradedFamily& family, unsigned n_max,
                                                                          unsigned budget = kDefaultBodyBudget);

/// inf over k >= 1 (k not overridden) of e(k)/k for a piecewise rule, with
/// the limit alpha/gamma included. Zero means the body is the orthant.
Rational piecewise_body_scale(const PiecewiseRule& rule);

}  // namespace resurgia
