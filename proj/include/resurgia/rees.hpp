#pragma once

// Convex-body resurgence through Rees packages. The basis and valuations of
// a package are never represented; the module works on the value polyhedra
// V_R(a_k) = conv(v-values of members of a_k) + R^d_{>=0} and on Gamma.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resurgia/resurgence.hpp"

namespace resurgia {

/// Gamma of a Rees package for an ideal b: an integral, origin-free,
/// upward-closed polyhedron in R^d.
struct ReesPackageData {
  std::size_t d;
  QPolyhedron gamma;
  std::string label;
};

/// Validates integrality and the presence of a non-coordinate facet.
ReesPackageData make_rees_package(QPolyhedron gamma, std::string label);

/// v-values of the members of a graded family, per index.
class ReesValuedFamily {
 public:
  /// Values given as a finite table index -> nonnegative integer points.
  static ReesValuedFamily explicit_table(std::size_t d, std::map<unsigned, std::vector<Point>> values);
  /// Symbolic powers of the submaximal minors of an m x m symmetric matrix.
  static ReesValuedFamily symmetric_minors(unsigned m);

  std::size_t d() const { return d_; }
  bool closed_form() const { return symmetric_m_ != 0; }
  unsigned symmetric_m() const { return symmetric_m_; }

  /// Whether values(k) is available.
  bool has(unsigned k) const;
  /// Largest supplied index for tables; 0 (unbounded) for closed forms.
  unsigned max_index() const;
  std::vector<Point> values(unsigned k) const;
  /// V_R(a_k).
  QPolyhedron value_body(unsigned k) const;

  const std::map<unsigned, std::vector<Point>>& table() const { return table_; }

 private:
  ReesValuedFamily() = default;
  std::size_t d_ = 0;
  unsigned symmetric_m_ = 0;
  std::map<unsigned, std::vector<Point>> table_;
};

/// Gamma_R(a) = closure of the union of (1/k) V_R(a_k).
BodyCertificate gamma_body(const ReesValuedFamily& family, unsigned budget = kDefaultBodyBudget);

/// Every u + w with u in values(p), w in values(q) lies in V_R(a_{p+q}), p + q <= bound.
bool validate_superadditive(const ReesValuedFamily& family, unsigned bound);

/// sup{lambda : lambda Gamma_R(a) not in Gamma}.
ResurgenceResult rees_resurgence(const ReesValuedFamily& family, const ReesPackageData& package,
                                 unsigned budget = kDefaultBodyBudget);

/// rees_resurgence with the package taken for b_k, divided by k.
ResurgenceResult veronese_resurgence(const ReesValuedFamily& family, const ReesPackageData& package, unsigned k,
                                     unsigned budget = kDefaultBodyBudget);

/// rees_resurgence labelled as equal to the three b-equivalent invariants.
/// The caller's assertions are carried verbatim.
ResurgenceResult b_equivalent_resurgence(const ReesValuedFamily& family, const ReesPackageData& package,
                                         std::vector<std::string> assertions, unsigned budget = kDefaultBodyBudget);

/// Package Gamma = conv{(m-1, ..., 1, 0)} + orthant and the value family of b^(.).
std::pair<ReesPackageData, ReesValuedFamily> symmetric_minors_family(unsigned m);

/// conv{(1/2)(m, ..., 1), (m-1, ..., 0)} + orthant.
QPolyhedron symmetric_minors_body(unsigned m);

}  // namespace resurgia
