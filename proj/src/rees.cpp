#include "resurgia/rees.hpp"

#include <algorithm>

namespace resurgia {

ReesPackageData make_rees_package(QPolyhedron gamma, std::string label) {
  for (const auto& v : gamma.vertices())
    for (const auto& c : v.coords())
      if (c.get_den() != 1) throw Error("Rees package: Gamma must be integral, vertex " + v.str());
  if (gamma.facets().empty()) throw Error("Rees package: Gamma needs a non-coordinate facet");
  const std::size_t d = gamma.dim();
  return {d, std::move(gamma), std::move(label)};
}

// ---------------------------------------------------------------- value families

ReesValuedFamily ReesValuedFamily::explicit_table(std::size_t d, std::map<unsigned, std::vector<Point>> values) {
  if (d == 0) throw Error("Rees values: d must be positive");
  if (values.empty()) throw Error("Rees values: empty table");
  for (const auto& [k, pts] : values) {
    if (k == 0) throw Error("Rees values: index 0");
    if (pts.empty()) throw Error("Rees values: no points at index " + std::to_string(k));
    for (const auto& p : pts) {
      if (p.dim() != d) throw Error("Rees values: dimension mismatch at index " + std::to_string(k));
      for (const auto& c : p.coords())
        if (sgn(c) < 0 || c.get_den() != 1)
          throw Error("Rees values: points must be nonnegative integers, got " + p.str());
    }
  }
  ReesValuedFamily f;
  f.d_ = d;
  f.table_ = std::move(values);
  return f;
}

ReesValuedFamily ReesValuedFamily::symmetric_minors(unsigned m) {
  if (m < 3) throw Error("symmetric minors: m must be at least 3");
  ReesValuedFamily f;
  f.d_ = m;
  f.symmetric_m_ = m;
  return f;
}

bool ReesValuedFamily::has(unsigned k) const {
  if (k == 0) return false;
  return closed_form() || table_.contains(k);
}

unsigned ReesValuedFamily::max_index() const { return closed_form() ? 0 : table_.rbegin()->first; }

std::vector<Point> ReesValuedFamily::values(unsigned k) const {
  if (!has(k)) throw Error("Rees values: no data for index " + std::to_string(k));
  if (!closed_form()) return table_.at(k);
  // v(b^(2j)) = j v(b^(2)) and v(b^(2j+1)) = j v(b^(2)) + v(b), where b^(2)
  // = b^2 + I_m(Y), v(b) = (m-1, ..., 0) and v(I_m(Y)) = (m, ..., 1).
  const unsigned m = symmetric_m_;
  const long j = k / 2;
  std::vector<long> top(m), low(m), shifted(m);
  for (unsigned i = 0; i < m; ++i) {
    top[i] = static_cast<long>(m - i) * (k % 2 == 0 ? j : j + 1) - (k % 2 == 0 ? 0 : 1);
    low[i] = static_cast<long>(m - 1 - i) * k;
  }
  std::vector<Point> out{Point::from_ints(top), Point::from_ints(low)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QPolyhedron ReesValuedFamily::value_body(unsigned k) const { return hull_plus_orthant(values(k)); }

QPolyhedron symmetric_minors_body(unsigned m) {
  if (m < 3) throw Error("symmetric minors: m must be at least 3");
  std::vector<Rational> half(m), low(m);
  for (unsigned i = 0; i < m; ++i) {
    half[i] = Rational(m - i, 2);
    half[i].canonicalize();
    low[i] = m - 1 - i;
  }
  std::vector<Point> pts{Point(half), Point(low)};
  return hull_plus_orthant(pts);
}

std::pair<ReesPackageData, ReesValuedFamily> symmetric_minors_family(unsigned m) {
  if (m < 3) throw Error("symmetric minors: m must be at least 3");
  std::vector<long> low(m);
  for (unsigned i = 0; i < m; ++i) low[i] = static_cast<long>(m - 1 - i);
  std::vector<Point> gamma_pts{Point::from_ints(low)};
  auto package = make_rees_package(hull_plus_orthant(gamma_pts), "symmetric-minors-" + std::to_string(m));
  return {std::move(package), ReesValuedFamily::symmetric_minors(m)};
}

// ---------------------------------------------------------------- bodies

namespace {

QPolyhedron scaled_values(const ReesValuedFamily& f, unsigned k) { return scale(Rational(1, k), f.value_body(k)); }

bool stabilizes_at(const ReesValuedFamily& f, unsigned k) {
  if (!f.has(2 * k) || !f.has(3 * k)) return false;
  const QPolyhedron base = f.value_body(k);
  return f.value_body(2 * k) == scale(Rational(2), base) && f.value_body(3 * k) == scale(Rational(3), base);
}

}  // namespace

BodyCertificate gamma_body(const ReesValuedFamily& family, unsigned budget) {
  if (budget == 0) throw Error("gamma_body: budget must be at least 1");
  if (family.closed_form()) {
    QPolyhedron body = symmetric_minors_body(family.symmetric_m());
    if (stabilizes_at(family, 2) && scaled_values(family, 2) == body) return {BodyStatus::Exact, 2, body};
    return {BodyStatus::ClosedForm, 0, body};
  }
  std::vector<std::pair<unsigned, QPolyhedron>> seen;
  for (unsigned k = 1; k <= budget; ++k)
    if (family.has(k)) seen.emplace_back(k, scaled_values(family, k));
  if (seen.empty()) throw Error("gamma_body: no values supplied up to the budget");
  for (const auto& [k, here] : seen) {
    bool absorbs = std::all_of(seen.begin(), seen.end(), [&](const auto& e) { return contains(here, e.second); });
    if (absorbs && stabilizes_at(family, k)) return {BodyStatus::Exact, k, here};
  }
  std::vector<QPolyhedron> parts;
  for (const auto& entry : seen) parts.push_back(entry.second);
  return {BodyStatus::Approximate, budget, hull_of_union(parts)};
}

bool validate_superadditive(const ReesValuedFamily& family, unsigned bound) {
  for (unsigned p = 1; p < bound; ++p) {
    for (unsigned q = p; p + q <= bound; ++q) {
      if (!family.has(p) || !family.has(q) || !family.has(p + q)) continue;
      const QPolyhedron target = family.value_body(p + q);
      for (const auto& u : family.values(p)) {
        for (const auto& w : family.values(q)) {
          std::vector<Rational> s(u.dim());
          for (std::size_t i = 0; i < s.size(); ++i) s[i] = u[i] + w[i];
          if (!target.contains_point(Point(std::move(s)))) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- resurgence

ResurgenceResult rees_resurgence(const ReesValuedFamily& family, const ReesPackageData& package, unsigned budget) {
  if (family.d() != package.d) throw Error("Rees resurgence: dimension mismatch between values and Gamma");
  BodyCertificate cert = gamma_body(family, budget);
  auto [value, witness] = checked_sup_noncontainment(cert.body, package.gamma);
  ResurgenceResult res;
  res.value = value;
  res.method = ReesFormulaMethod{{cert.status, cert.index}, 1, false};
  res.direction = cert.exact() ? BoundDirection::Exact : BoundDirection::Lower;
  res.exact = cert.exact();
  res.witness = witness;
  res.equals = {"asymptotic_resurgence(a, closure(b^.))"};
  return res;
}

ResurgenceResult veronese_resurgence(const ReesValuedFamily& family, const ReesPackageData& package, unsigned k,
                                     unsigned budget) {
  if (k == 0) throw Error("Veronese degree must be at least 1");
  ResurgenceResult res = rees_resurgence(family, package, budget);
  res.value = res.value.divided_by(Rational(k));
  std::get<ReesFormulaMethod>(res.method).veronese = k;
  res.equals = {"asymptotic_resurgence(a, closure(b))"};
  return res;
}

ResurgenceResult b_equivalent_resurgence(const ReesValuedFamily& family, const ReesPackageData& package,
                                         std::vector<std::string> assertions, unsigned budget) {
  ResurgenceResult res = rees_resurgence(family, package, budget);
  std::get<ReesFormulaMethod>(res.method).b_equivalent = true;
  res.assertions = std::move(assertions);
  res.equals = {"asymptotic_resurgence(a, b)", "resurgence(a, closure(b))", "asymptotic_resurgence(a, closure(b))"};
  return res;
}

}  // namespace resurgia
