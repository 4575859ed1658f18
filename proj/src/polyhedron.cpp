#include "resurgia/polyhedron.hpp"

#include <algorithm>
#include <sstream>

#include "double_description.hpp"

namespace resurgia {

using detail::IntVector;

// ---------------------------------------------------------------- Point

Point Point::from_ints(std::span<const long> values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (long v : values) c.emplace_back(v);
  return Point(std::move(c));
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Point::nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

bool Point::dominated_by(const Point& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Point Point::scaled(const Rational& lambda) const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * lambda;
  return Point(std::move(c));
}

std::string Point::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += to_string(coords_[i]);
  }
  return s + ")";
}

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

Rational dot(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw Error("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------- Halfspace

Halfspace Halfspace::primitive(const std::vector<Rational>& normal, const Rational& offset) {
  bool nonzero = false;
  for (const auto& h : normal) {
    if (sgn(h) < 0) throw Error("halfspace normal must be nonnegative");
    nonzero = nonzero || sgn(h) != 0;
  }
  if (!nonzero) throw Error("halfspace normal must be nonzero");
  std::vector<Rational> all = normal;
  all.push_back(offset);
  Integer l = common_denominator(all);
  std::vector<Integer> ints(normal.size());
  Integer g = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    Rational t = normal[i] * l;
    ints[i] = t.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  Rational tc = offset * l;
  Integer c = tc.get_num();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (auto& x : ints) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return Halfspace(std::move(ints), std::move(c));
}

Rational Halfspace::evaluate(const Point& x) const {
  if (x.dim() != normal_.size()) throw Error("halfspace: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < normal_.size(); ++i)
    if (normal_[i] != 0) s += Rational(normal_[i]) * x[i];
  return s;
}

std::string Halfspace::str() const {
  std::string s;
  for (std::size_t i = 0; i < normal_.size(); ++i) {
    if (i) s += " ";
    s += normal_[i].get_str();
  }
  return s + " >= " + offset_.get_str();
}

bool operator<(const Halfspace& a, const Halfspace& b) {
  if (a.normal_ != b.normal_) return a.normal_ < b.normal_;
  return a.offset_ < b.offset_;
}

// ---------------------------------------------------------------- conversions

namespace {

void check_points(std::span<const Point> points) {
  if (points.empty()) throw Error("hull_plus_orthant: empty point list");
  const std::size_t n = points.front().dim();
  if (n == 0) throw Error("hull_plus_orthant: zero dimension");
  for (const auto& p : points) {
    if (p.dim() != n) throw Error("hull_plus_orthant: dimension mismatch");
    if (!p.nonnegative()) throw Error("hull_plus_orthant: negative coordinate in " + p.str());
  }
}

// Drops duplicates and points dominating another point.
std::vector<Point> undominated(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Point> kept;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < sorted.size() && !absorbed; ++j)
      absorbed = j != i && sorted[j].dominated_by(sorted[i]);
    if (!absorbed) kept.push_back(sorted[i]);
  }
  return kept;
}

// Integer row (L*coeffs, -L*rhs) for <coeffs, x> - rhs * t >= 0.
IntVector homogenized_row(const std::vector<Rational>& coeffs, const Rational& rhs) {
  std::vector<Rational> all = coeffs;
  all.push_back(rhs);
  Integer l = common_denominator(all);
  IntVector row(coeffs.size() + 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) row[i] = Rational(coeffs[i] * l).get_num();
  row.back() = Rational(-rhs * l).get_num();
  return row;
}

// Vertices of {x >= 0 : rows}, rows homogenized. Empty vector when infeasible.
std::vector<Point> vertices_from_rows(std::size_t dim, const std::vector<IntVector>& rows) {
  auto rays = detail::extreme_rays_over_orthant(dim + 1, rows, kDefaultRayLimit);
  std::vector<Point> out;
  for (const auto& r : rays) {
    const Integer& t = r.back();
    if (t == 0) continue;
    std::vector<Rational> c(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      c[i] = Rational(r[i], t);
      c[i].canonicalize();
    }
    out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Non-coordinate facets of conv(vertices) + orthant, via the vertices of
// the blocker {a >= 0 : <a, v> >= 1 for all v}.
std::vector<Halfspace> facets_from_points(std::size_t dim, std::span<const Point> points) {
  for (const auto& p : points)
    if (p.is_zero()) return {};
  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(homogenized_row(p.coords(), Rational(1)));
  std::vector<Halfspace> facets;
  for (const auto& a : vertices_from_rows(dim, rows)) facets.push_back(Halfspace::primitive(a.coords(), Rational(1)));
  std::sort(facets.begin(), facets.end());
  return facets;
}

std::vector<Point> vertices_from_facets(std::size_t dim, const std::vector<Halfspace>& facets) {
  if (facets.empty()) return {Point::zero(dim)};
  std::vector<IntVector> rows;
  rows.reserve(facets.size());
  for (const auto& f : facets) {
    IntVector row(f.normal());
    row.push_back(-f.offset());
    rows.push_back(std::move(row));
  }
  return vertices_from_rows(dim, rows);
}

}  // namespace

QPolyhedron QPolyhedron::from_trusted(std::size_t dim, std::vector<Point> vertices, std::vector<Halfspace> facets) {
  QPolyhedron p;
  p.dim_ = dim;
  std::sort(vertices.begin(), vertices.end());
  std::sort(facets.begin(), facets.end());
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  return p;
}

QPolyhedron hull_plus_orthant(std::span<const Point> points) {
  check_points(points);
  const std::size_t n = points.front().dim();
  auto candidates = undominated(points);
  auto facets = facets_from_points(n, candidates);
  auto vertices = vertices_from_facets(n, facets);
  return QPolyhedron::from_trusted(n, std::move(vertices), std::move(facets));
}

std::optional<QPolyhedron> from_halfspaces(std::size_t dim, std::span<const LinearConstraint> constraints) {
  if (dim == 0) throw Error("from_halfspaces: zero dimension");
  std::vector<IntVector> rows;
  for (const auto& c : constraints) {
    if (c.normal.size() != dim) throw Error("from_halfspaces: dimension mismatch");
    for (const auto& h : c.normal)
      if (sgn(h) < 0) throw Error("from_halfspaces: normals must be nonnegative");
    rows.push_back(homogenized_row(c.normal, c.offset));
  }
  auto vertices = vertices_from_rows(dim, rows);
  if (vertices.empty()) return std::nullopt;
  auto facets = facets_from_points(dim, vertices);
  return QPolyhedron::from_trusted(dim, std::move(vertices), std::move(facets));
}

QPolyhedron orthant(std::size_t dim) {
  if (dim == 0) throw Error("orthant: zero dimension");
  return QPolyhedron::from_trusted(dim, {Point::zero(dim)}, {});
}

bool QPolyhedron::contains_point(const Point& x) const {
  if (x.dim() != dim_) throw Error("contains_point: dimension mismatch");
  if (!x.nonnegative()) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Halfspace& f) { return f.satisfied_by(x); });
}

std::string QPolyhedron::canonical_tag() const {
  std::ostringstream os;
  os << "dim=" << dim_ << ";V=";
  for (const auto& v : vertices_) os << v.str();
  os << ";F=";
  for (const auto& f : facets_) os << "[" << f.str() << "]";
  return os.str();
}

std::optional<QPolyhedron> polar(const QPolyhedron& p) {
  if (p.contains_origin()) return std::nullopt;
  std::vector<LinearConstraint> rows;
  rows.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) rows.push_back({v.coords(), Rational(1)});
  return from_halfspaces(p.dim(), rows);
}

bool bipolar_check(const QPolyhedron& p) {
  auto once = polar(p);
  if (!once) return false;
  auto twice = polar(*once);
  return twice && *twice == p;
}

QPolyhedron scale(const Rational& lambda, const QPolyhedron& p) {
  if (sgn(lambda) <= 0) throw Error("scale: lambda must be positive");
  std::vector<Point> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back(v.scaled(lambda));
  std::vector<Halfspace> facets;
  facets.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    std::vector<Rational> normal(f.normal().begin(), f.normal().end());
    facets.push_back(Halfspace::primitive(normal, Rational(f.offset()) * lambda));
  }
  return QPolyhedron::from_trusted(p.dim(), std::move(vertices), std::move(facets));
}

bool contains(const QPolyhedron& p, const QPolyhedron& q) {
  if (p.dim() != q.dim()) throw Error("contains: dimension mismatch");
  for (const auto& v : q.vertices())
    for (const auto& f : p.facets())
      if (!f.satisfied_by(v)) return false;
  return true;
}

QPolyhedron hull_of_union(std::span<const QPolyhedron> bodies) {
  std::vector<Point> all;
  for (const auto& b : bodies) all.insert(all.end(), b.vertices().begin(), b.vertices().end());
  return hull_plus_orthant(all);
}

NoncontainmentValue sup_noncontainment(const QPolyhedron& p, const QPolyhedron& q) {
  if (p.dim() != q.dim()) throw Error("sup_noncontainment: dimension mismatch");
  NoncontainmentValue best;
  for (std::size_t u = 0; u < p.vertices().size(); ++u) {
    for (std::size_t f = 0; f < q.facets().size(); ++f) {
      const Halfspace& h = q.facets()[f];
      Rational pairing = h.evaluate(p.vertices()[u]);
      ExtRational candidate =
          sgn(pairing) == 0 ? ExtRational::pos_inf() : ExtRational(Rational(Rational(h.offset()) / pairing));
      if (!best.vertex || candidate > best.value) {
        best.value = candidate;
        best.vertex = u;
        best.facet = f;
      }
    }
  }
  return best;
}

PairingValue min_pairing(const QPolyhedron& p, const QPolyhedron& q) {
  if (p.dim() != q.dim()) throw Error("min_pairing: dimension mismatch");
  PairingValue best;
  bool first = true;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    for (std::size_t j = 0; j < q.vertices().size(); ++j) {
      Rational v = dot(p.vertices()[i], q.vertices()[j]);
      if (first || v < best.value) {
        best = {v, i, j};
        first = false;
      }
    }
  }
  return best;
}

ExtRational first_ray_exit(const QPolyhedron& p, const Point& x) {
  if (x.dim() != p.dim()) throw Error("first_ray_exit: dimension mismatch");
  if (!x.nonnegative()) throw Error("first_ray_exit: direction must be nonnegative");
  if (x.is_zero()) throw Error("first_ray_exit: zero direction");
  Rational best = 0;
  for (const auto& f : p.facets()) {
    Rational pairing = f.evaluate(x);
    if (sgn(pairing) == 0) return ExtRational::pos_inf();
    Rational need = Rational(f.offset()) / pairing;
    if (need > best) best = need;
  }
  return ExtRational(best);
}

}  // namespace resurgia
