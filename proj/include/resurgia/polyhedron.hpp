#pragma once

// Exact kernel for upward-closed rational polyhedra P = conv(V) + R^n_{>=0}.
//
// Every body carries both descriptions: the minimal vertex list and the
// non-coordinate facets <h, x> >= c (h >= 0 primitive integer, c > 0). The
// coordinate facets x_i >= 0 are implicit and never stored.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resurgia/rational.hpp"

namespace resurgia {

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }
  static Point from_ints(std::span<const long> values);
  template <class Int>
  static Point from_integers(const std::vector<Int>& values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (const auto& v : values) c.emplace_back(Rational(Integer(v)));
    return Point(std::move(c));
  }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool nonnegative() const;
  /// Componentwise a <= b.
  bool dominated_by(const Point& other) const;
  Point scaled(const Rational& lambda) const;

  std::string str() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

Rational dot(const Point& a, const Point& b);

/// <normal, x> >= offset with primitive nonnegative integer data.
class Halfspace {
 public:
  /// Scales (normal, offset) to the primitive integer representative.
  /// Requires a nonnegative, nonzero normal.
  static Halfspace primitive(const std::vector<Rational>& normal, const Rational& offset);

  std::size_t dim() const { return normal_.size(); }
  const std::vector<Integer>& normal() const { return normal_; }
  const Integer& offset() const { return offset_; }
  bool non_coordinate() const { return offset_ != 0; }

  /// <normal, x>
  Rational evaluate(const Point& x) const;
  bool satisfied_by(const Point& x) const { return evaluate(x) >= Rational(offset_); }

  std::string str() const;

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.offset_ == b.offset_ && a.normal_ == b.normal_;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b);

 private:
  Halfspace(std::vector<Integer> n, Integer c) : normal_(std::move(n)), offset_(std::move(c)) {}
  std::vector<Integer> normal_;
  Integer offset_;
};

/// Input row for from_halfspaces: <normal, x> >= offset, normal >= 0.
struct LinearConstraint {
  std::vector<Rational> normal;
  Rational offset;
};

class QPolyhedron {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }

  bool contains_origin() const { return facets_.empty(); }
  bool contains_point(const Point& x) const;
  std::string canonical_tag() const;

  friend bool operator==(const QPolyhedron& a, const QPolyhedron& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

  /// Assembles a polyhedron from descriptions already known to be minimal and
  /// consistent. Only sorts; used by scale() and deserialization after checks.
  static QPolyhedron from_trusted(std::size_t dim, std::vector<Point> vertices, std::vector<Halfspace> facets);

 private:
  QPolyhedron() = default;
  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
};

/// Hard ceiling on intermediate rays in the dual-description conversion.
inline constexpr std::size_t kDefaultRayLimit = 200000;

/// conv(points) + R^n_{>=0}. Absorbed points are dropped.
QPolyhedron hull_plus_orthant(std::span<const Point> points);

/// {x >= 0 : all constraints}; nullopt when the system is infeasible.
std::optional<QPolyhedron> from_halfspaces(std::size_t dim, std::span<const LinearConstraint> constraints);

/// The full orthant R^dim_{>=0}.
QPolyhedron orthant(std::size_t dim);

/// {a : <a, b> >= 1 for all b in P}; nullopt when P contains the origin.
std::optional<QPolyhedron> polar(const QPolyhedron& p);

/// polar(polar(P)) == P.
bool bipolar_check(const QPolyhedron& p);

QPolyhedron scale(const Rational& lambda, const QPolyhedron& p);

/// True iff q is a subset of p.
bool contains(const QPolyhedron& p, const QPolyhedron& q);

/// Upward-closed hull of the union.
QPolyhedron hull_of_union(std::span<const QPolyhedron> bodies);

struct NoncontainmentValue {
  ExtRational value;
  /// Indices into vertices of the first body and facets of the second.
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> facet;
};

/// sup{lambda > 0 : lambda * p is not a subset of q}.
/// -inf when q has no non-coordinate facet, +inf when some pairing <h,u> is 0.
NoncontainmentValue sup_noncontainment(const QPolyhedron& p, const QPolyhedron& q);

struct PairingValue {
  Rational value;
  std::size_t first_vertex = 0;
  std::size_t second_vertex = 0;
};

/// min <u, v> over u in p, v in q; attained at a vertex pair.
PairingValue min_pairing(const QPolyhedron& p, const QPolyhedron& q);

/// Smallest lambda > 0 with lambda * x in p (the infimum, 0 for the orthant).
/// +inf when the ray never enters p.
ExtRational first_ray_exit(const QPolyhedron& p, const Point& x);

}  // namespace resurgia
