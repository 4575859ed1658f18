#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "resurgia/polyhedron.hpp"

using namespace resurgia;
using testing_helpers::as_constraints;
using testing_helpers::as_vecs;
using testing_helpers::random_points;

namespace {

Point pt(std::initializer_list<long> v) { return Point::from_ints(std::vector<long>(v)); }

Point q3(const char* a, const char* b, const char* c) {
  return Point({parse_rational(a), parse_rational(b), parse_rational(c)});
}

std::set<oracle::Vec> vertex_set(const QPolyhedron& p) {
  std::set<oracle::Vec> s;
  for (const auto& v : p.vertices()) s.insert(v.coords());
  return s;
}

QPolyhedron sp_example() {
  std::vector<LinearConstraint> rows{{{1, 1, 0}, 2}, {{0, 1, 1}, 3}, {{1, 0, 1}, 4}};
  return *from_halfspaces(3, rows);
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-8/4")) == "-2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("extended rationals order the infinities around every finite value") {
  const ExtRational a(Rational(-1000)), b(Rational(3, 7));
  CHECK(ExtRational::neg_inf() < a);
  CHECK(a < b);
  CHECK(b < ExtRational::pos_inf());
  CHECK(ExtRational::parse("+inf") == ExtRational::pos_inf());
  CHECK(ExtRational::parse("-inf").str() == "-inf");
  CHECK(ExtRational::parse("10/9").str() == "10/9");
  CHECK(ExtRational(Rational(4, 3)).divided_by(Rational(2)).str() == "2/3");
}

TEST_CASE("hull plus orthant drops absorbed points") {
  std::vector<Point> pts{pt({2, 0}), pt({0, 2}), pt({1, 1}), pt({3, 3})};
  QPolyhedron p = hull_plus_orthant(pts);
  CHECK(p.vertices() == std::vector<Point>{pt({0, 2}), pt({2, 0})});
  REQUIRE(p.facets().size() == 1);
  CHECK(p.facets()[0].str() == "1 1 >= 2");
}

TEST_CASE("symbolic-polyhedron style H-description gives the expected vertices") {
  QPolyhedron sp = sp_example();
  std::vector<Point> expected{pt({0, 2, 4}), q3("3/2", "1/2", "5/2"), pt({2, 0, 3}), pt({4, 3, 0})};
  std::sort(expected.begin(), expected.end());
  CHECK(sp.vertices() == expected);
  CHECK(sp.facets().size() == 3);
}

TEST_CASE("ray exit through the half-integral vertex") {
  std::vector<Point> np_gens{pt({1, 1, 3}), pt({2, 0, 3}), pt({2, 1, 2}), pt({0, 2, 4}), pt({3, 2, 1}), pt({4, 3, 0})};
  QPolyhedron np = hull_plus_orthant(np_gens);
  const Point u = q3("3/2", "1/2", "5/2");
  ExtRational lambda = first_ray_exit(np, u);
  REQUIRE(lambda.finite());
  CHECK(lambda.str() == "10/9");
  CHECK(u.scaled(lambda.value()) == q3("5/3", "5/9", "25/9"));
}

TEST_CASE("orthant conventions") {
  QPolyhedron o = orthant(3);
  CHECK(o.contains_origin());
  CHECK_FALSE(polar(o).has_value());
  CHECK(sup_noncontainment(sp_example(), o).value == ExtRational::neg_inf());
  CHECK(first_ray_exit(o, pt({1, 2, 3})) == ExtRational(Rational(0)));
  // a body living on a coordinate hyperplane never gets inside (x >= 1)
  std::vector<Point> pts{pt({1, 0})};
  std::vector<LinearConstraint> rows{{{1, 0}, 1}};
  QPolyhedron half = *from_halfspaces(2, rows);
  CHECK(first_ray_exit(half, pt({0, 1})).is_pos_inf());
  CHECK(sup_noncontainment(orthant(2), half).value.is_pos_inf());
}

TEST_CASE("infeasible systems are rejected") {
  std::vector<LinearConstraint> rows{{{-1, 0}, 1}};
  CHECK_THROWS(from_halfspaces(2, rows));
}

TEST_CASE("random hulls agree with the basis-enumeration and LP oracles") {
  std::mt19937 rng(20240501);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    auto pts = random_points(rng, dim, 6, 4);
    QPolyhedron p = hull_plus_orthant(pts);
    const auto verts = as_vecs(p.vertices());
    // the H-description recomputed by brute force gives the same vertices
    CHECK(oracle::vertices_by_bases(dim, as_constraints(p)) == vertex_set(p));
    for (const auto& x : pts) {
      CHECK(p.contains_point(x));
      CHECK(oracle::in_upward_hull(verts, x.coords()));
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto others = verts;
      others.erase(others.begin() + static_cast<long>(i));
      if (!others.empty()) CHECK_FALSE(oracle::in_upward_hull(others, verts[i]));
    }
    // each facet is irredundant
    const auto cons = as_constraints(p);
    for (std::size_t f = 0; f < cons.size(); ++f) {
      auto fewer = cons;
      fewer.erase(fewer.begin() + static_cast<long>(f));
      CHECK(oracle::vertices_by_bases(dim, fewer) != vertex_set(p));
    }
  }
}

TEST_CASE("random H-descriptions agree with basis enumeration") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coef(0, 3), off(1, 6), rows_n(1, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    std::vector<LinearConstraint> rows;
    std::vector<oracle::Constraint> cons;
    const int k = rows_n(rng);
    while (static_cast<int>(rows.size()) < k) {
      std::vector<Rational> h(dim);
      bool zero = true;
      for (auto& c : h) {
        c = coef(rng);
        zero = zero && c == 0;
      }
      if (zero) continue;
      Rational c = off(rng);
      rows.push_back({h, c});
      cons.push_back({h, c});
    }
    auto p = from_halfspaces(dim, rows);
    REQUIRE(p.has_value());
    CHECK(vertex_set(*p) == oracle::vertices_by_bases(dim, cons));
    for (const auto& r : rows)
      for (const auto& v : p->vertices()) CHECK(dot(Point(r.normal), v) >= r.offset);
  }
}

TEST_CASE("polar bodies and the bipolar identity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    QPolyhedron p = hull_plus_orthant(random_points(rng, dim, 5, 4));
    auto pp = polar(p);
    REQUIRE(pp.has_value());
    std::vector<oracle::Constraint> cons;
    for (const auto& v : p.vertices()) cons.push_back({v.coords(), 1});
    CHECK(vertex_set(*pp) == oracle::vertices_by_bases(dim, cons));
    CHECK(bipolar_check(p));
  }
}

TEST_CASE("pairings, noncontainment and ray exits against brute force") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    QPolyhedron p = hull_plus_orthant(random_points(rng, dim, 5, 4));
    QPolyhedron q = hull_plus_orthant(random_points(rng, dim, 5, 4));
    PairingValue pv = min_pairing(p, q);
    CHECK(pv.value == oracle::min_pair(as_vecs(p.vertices()), as_vecs(q.vertices())));
    CHECK(dot(p.vertices()[pv.first_vertex], q.vertices()[pv.second_vertex]) == pv.value);

    NoncontainmentValue nv = sup_noncontainment(p, q);
    if (!nv.value.finite()) continue;
    const Rational lam = nv.value.value();
    const auto qv = as_vecs(q.vertices());
    for (const auto& v : p.vertices()) CHECK(oracle::in_upward_hull(qv, v.scaled(lam).coords()));
    const Rational below = lam * Rational(63, 64);
    bool escapes = false;
    for (const auto& v : p.vertices()) escapes = escapes || !oracle::in_upward_hull(qv, v.scaled(below).coords());
    CHECK(escapes);
    auto qp = polar(q);
    REQUIRE(qp.has_value());
    CHECK(lam * min_pairing(p, *qp).value == 1);

    const Point& x = p.vertices().front();
    ExtRational exit = first_ray_exit(q, x);
    if (exit.finite() && sgn(exit.value()) > 0) {
      CHECK(oracle::in_upward_hull(qv, x.scaled(exit.value()).coords()));
      CHECK_FALSE(oracle::in_upward_hull(qv, x.scaled(exit.value() * Rational(63, 64)).coords()));
    }
  }
}

TEST_CASE("containment and scaling") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    QPolyhedron p = hull_plus_orthant(random_points(rng, dim, 4, 3));
    QPolyhedron q = hull_plus_orthant(random_points(rng, dim, 4, 3));
    bool brute = true;
    for (const auto& v : q.vertices()) brute = brute && oracle::in_upward_hull(as_vecs(p.vertices()), v.coords());
    CHECK(contains(p, q) == brute);
    CHECK(contains(scale(Rational(1, 2), p), p));
    CHECK(scale(Rational(3), scale(Rational(1, 3), p)) == p);
    std::vector<QPolyhedron> both{p, q};
    QPolyhedron u = hull_of_union(both);
    CHECK(contains(u, p));
    CHECK(contains(u, q));
  }
}
