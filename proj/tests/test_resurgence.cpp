#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "resurgia/resurgence.hpp"

using namespace resurgia;
using testing_helpers::as_vecs;

namespace {

const Ring xyz({"x", "y", "z"});
const Ring xy({"x", "y"});

MonomialIdeal triangle() { return MonomialIdeal(xyz, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}); }
MonomialIdeal max_xy() { return MonomialIdeal(xy, {{1, 0}, {0, 1}}); }

MonomialIdeal example_ideal() {
  auto p = [](std::vector<std::size_t> vars, unsigned e) { return power(MonomialIdeal::prime(xyz, vars), e); };
  return intersect(intersect(p({0, 1}, 2), p({1, 2}, 3)), p({0, 2}, 4));
}

GradedFamily b_family() { return GradedFamily::piecewise(max_xy(), 0, 1, 1, {{2u, power(max_xy(), 2)}}); }

Point q3(long a, long b, long c, long d) {
  std::vector<Rational> v{Rational(a, d), Rational(b, d), Rational(c, d)};
  for (auto& x : v) x.canonicalize();
  return Point(std::move(v));
}

// max s/r with some x^a in I^(s) outside I^r, by scanning exponents.
Rational brute_triangle_search(unsigned s_max, unsigned r_max) {
  const auto gens = triangle().generators();
  Rational best = -1;
  for (unsigned s = 1; s <= s_max; ++s) {
    for (unsigned r = 1; r <= r_max; ++r) {
      bool escapes = false;
      for (const auto& a : oracle::box(3, s)) {
        if (!oracle::in_symbolic_power(gens, 3, s, a)) continue;
        if (!oracle::in_power(gens, r, a)) {
          escapes = true;
          break;
        }
      }
      if (escapes) best = std::max(best, Rational(Rational(s) / r));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("body formula on the three-component ideal") {
  ResurgenceResult r =
      asymptotic_resurgence(GradedFamily::symbolic_powers(example_ideal()), GradedFamily::powers(example_ideal()));
  CHECK(r.value.str() == "10/9");
  CHECK(r.exact);
  CHECK(r.direction == BoundDirection::Exact);
  REQUIRE(r.witness.has_value());
  const auto& w = std::get<VertexFacetWitness>(*r.witness);
  CHECK(w.vertex == q3(3, 1, 5, 2));
  CHECK(witness_value(w) == r.value);
  CHECK(w.vertex.scaled(r.value.value()) == q3(15, 5, 25, 9));
  CHECK(first_ray_exit(newton_polyhedron(example_ideal()), w.vertex) == r.value);
  const auto& m = std::get<BodyFormulaMethod>(r.method);
  CHECK(m.b.status == BodyStatus::Exact);
  CHECK(m.b.index == 1);
}

TEST_CASE("triangle benchmark") {
  const MonomialIdeal t = triangle();
  ResurgenceResult r = asymptotic_resurgence(GradedFamily::symbolic_powers(t), GradedFamily::closure_powers(t));
  CHECK(r.value.str() == "4/3");
  CHECK(r.exact);
  const oracle::Q pair = oracle::min_pair(as_vecs(symbolic_polyhedron(t).vertices()),
                                          as_vecs(symbolic_polyhedron(alexander_dual(t)).vertices()));
  CHECK(pair == oracle::Q(3, 4));
  CHECK(dual_pair_resurgence(t, t).str() == "4/3");
  CHECK(duality_check(t));
}

TEST_CASE("dual pairs on random squarefree ideals") {
  std::mt19937 rng(2025);
  std::uniform_int_distribution<int> bit(0, 1), count(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("x" + std::to_string(k));
    Ring r(names);
    std::vector<Exponent> gens;
    for (int g = count(rng); g > 0; --g) {
      Exponent a(n);
      for (auto& e : a) e = static_cast<std::uint32_t>(bit(rng));
      gens.push_back(a);
    }
    MonomialIdeal i(r, gens);
    if (i.is_unit() || i.is_zero()) continue;
    CHECK(duality_check(i));
    ExtRational v = dual_pair_resurgence(i, i);
    ResurgenceResult body = asymptotic_resurgence(GradedFamily::symbolic_powers(i), GradedFamily::closure_powers(i));
    CHECK(body.value == v);
  }
  CHECK_THROWS_AS(dual_pair_resurgence(example_ideal(), example_ideal()), Error);
}

TEST_CASE("searches against a divisibility scan") {
  const MonomialIdeal t = triangle();
  for (unsigned bound = 2; bound <= 5; ++bound) {
    ResurgenceResult r =
        resurgence_search(GradedFamily::symbolic_powers(t), GradedFamily::powers(t), bound, bound);
    CHECK(r.value == ExtRational(brute_triangle_search(bound, bound)));
    CHECK(r.direction == BoundDirection::Lower);
    CHECK_FALSE(r.exact);
  }
  ResurgenceResult r = resurgence_search(GradedFamily::symbolic_powers(t), GradedFamily::powers(t), 8, 8);
  const auto& w = std::get<SearchWitness>(*r.witness);
  CHECK(noncontainment(GradedFamily::symbolic_powers(t), GradedFamily::powers(t), w.s, w.r, false));
  CHECK(r.value == ExtRational(Rational(Rational(w.s) / w.r)));
}

TEST_CASE("closure searches never exceed plain searches") {
  std::vector<MonomialIdeal> ideals{triangle(), example_ideal()};
  for (const auto& i : ideals) {
    GradedFamily a = GradedFamily::symbolic_powers(i), b = GradedFamily::powers(i);
    ResurgenceResult plain = resurgence_search(a, b, 6, 6, false);
    ResurgenceResult closed = resurgence_search(a, b, 6, 6, true);
    CHECK(closed.value <= plain.value);
  }
  // finite searches climb towards the body value 10/9 without reaching it
  GradedFamily a = GradedFamily::symbolic_powers(example_ideal()), b = GradedFamily::powers(example_ideal());
  const ExtRational body = asymptotic_resurgence(a, b).value;
  ResurgenceResult plain = resurgence_search(a, b, 16, 16, false);
  ResurgenceResult closed = resurgence_search(a, b, 16, 16, true);
  CHECK(plain.value.str() == "12/11");
  CHECK(closed.value.str() == "12/11");
  CHECK(plain.value < body);
}

TEST_CASE("the override family") {
  GradedFamily a = GradedFamily::powers(max_xy());
  ResurgenceResult r = resurgence_search(a, b_family(), 3, 16);
  CHECK(r.value.str() == "1/2");
  CHECK(std::get<SearchWitness>(*r.witness).s == 1);
  CHECK(std::get<SearchWitness>(*r.witness).r == 2);
  ResurgenceResult asym = asymptotic_resurgence(a, b_family());
  CHECK(asym.value.is_neg_inf());
  CHECK_FALSE(asym.witness.has_value());
}

TEST_CASE("truncations of the override family") {
  GradedFamily a = GradedFamily::powers(max_xy());
  for (unsigned n = 5; n <= 8; ++n) {
    GradedFamily t = truncate(b_family(), n);
    // index 2 still carries I^2, so I is not inside b_{n,2}
    ResurgenceResult r = resurgence_search(a, t, 3, 16);
    CHECK(r.value.str() == "1/2");
    CHECK(noncontainment(a, t, 1, n + 1, false));
    CHECK_FALSE(noncontainment(a, t, 1, n, false));
    ResurgenceResult asym = asymptotic_resurgence(a, t);
    CHECK(asym.value == ExtRational(Rational(1, n)));
    CHECK(asym.exact);
  }
}

TEST_CASE("truncation profiles converge") {
  const MonomialIdeal t = triangle();
  GradedFamily a = GradedFamily::symbolic_powers(t), b = GradedFamily::powers(t);
  const ResurgenceResult full = resurgence_search(a, b, 8, 8);
  auto profile = truncation_resurgence_profile(a, b, 9, 8, 8);
  for (std::size_t i = 1; i < profile.size(); ++i) CHECK(profile[i - 1].second.value <= profile[i].second.value);
  const unsigned s_star = std::get<SearchWitness>(*full.witness).s;
  for (const auto& [n, r] : profile)
    if (n >= s_star) CHECK(r.value == full.value);

  const std::vector<Rational> w(3, Rational(1));
  Rational previous = waldschmidt(truncate(a, 1), w);
  for (unsigned n = 2; n <= 4; ++n) {
    Rational here = waldschmidt(truncate(a, n), w);
    CHECK(here <= previous);
    previous = here;
  }
  CHECK(previous == Rational(3, 2));
  CHECK(waldschmidt(a, w) == Rational(3, 2));
}

TEST_CASE("Waldschmidt constants agree with running minima") {
  const std::vector<Rational> w(3, Rational(1));
  GradedFamily s = GradedFamily::symbolic_powers(example_ideal());
  CHECK(waldschmidt(s, w) == Rational(9, 2));
  BodyCertificate c = okounkov_body(s);
  REQUIRE(c.status == BodyStatus::Exact);
  for (unsigned budget = c.index; budget <= c.index + 3; ++budget) {
    Rational best = monomial_valuation(s.member(1), w);
    for (unsigned k = 2; k <= budget; ++k) best = std::min(best, Rational(monomial_valuation(s.member(k), w) / k));
    CHECK(best == waldschmidt(s, w));
  }
  CHECK_THROWS_AS(waldschmidt(s, {Rational(1)}), Error);
  CHECK_THROWS_AS(waldschmidt(s, {Rational(0), Rational(0), Rational(0)}), Error);
}

TEST_CASE("noncontainment value equals the reciprocal polar pairing") {
  std::mt19937 rng(515);
  int finite = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    QPolyhedron p = hull_plus_orthant(testing_helpers::random_points(rng, dim, 5, 5));
    QPolyhedron q = hull_plus_orthant(testing_helpers::random_points(rng, dim, 5, 5));
    auto [value, witness] = checked_sup_noncontainment(p, q);
    if (!value.finite()) continue;
    ++finite;
    CHECK(value.value() * min_pairing(p, *polar(q)).value == 1);
    REQUIRE(witness.has_value());
    CHECK(witness_value(std::get<VertexFacetWitness>(*witness)) == value);
  }
  CHECK(finite > 50);
}

TEST_CASE("families from different rings are rejected") {
  CHECK_THROWS_AS(asymptotic_resurgence(GradedFamily::powers(triangle()), GradedFamily::powers(max_xy())), Error);
  CHECK_THROWS_AS(resurgence_search(GradedFamily::powers(triangle()), GradedFamily::powers(triangle()), 0, 3), Error);
}
