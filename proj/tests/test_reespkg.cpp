#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "resurgia/rees.hpp"

using namespace resurgia;
using testing_helpers::as_vecs;

namespace {

ReesValuedFamily table_from_closed_form(unsigned m, unsigned top) {
  const ReesValuedFamily closed = ReesValuedFamily::symmetric_minors(m);
  std::map<unsigned, std::vector<Point>> values;
  for (unsigned k = 1; k <= top; ++k) values[k] = closed.values(k);
  return ReesValuedFamily::explicit_table(m, values);
}

Point pt(std::initializer_list<long> v) { return Point::from_ints(std::vector<long>(v)); }

}  // namespace

TEST_CASE("symmetric minors values") {
  const ReesValuedFamily f = ReesValuedFamily::symmetric_minors(3);
  CHECK(f.values(1) == std::vector<Point>{pt({2, 1, 0})});
  CHECK(f.values(2) == std::vector<Point>{pt({3, 2, 1}), pt({4, 2, 0})});
  CHECK(f.values(3) == std::vector<Point>{pt({5, 3, 1}), pt({6, 3, 0})});
  CHECK(validate_superadditive(f, 12));
  CHECK_THROWS_AS(ReesValuedFamily::symmetric_minors(2), Error);
}

TEST_CASE("closed-form resurgence 2(m-1)/m") {
  for (unsigned m = 3; m <= 8; ++m) {
    auto [pkg, fam] = symmetric_minors_family(m);
    ResurgenceResult r = rees_resurgence(fam, pkg);
    Rational expected(2 * (m - 1), m);
    expected.canonicalize();
    CHECK(r.value == ExtRational(expected));
    CHECK(r.exact);
    const QPolyhedron body = gamma_body(fam).body;
    CHECK(r.value.value() * min_pairing(body, *polar(pkg.gamma)).value == 1);
    // lambda * Gamma_R lands inside Gamma exactly at the value, by LP
    const auto gamma_v = as_vecs(pkg.gamma.vertices());
    for (const auto& v : body.vertices()) CHECK(oracle::in_upward_hull(gamma_v, v.scaled(expected).coords()));
    bool escapes = false;
    for (const auto& v : body.vertices())
      escapes = escapes || !oracle::in_upward_hull(gamma_v, v.scaled(expected * Rational(31, 32)).coords());
    CHECK(escapes);
  }
}

TEST_CASE("ray exit for m = 3") {
  auto [pkg, fam] = symmetric_minors_family(3);
  ResurgenceResult r = rees_resurgence(fam, pkg);
  const auto& w = std::get<VertexFacetWitness>(*r.witness);
  CHECK(witness_value(w) == r.value);
  CHECK(w.vertex.scaled(r.value.value()) == Point({Rational(2), Rational(4, 3), Rational(2, 3)}));
}

TEST_CASE("gamma body from a finite table matches the closed form") {
  for (unsigned m = 3; m <= 8; ++m) {
    const ReesValuedFamily table = table_from_closed_form(m, 24);
    for (unsigned budget : {6u, 8u, 12u}) {
      BodyCertificate c = gamma_body(table, budget);
      CHECK(c.status == BodyStatus::Exact);
      CHECK(c.index == 2);
      CHECK(c.body == symmetric_minors_body(m));
    }
    BodyCertificate closed = gamma_body(ReesValuedFamily::symmetric_minors(m));
    CHECK(closed.body == symmetric_minors_body(m));
  }
}

TEST_CASE("even and odd indices stay inside the closed-form body") {
  for (unsigned m = 3; m <= 8; ++m) {
    const ReesValuedFamily f = ReesValuedFamily::symmetric_minors(m);
    const QPolyhedron body = symmetric_minors_body(m);
    for (unsigned k = 1; k <= 10; ++k) {
      CHECK(contains(body, scale(Rational(1, 2 * k), f.value_body(2 * k))));
      CHECK(contains(body, scale(Rational(1, 2 * k + 1), f.value_body(2 * k + 1))));
    }
  }
}

TEST_CASE("Veronese and b-equivalent variants") {
  auto [pkg, fam] = symmetric_minors_family(4);
  const ResurgenceResult base = rees_resurgence(fam, pkg);
  for (unsigned k = 1; k <= 4; ++k) {
    ResurgenceResult v = veronese_resurgence(fam, pkg, k);
    CHECK(v.value.value() * k == base.value.value());
    CHECK(std::get<ReesFormulaMethod>(v.method).veronese == k);
  }
  CHECK_THROWS_AS(veronese_resurgence(fam, pkg, 0), Error);
  std::vector<std::string> asserted{"b-equivalent", "filtration", "Nagata ring"};
  ResurgenceResult b = b_equivalent_resurgence(fam, pkg, asserted);
  CHECK(b.value.str() == "3/2");
  CHECK(b.assertions == asserted);
  CHECK(b.equals.size() == 3);
  CHECK(std::get<ReesFormulaMethod>(b.method).b_equivalent);
}

TEST_CASE("explicit tables") {
  std::map<unsigned, std::vector<Point>> multiples;
  for (unsigned k = 1; k <= 6; ++k) multiples[k] = {pt({2L * k, 1L * k})};
  ReesValuedFamily lin = ReesValuedFamily::explicit_table(2, multiples);
  BodyCertificate c = gamma_body(lin);
  CHECK(c.status == BodyStatus::Exact);
  CHECK(c.index == 1);
  std::vector<Point> p{pt({2, 1})};
  CHECK(c.body == hull_plus_orthant(p));

  std::map<unsigned, std::vector<Point>> short_table{{1, {pt({3})}}, {2, {pt({5})}}};
  BodyCertificate approx = gamma_body(ReesValuedFamily::explicit_table(1, short_table), 4);
  CHECK(approx.status == BodyStatus::Approximate);
  CHECK(approx.body.vertices() == std::vector<Point>{Point({Rational(5, 2)})});

  std::vector<Point> g{pt({1})};
  ReesPackageData pkg = make_rees_package(hull_plus_orthant(g), "line");
  ResurgenceResult r = rees_resurgence(ReesValuedFamily::explicit_table(1, short_table), pkg, 4);
  CHECK(r.direction == BoundDirection::Lower);
  CHECK_FALSE(r.exact);
  CHECK(r.value.str() == "2/5");

  std::map<unsigned, std::vector<Point>> broken{{1, {pt({2})}}, {2, {pt({5})}}};
  CHECK_FALSE(validate_superadditive(ReesValuedFamily::explicit_table(1, broken), 2));
}

TEST_CASE("package validation") {
  std::vector<Point> frac{Point({Rational(1, 2), Rational(1)})};
  CHECK_THROWS_AS(make_rees_package(hull_plus_orthant(frac), "bad"), Error);
  CHECK_THROWS_AS(make_rees_package(orthant(2), "origin"), Error);
  auto [pkg, fam] = symmetric_minors_family(3);
  std::map<unsigned, std::vector<Point>> wrong{{1, {pt({1, 1})}}};
  CHECK_THROWS_AS(rees_resurgence(ReesValuedFamily::explicit_table(2, wrong), pkg), Error);
  std::map<unsigned, std::vector<Point>> negative{{1, {pt({-1, 1})}}};
  CHECK_THROWS_AS(ReesValuedFamily::explicit_table(2, negative), Error);
}
