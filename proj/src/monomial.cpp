#include "resurgia/monomial.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>

namespace resurgia {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::size_t Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

// ---------------------------------------------------------------- ceiling

namespace {

std::size_t initial_ceiling() {
  if (const char* env = std::getenv("RESURGIA_GEN_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

std::atomic<std::size_t>& ceiling_storage() {
  static std::atomic<std::size_t> c{initial_ceiling()};
  return c;
}

// Candidate lists may exceed the ceiling before minimalization by this factor.
constexpr std::size_t kCandidateFactor = 50;

void check_candidates(std::size_t count, const char* op) {
  if (count > generator_ceiling() * kCandidateFactor)
    throw BudgetExceeded(std::string(op) + ": " + std::to_string(count) + " candidate generators exceed the ceiling");
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::uint64_t degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), std::uint64_t{0}); }

}  // namespace

std::size_t generator_ceiling() { return ceiling_storage().load(); }
void set_generator_ceiling(std::size_t ceiling) { ceiling_storage().store(ceiling == 0 ? 1 : ceiling); }

// ---------------------------------------------------------------- MonomialIdeal

MonomialIdeal minimalize(const Ring& ring, std::vector<Exponent> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponent> gens) : ring_(std::move(ring)) {
  for (const auto& g : gens)
    if (g.size() != ring_.n()) throw Error("exponent vector length does not match the ring");
  // A divisor has total degree <= its multiple, so one pass in degree order suffices.
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    auto da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Exponent& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  if (kept.size() > generator_ceiling())
    throw BudgetExceeded("ideal with " + std::to_string(kept.size()) + " generators exceeds the ceiling of " +
                         std::to_string(generator_ceiling()));
  std::sort(kept.begin(), kept.end());
  gens_ = std::move(kept);
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  Exponent zero(ring.n(), 0);
  return MonomialIdeal(std::move(ring), {zero});
}

MonomialIdeal MonomialIdeal::prime(Ring ring, const std::vector<std::size_t>& variables) {
  std::vector<Exponent> gens;
  for (auto v : variables) {
    if (v >= ring.n()) throw Error("prime: variable index out of range");
    Exponent e(ring.n(), 0);
    e[v] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && degree(gens_[0]) == 0; }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Exponent& g) { return std::all_of(g.begin(), g.end(), [](auto e) { return e <= 1; }); });
}

bool MonomialIdeal::contains(const Exponent& a) const {
  if (a.size() != n()) throw Error("membership: exponent length does not match the ring");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, a); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (!(ring_ == other.ring_)) throw Error("containment: ring mismatch");
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Exponent& g) { return contains(g); });
}

std::string monomial_string(const Ring& ring, const Exponent& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

std::string MonomialIdeal::str() const {
  if (gens_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += monomial_string(ring_, gens_[i]);
  }
  return s;
}

// ---------------------------------------------------------------- arithmetic

namespace {

void require_same_ring(const MonomialIdeal& i, const MonomialIdeal& j, const char* op) {
  if (!(i.ring() == j.ring())) throw Error(std::string(op) + ": ring mismatch");
}

}  // namespace

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j, "product");
  check_candidates(i.generators().size() * j.generators().size(), "product");
  std::vector<Exponent> out;
  out.reserve(i.generators().size() * j.generators().size());
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) {
      Exponent c(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
      out.push_back(std::move(c));
    }
  }
  return MonomialIdeal(i.ring(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& i, unsigned s) {
  if (s == 0) return MonomialIdeal::unit(i.ring());
  MonomialIdeal result = MonomialIdeal::unit(i.ring());
  MonomialIdeal base = i;
  bool first = true;
  while (s > 0) {
    if (s & 1u) {
      result = first ? base : product(result, base);
      first = false;
    }
    s >>= 1u;
    if (s > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j, "sum");
  std::vector<Exponent> all = i.generators();
  all.insert(all.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal(i.ring(), std::move(all));
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_ring(i, j, "intersect");
  check_candidates(i.generators().size() * j.generators().size(), "intersect");
  std::vector<Exponent> out;
  out.reserve(i.generators().size() * j.generators().size());
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) {
      Exponent c(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) c[k] = std::max(a[k], b[k]);
      out.push_back(std::move(c));
    }
  }
  return MonomialIdeal(i.ring(), std::move(out));
}

Rational monomial_valuation(const MonomialIdeal& ideal, const std::vector<Rational>& weights) {
  if (weights.size() != ideal.n()) throw Error("valuation: weight length does not match the ring");
  if (ideal.is_zero()) throw Error("valuation of the zero ideal");
  Rational best;
  bool first = true;
  for (const auto& g : ideal.generators()) {
    Rational v = 0;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k] != 0) v += weights[k] * g[k];
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

// ---------------------------------------------------------------- polyhedra

QPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw Error("Newton polyhedron of the zero ideal");
  std::vector<Point> pts;
  pts.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) pts.push_back(Point::from_integers(g));
  return hull_plus_orthant(pts);
}

bool closure_membership(const MonomialIdeal& ideal, const Exponent& a) {
  if (a.size() != ideal.n()) throw Error("closure membership: exponent length does not match the ring");
  return newton_polyhedron(ideal).contains_point(Point::from_integers(a));
}

// ---------------------------------------------------------------- symbolic data

namespace {

using Mask = std::uint64_t;

Mask support(const Exponent& g) {
  Mask m = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != 0) m |= Mask{1} << i;
  return m;
}

constexpr std::size_t kMaxCovers = 10000;

// Minimal transversals of the hypergraph with the given edges (Berge).
std::vector<Mask> minimal_transversals(const std::vector<Mask>& edges, std::size_t n) {
  std::vector<Mask> current{0};
  for (Mask e : edges) {
    std::vector<Mask> next;
    for (Mask t : current) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (std::size_t v = 0; v < n; ++v)
        if (e & (Mask{1} << v)) next.push_back(t | (Mask{1} << v));
    }
    std::sort(next.begin(), next.end(), [](Mask a, Mask b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<Mask> minimal;
    for (Mask t : next) {
      bool superset = std::any_of(minimal.begin(), minimal.end(), [&](Mask m) { return (m & t) == m; });
      if (!superset) minimal.push_back(t);
    }
    if (minimal.size() > kMaxCovers)
      throw BudgetExceeded("more than " + std::to_string(kMaxCovers) + " minimal vertex covers");
    current = std::move(minimal);
  }
  return current;
}

std::vector<VariableSet> to_sets(std::vector<Mask> masks, std::size_t n) {
  std::vector<VariableSet> out;
  for (Mask m : masks) {
    VariableSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (m & (Mask{1} << v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw Error(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw Error(std::string(op) + ": unit ideal");
  if (ideal.n() > 64) throw BudgetExceeded(std::string(op) + ": more than 64 variables");
}

void require_symbolic_input(const MonomialIdeal& ideal, const char* op) {
  require_proper_nonzero(ideal, op);
  if (!ideal.is_squarefree() && !has_no_embedded_components(ideal))
    throw Error(std::string(op) + ": ideal has embedded components; symbolic data is undefined here");
}

// e when I_p = p^e, 0 otherwise.
unsigned prime_power_exponent(const MonomialIdeal& local, const VariableSet& p) {
  std::uint64_t e = degree(local.generators().front());
  for (const auto& g : local.generators())
    if (degree(g) != e) return 0;
  if (e == 0) return 0;
  std::uint64_t expected = 1;  // C(|p| + e - 1, e)
  for (std::uint64_t k = 1; k <= e; ++k) {
    expected = expected * (p.size() + k - 1) / k;
    if (expected > local.generators().size()) return 0;
  }
  return expected == local.generators().size() ? static_cast<unsigned>(e) : 0;
}

}  // namespace

std::vector<VariableSet> minimal_primes_of_radical(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "minimal primes");
  std::vector<Mask> edges;
  for (const auto& g : ideal.generators()) edges.push_back(support(g));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return to_sets(minimal_transversals(edges, ideal.n()), ideal.n());
}

std::vector<VariableSet> minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw Error("minimal primes: ideal is not squarefree");
  return minimal_primes_of_radical(ideal);
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw Error("Alexander dual: ideal is not squarefree");
  std::vector<Exponent> gens;
  for (const auto& p : minimal_primes(ideal)) {
    Exponent e(ideal.n(), 0);
    for (auto v : p) e[v] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal localize(const MonomialIdeal& ideal, const VariableSet& prime) {
  std::vector<bool> inside(ideal.n(), false);
  for (auto v : prime) {
    if (v >= ideal.n()) throw Error("localize: variable index out of range");
    inside[v] = true;
  }
  std::vector<Exponent> gens = ideal.generators();
  for (auto& g : gens)
    for (std::size_t k = 0; k < g.size(); ++k)
      if (!inside[k]) g[k] = 0;
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool has_no_embedded_components(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "embedded component check");
  auto primes = minimal_primes_of_radical(ideal);
  MonomialIdeal meet = MonomialIdeal::unit(ideal.ring());
  for (const auto& p : primes) meet = intersect(meet, localize(ideal, p));
  return meet == ideal;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) throw Error("symbolic power: exponent must be at least 1");
  require_symbolic_input(ideal, "symbolic power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (const auto& p : minimal_primes_of_radical(ideal)) result = intersect(result, power(localize(ideal, p), m));
  return result;
}

bool symbolic_power_contains(const MonomialIdeal& ideal, unsigned m, const Exponent& a) {
  if (a.size() != ideal.n()) throw Error("symbolic membership: exponent length does not match the ring");
  if (m == 0) throw Error("symbolic power: exponent must be at least 1");
  require_symbolic_input(ideal, "symbolic membership");
  for (const auto& p : minimal_primes_of_radical(ideal)) {
    MonomialIdeal local = localize(ideal, p);
    if (unsigned e = prime_power_exponent(local, p); e > 0) {
      std::uint64_t total = 0;
      for (auto v : p) total += a[v];
      if (total < std::uint64_t{e} * m) return false;
    } else if (!power(local, m).contains(a)) {
      return false;
    }
  }
  return true;
}

QPolyhedron symbolic_polyhedron(const MonomialIdeal& ideal) {
  require_symbolic_input(ideal, "symbolic polyhedron");
  std::vector<LinearConstraint> rows;
  for (const auto& p : minimal_primes_of_radical(ideal)) {
    const QPolyhedron local = newton_polyhedron(localize(ideal, p));
    for (const auto& f : local.facets()) {
      std::vector<Rational> normal(f.normal().begin(), f.normal().end());
      rows.push_back({std::move(normal), Rational(f.offset())});
    }
  }
  auto body = from_halfspaces(ideal.n(), rows);
  if (!body) throw std::logic_error("symbolic polyhedron came out empty");
  return *body;
}

}  // namespace resurgia
