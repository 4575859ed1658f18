#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "resurgia/polyhedron.hpp"

namespace resurgia {

/// Ordered list of distinct variable names of k[x_1, ..., x_n].
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);
  std::size_t n() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a variable name, or n() when absent.
  std::size_t index_of(const std::string& name) const;
  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

using Exponent = std::vector<std::uint32_t>;

/// Generator-count ceiling. Defaults to 1e5, overridable by RESURGIA_GEN_CEILING.
std::size_t generator_ceiling();
void set_generator_ceiling(std::size_t ceiling);

/// Monomial ideal by its minimal generators, kept in lexicographic order.
/// The zero ideal has no generators; the unit ideal is generated by 0.
class MonomialIdeal {
 public:
  /// Minimalizes the given generators.
  MonomialIdeal(Ring ring, std::vector<Exponent> gens);

  static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(Ring ring);
  /// The prime generated by the listed variable indices.
  static MonomialIdeal prime(Ring ring, const std::vector<std::size_t>& variables);

  const Ring& ring() const { return ring_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  std::size_t n() const { return ring_.n(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;

  /// Some generator divides a.
  bool contains(const Exponent& a) const;
  /// Every generator of other lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  /// x^2*y*z^3 style, comma separated; "0" for the zero ideal.
  std::string str() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Exponent> gens_;
};

/// Removes generators divisible by another; sorts lexicographically.
MonomialIdeal minimalize(const Ring& ring, std::vector<Exponent> gens);

MonomialIdeal product(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal power(const MonomialIdeal& i, unsigned s);
MonomialIdeal sum(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j);

/// Renders a single monomial; "1" for the zero exponent.
std::string monomial_string(const Ring& ring, const Exponent& a);

/// v(I) = min over generators of <w, gen>.
Rational monomial_valuation(const MonomialIdeal& ideal, const std::vector<Rational>& weights);

// ---------------------------------------------------------------- polyhedra

/// conv of exponents of members, upward closed. Rejects the zero ideal.
QPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// x^a lies in the integral closure of I, i.e. a is in NP(I).
bool closure_membership(const MonomialIdeal& ideal, const Exponent& a);

// ---------------------------------------------------------------- symbolic data

using VariableSet = std::vector<std::size_t>;

/// Minimal primes of a squarefree ideal as sorted variable index sets, i.e.
/// the minimal transversals of the generator supports. Rejects
/// non-squarefree, zero and unit ideals.
std::vector<VariableSet> minimal_primes(const MonomialIdeal& ideal);

/// Minimal primes of the radical; works for any nonzero proper monomial ideal.
std::vector<VariableSet> minimal_primes_of_radical(const MonomialIdeal& ideal);

/// Generated by the products of the variables of each minimal prime.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

/// I localized at a prime (x_i : i in p) and contracted back: variables
/// outside p are set to 1.
MonomialIdeal localize(const MonomialIdeal& ideal, const VariableSet& prime);

/// I equals the intersection of its localizations at minimal primes. Always
/// true for squarefree ideals; symbolic machinery requires it.
bool has_no_embedded_components(const MonomialIdeal& ideal);

/// I^(m), the intersection over minimal primes p of (I_p)^m.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, unsigned m);

/// a in I^(m) without building generators. For squarefree I this is
/// sum_{i in p} a_i >= m for every minimal prime p.
bool symbolic_power_contains(const MonomialIdeal& ideal, unsigned m, const Exponent& a);

/// Intersection of NP(I_p) over minimal primes; for squarefree I one
/// constraint sum_{i in p} a_i >= 1 per minimal prime.
QPolyhedron symbolic_polyhedron(const MonomialIdeal& ideal);

}  // namespace resurgia
