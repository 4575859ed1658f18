#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace resurgia {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Base of every error the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation exceeded a configured size budget (generator ceiling, cover count, ...).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Renders "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& q);

/// Parses "p", "-p", or "p/q". Throws Error on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// A rational extended by the two infinities used as sup/inf conventions.
class ExtRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRational() : kind_(Kind::NegInf) {}
  ExtRational(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT
  ExtRational(long v) : kind_(Kind::Finite), value_(v) {}                 // NOLINT

  static ExtRational pos_inf() { return ExtRational(Kind::PosInf); }
  static ExtRational neg_inf() { return ExtRational(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Throws if not finite.
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// Division by a positive rational; infinities are preserved.
  ExtRational divided_by(const Rational& positive) const;

  /// "p/q", "+inf" or "-inf".
  std::string str() const;
  static ExtRational parse(std::string_view text);

 private:
  explicit ExtRational(Kind k) : kind_(k) {}
  Kind kind_;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& v);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace resurgia
