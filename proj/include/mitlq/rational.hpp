#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mitlq {

/// Exact rational scalar. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// A time value on the extended rational line: a finite rational or +/-infinity.
///
/// -infinity only appears as the lower bound of a Minkowski difference before
/// it is clipped back into [0, inf).
class Endpoint {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  Endpoint() : Endpoint(Rational(0)) {}
  Endpoint(Rational value);  // NOLINT(google-explicit-constructor)
  Endpoint(long value) : Endpoint(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  static Endpoint pos_inf() { return Endpoint(Kind::PosInf); }
  static Endpoint neg_inf() { return Endpoint(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Precondition: is_finite().
  const Rational& value() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b);
  friend bool operator==(const Endpoint& a, const Endpoint& b) { return (a <=> b) == 0; }

  /// Extended subtraction. inf - inf is undefined and throws std::domain_error.
  friend Endpoint operator-(const Endpoint& a, const Endpoint& b);
  friend Endpoint operator+(const Endpoint& a, const Endpoint& b);

 private:
  explicit Endpoint(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Endpoint& e);

/// Parses `3`, `-3`, `7/2`, or a finite decimal such as `1.25` into an exact rational.
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Parses a rational or one of `inf`, `+inf`.
Endpoint parse_endpoint(std::string_view text);

/// Canonical text form: `3`, `7/2`, `-1/3`.
std::string format_rational(const Rational& r);

}  // namespace mitlq
