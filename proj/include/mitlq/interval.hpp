#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mitlq/rational.hpp"

namespace mitlq {

/// Interval on the extended line. The lower bound may be -inf; used only as the
/// intermediate result of a Minkowski difference.
struct ExtInterval {
  Endpoint lo;
  bool lo_closed = true;
  Endpoint hi;
  bool hi_closed = true;

  bool empty() const;
  bool contains(const Rational& t) const;
  std::string to_string() const;

  friend bool operator==(const ExtInterval&, const ExtInterval&) = default;
};

/// Non-empty connected subset of [0, inf) with exact endpoints.
///
/// The empty set is not representable; operations that can produce it return
/// std::optional. An infinite upper bound is always open.
class Interval {
 public:
  /// Throws std::invalid_argument if the bounds describe the empty set, or a set
  /// that is not contained in [0, inf).
  Interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed);

  /// Like the constructor, but yields nullopt for the empty set.
  static std::optional<Interval> make(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed);

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), true, std::move(hi), true}; }
  static Interval open(Rational lo, Endpoint hi) { return {std::move(lo), false, std::move(hi), false}; }
  static Interval point(const Rational& t) { return {t, true, t, true}; }
  /// [0, inf)
  static Interval non_negative() { return {Rational(0), true, Endpoint::pos_inf(), false}; }

  const Rational& lo() const { return lo_.value(); }
  const Endpoint& lo_endpoint() const { return lo_; }
  const Endpoint& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool is_bounded() const { return hi_.is_finite(); }
  bool is_singleton() const { return lo_ == hi_; }
  bool contains(const Rational& t) const;

  /// hi - lo; +inf for unbounded intervals.
  Endpoint length() const { return hi_ - lo_; }

  ExtInterval as_ext() const { return {lo_, lo_closed_, hi_, hi_closed_}; }
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Endpoint lo_;
  bool lo_closed_;
  Endpoint hi_;
  bool hi_closed_;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

/// a ∩ b; endpoint flags follow the tighter bound.
std::optional<Interval> intersect(const Interval& a, const Interval& b);
/// Clips an extended interval back into a subset of [0, inf).
std::optional<Interval> intersect(const ExtInterval& a, const Interval& b);

Interval closure(const Interval& a);
/// Interior relative to the real line, so [0,1) has interior (0,1).
std::optional<Interval> interior(const Interval& a);

/// a ∪ b when the union is an interval.
std::optional<Interval> union_if_connected(const Interval& a, const Interval& b);

/// a ∩ Cl(b) = ∅ and Cl(a) ∩ b = ∅.
bool separated(const Interval& a, const Interval& b);

/// {t >= 0 | t > every point of a}. An absent argument stands for the empty set,
/// for which the result is [0, inf).
std::optional<Interval> right_of(const std::optional<Interval>& a);
/// {t >= 0 | t < every point of a}, with the same convention for the empty set.
std::optional<Interval> left_of(const std::optional<Interval>& a);

/// Every point of a is strictly less than every point of b.
bool precedes(const Interval& a, const Interval& b);

/// {β - ι | β ∈ b, ι ∈ i}.
ExtInterval minkowski_diff(const Interval& b, const Interval& i);

/// Parses `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`; `b` may be `inf`.
Interval parse_interval(std::string_view text);

}  // namespace mitlq
