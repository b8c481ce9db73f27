#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mitlq/error.hpp"
#include "mitlq/formula.hpp"
#include "mitlq/trace.hpp"

namespace mitlq {

/// Brute-force reference semantics for exact traces.
///
/// Every truth set is held as a boolean signal over a finite set of breakpoints:
/// one value per breakpoint and one per open gap (the last gap runs to +inf).
/// Operators evaluate the pointwise semantics at one sample per region. Until and
/// the timed modalities enumerate witness times region by region; none of this
/// goes through the interval-queue operators.
///
/// Derived operators are evaluated by their own semantics, not by desugaring.

class OracleError : public Error {
 public:
  using Error::Error;
};

struct OracleOptions {
  /// Extra breakpoints added to every timed operator's partition. They must
  /// never change the result; tests use them to probe partition sufficiency.
  std::vector<Rational> extra_points;
};

/// Piecewise-constant boolean signal on [0, inf).
class Signal {
 public:
  /// `points` strictly increasing with points[0] == 0; `values` has 2 * points.size()
  /// entries: even slots hold the value at a breakpoint, odd slots the value on the
  /// open gap that follows it.
  Signal(std::vector<Rational> points, std::vector<char> values);

  static Signal constant(bool value) { return Signal({Rational(0)}, {value, value}); }

  bool at(const Rational& t) const;
  /// Every point of the open interval (from, to) is true. Vacuous when to <= from.
  bool all_true_between(const Rational& from, const Rational& to) const;

  const std::vector<Rational>& points() const { return points_; }

  /// Maximal runs of true, as an interval queue.
  IntervalQueue to_queue() const;

 private:
  std::size_t element_of(const Rational& t) const;

  std::vector<Rational> points_;
  std::vector<char> values_;
  std::vector<std::size_t> false_prefix_;
};

Signal oracle_signal(const ExactTrace& t, const Formula& f, const OracleOptions& options = {});

/// Sum of timing upper bounds along the deepest chain of timed operators; +inf
/// if any is unbounded.
Endpoint lookahead(const Formula& f);

/// Window on which the oracle's answer is backed by trace information up to
/// `horizon`: all of [0, horizon] when every atom of f is constant after the
/// horizon, otherwise [0, horizon - lookahead(f)]. nullopt when that is empty.
std::optional<Interval> certified_window(const ExactTrace& t, const Formula& f, const Rational& horizon);

/// (z, time) |= f. With a horizon, throws OracleError if `time` lies outside the
/// certified window.
bool oracle_holds(const ExactTrace& t, const Formula& f, const Rational& time,
                  const std::optional<Rational>& horizon = std::nullopt);

/// Truth set of f. With a horizon, restricted to the certified window (throws
/// OracleError if that window is empty).
IntervalQueue oracle_truth_set(const ExactTrace& t, const Formula& f,
                               const std::optional<Rational>& horizon = std::nullopt,
                               const OracleOptions& options = {});

}  // namespace mitlq
