#pragma once

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mitlq/interval.hpp"

namespace mitlq {

/// Finite set of non-empty, pairwise separated intervals, stored in ascending
/// order of the earlier-than relation. Because the order is canonical, two
/// queues with equal items compare equal.
class IntervalQueue {
 public:
  IntervalQueue() = default;

  /// Merges overlapping or touching intervals into a queue with the same union.
  /// Absent entries (empty sets) are dropped.
  static IntervalQueue construct(std::span<const std::optional<Interval>> intervals);
  static IntervalQueue construct(std::span<const Interval> intervals);
  static IntervalQueue construct(std::initializer_list<Interval> intervals);

  /// Adopts intervals that are already pairwise separated, in any order.
  /// Throws std::invalid_argument otherwise.
  static IntervalQueue from_separated(std::vector<Interval> items);

  /// {[0, inf)}
  static IntervalQueue everything() { return IntervalQueue({Interval::non_negative()}); }

  std::span<const Interval> items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// Membership in the union. Precondition: t >= 0.
  bool contains(const Rational& t) const;

  /// Lebesgue measure of the union; +inf if any item is unbounded.
  Endpoint measure() const;

  std::string to_string() const;

  friend bool operator==(const IntervalQueue&, const IntervalQueue&) = default;

 private:
  explicit IntervalQueue(std::vector<Interval> sorted) : items_(std::move(sorted)) {}

  std::vector<Interval> items_;

  friend IntervalQueue conjoin(const IntervalQueue&, const IntervalQueue&);
  friend IntervalQueue complement(const IntervalQueue&);
};

std::ostream& operator<<(std::ostream& os, const IntervalQueue& q);

/// Queue whose union is [0, inf) minus the union of q.
IntervalQueue complement(const IntervalQueue& q);

/// Pairwise intersections; the union is the intersection of the unions.
IntervalQueue conjoin(const IntervalQueue& a, const IntervalQueue& b);

/// Timed until over truth-set queues: for every H in `lhs` and J in `rhs`,
/// ((Cl(H) ∩ J) ⊖ timing) ∩ Cl(H), merged into a queue. When 0 ∈ timing the
/// items of `rhs` are added as well, since a zero-offset witness needs no lhs.
/// Throws std::invalid_argument if `timing` is a singleton.
IntervalQueue until_op(const IntervalQueue& lhs, const IntervalQueue& rhs, const Interval& timing);

/// Union of a minus union of b.
IntervalQueue difference(const IntervalQueue& a, const IntervalQueue& b);

/// Parses `{[0,1), (1,2]}`. Items need not be separated or sorted; they are
/// merged as by construct.
IntervalQueue parse_queue(std::string_view text);

}  // namespace mitlq
