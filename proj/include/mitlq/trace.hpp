#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "mitlq/interval_queue.hpp"

namespace mitlq {

/// Under- and over-approximation of one truth set. union(under) ⊆ union(over).
struct Approximation {
  IntervalQueue under;
  IntervalQueue over;

  /// Throws std::invalid_argument unless union(under) ⊆ union(over).
  static Approximation checked(IntervalQueue under, IntervalQueue over);
  static Approximation exact(const IntervalQueue& q) { return {q, q}; }

  bool is_exact() const { return under == over; }
  /// union(over) \ union(under): the set of times with an unknown verdict.
  IntervalQueue unknown() const { return difference(over, under); }

  friend bool operator==(const Approximation&, const Approximation&) = default;
};

/// Exact truth sets of the atomic propositions.
struct ExactTrace {
  std::map<std::string, IntervalQueue> propositions;

  friend bool operator==(const ExactTrace&, const ExactTrace&) = default;
};

/// Per-proposition approximations with an optional information horizon.
struct Trace {
  std::map<std::string, Approximation> propositions;
  std::optional<Rational> horizon;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Reads the JSON trace document. Queues are merged into canonical form; a
/// declared horizon is applied immediately. Throws TraceError.
Trace load_trace(std::istream& in);
Trace load_trace_string(std::string_view json);
Trace load_trace_file(const std::string& path);

/// Canonical JSON form; load_trace(save_trace(t)) == t.
std::string save_trace(const Trace& t);

/// Marks everything after `b` as unknown for every proposition: (b,inf) is
/// added to each over-approximation and removed from each under-approximation.
Trace apply_horizon(const Trace& t, const Rational& b);
Trace apply_horizon(const ExactTrace& t, const Rational& b);

/// Interiors of the items as under-approximation, closures as over-approximation.
Trace approximate_from_exact(const ExactTrace& t);

Trace to_trace(const ExactTrace& t);

/// Present iff under == over for every proposition.
std::optional<ExactTrace> as_exact(const Trace& t);

}  // namespace mitlq
