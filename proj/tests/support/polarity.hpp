#pragma once

// Brute-force under/over-approximations through the exact-trace oracle.
//
// Each atom g is split into g#lo (its under-approximation) and g#hi (its
// over-approximation). The under-approximation of a formula is the exact truth
// set of the formula with positive atoms read from g#lo and negated atoms read
// from g#hi; the over-approximation swaps the two. This follows from the
// inductive construction: negation is the only operator that swaps roles.

#include "mitlq/oracle.hpp"
#include "mitlq/trace.hpp"

namespace mitlq::testing {

enum class Role { Under, Over };

inline Role flip(Role r) { return r == Role::Under ? Role::Over : Role::Under; }

inline Formula polarize(const Formula& f, Role role) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return f;
    case Op::Atom:
      return Formula::atom(f.name() + (role == Role::Under ? "#lo" : "#hi"));
    case Op::Not:
      return Formula::negation(polarize(f.child(), flip(role)));
    case Op::And:
      return Formula::conjunction(polarize(f.lhs(), role), polarize(f.rhs(), role));
    case Op::Or:
      return Formula::disjunction(polarize(f.lhs(), role), polarize(f.rhs(), role));
    case Op::Implies:
      return Formula::implication(polarize(f.lhs(), flip(role)), polarize(f.rhs(), role));
    case Op::Until:
      return Formula::until(polarize(f.lhs(), role), polarize(f.rhs(), role), f.timing());
    case Op::Eventually:
      return Formula::eventually(f.timing(), polarize(f.child(), role));
    case Op::Always:
      return Formula::always(f.timing(), polarize(f.child(), role));
  }
  return f;
}

inline ExactTrace split_trace(const Trace& t) {
  ExactTrace out;
  for (const auto& [name, a] : t.propositions) {
    out.propositions.emplace(name + "#lo", a.under);
    out.propositions.emplace(name + "#hi", a.over);
  }
  return out;
}

inline Approximation brute_force_approximation(const Formula& f, const Trace& t) {
  ExactTrace split = split_trace(t);
  return {oracle_truth_set(split, polarize(f, Role::Under)), oracle_truth_set(split, polarize(f, Role::Over))};
}

}  // namespace mitlq::testing
