#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mitlq/interval.hpp"

namespace mitlq {

enum class Op : std::uint8_t {
  // primitive
  True,
  Atom,
  Not,
  And,
  Until,
  // derived; removed by desugar()
  False,
  Or,
  Implies,
  Eventually,
  Always,
};

/// Immutable MITL syntax tree. Copies share structure.
///
/// Unary nodes (Not, Eventually, Always) keep their operand in child(); binary
/// nodes use lhs()/rhs(). Until, Eventually and Always carry a non-degenerate
/// timing interval.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  /// Throws std::invalid_argument when `timing` is degenerate.
  static Formula until(Formula a, Formula b, Interval timing);
  static Formula eventually(Interval timing, Formula f);
  static Formula always(Interval timing, Formula f);

  Op op() const;
  /// Proposition name of an Atom node.
  const std::string& name() const;
  const Interval& timing() const;
  const Formula& child() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// True when the whole tree uses only True, Atom, Not, And, Until.
  bool is_primitive() const;

  /// Canonical text with minimal parentheses; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Grammar, loosest binding first:
///   implies := or ('->' implies)?
///   or      := and ('|' and)*
///   and     := until ('&' until)*
///   until   := unary ('U' timing? unary)?        (not associative)
///   unary   := '!' unary | 'F' timing? unary | 'G' timing? unary | atom
///   atom    := 'true' | 'false' | identifier | '(' implies ')'
/// A missing timing interval means (0,inf).
Formula parse_formula(std::string_view text);

/// Rewrites derived operators into True/Atom/Not/And/Until.
Formula desugar(const Formula& f);

std::set<std::string> atoms(const Formula& f);

/// Distinct subformulas in postorder (children first); `f` itself is last.
std::vector<Formula> subformulas(const Formula& f);

}  // namespace mitlq
