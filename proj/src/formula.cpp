#include "mitlq/formula.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "text_cursor.hpp"

namespace mitlq {

struct Formula::Node {
  Op op;
  std::string name;
  std::optional<Interval> timing;
  std::optional<Formula> first;
  std::optional<Formula> second;
};

namespace {

const Interval& default_timing() {
  static const Interval unbounded = Interval::open(Rational(0), Endpoint::pos_inf());
  return unbounded;
}

void require_timing(const Interval& timing) {
  if (timing.is_singleton()) {
    throw std::invalid_argument("timing interval " + timing.to_string() + " is degenerate");
  }
}

}  // namespace

Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Op::True, {}, {}, {}, {}})); }

Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Op::False, {}, {}, {}, {}})); }

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, {}, std::move(f), {}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::And, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::Or, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{Op::Implies, {}, {}, std::move(a), std::move(b)}));
}

Formula Formula::until(Formula a, Formula b, Interval timing) {
  require_timing(timing);
  return Formula(std::make_shared<const Node>(Node{Op::Until, {}, std::move(timing), std::move(a), std::move(b)}));
}

Formula Formula::eventually(Interval timing, Formula f) {
  require_timing(timing);
  return Formula(std::make_shared<const Node>(Node{Op::Eventually, {}, std::move(timing), std::move(f), {}}));
}

Formula Formula::always(Interval timing, Formula f) {
  require_timing(timing);
  return Formula(std::make_shared<const Node>(Node{Op::Always, {}, std::move(timing), std::move(f), {}}));
}

Op Formula::op() const { return node_->op; }

const std::string& Formula::name() const {
  if (node_->op != Op::Atom) throw std::logic_error("name() of a non-atom formula");
  return node_->name;
}

const Interval& Formula::timing() const {
  if (!node_->timing) throw std::logic_error("timing() of an untimed formula");
  return *node_->timing;
}

const Formula& Formula::child() const {
  if (!node_->first || node_->second) throw std::logic_error("child() of a non-unary formula");
  return *node_->first;
}

const Formula& Formula::lhs() const {
  if (!node_->second) throw std::logic_error("lhs() of a non-binary formula");
  return *node_->first;
}

const Formula& Formula::rhs() const {
  if (!node_->second) throw std::logic_error("rhs() of a non-binary formula");
  return *node_->second;
}

bool Formula::is_primitive() const {
  switch (node_->op) {
    case Op::True:
    case Op::Atom:
      return true;
    case Op::Not:
      return child().is_primitive();
    case Op::And:
    case Op::Until:
      return lhs().is_primitive() && rhs().is_primitive();
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.op == y.op && x.name == y.name && x.timing == y.timing && x.first == y.first && x.second == y.second;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Level : int { kImplies = 1, kOr = 2, kAnd = 3, kUntil = 4, kUnary = 5, kAtomic = 6 };

int level_of(Op op) {
  switch (op) {
    case Op::Implies:
      return kImplies;
    case Op::Or:
      return kOr;
    case Op::And:
      return kAnd;
    case Op::Until:
      return kUntil;
    case Op::Not:
    case Op::Eventually:
    case Op::Always:
      return kUnary;
    default:
      return kAtomic;
  }
}

void print(const Formula& f, int min_level, std::string& out) {
  bool wrap = level_of(f.op()) < min_level;
  if (wrap) out += '(';
  switch (f.op()) {
    case Op::True:
      out += "true";
      break;
    case Op::False:
      out += "false";
      break;
    case Op::Atom:
      out += f.name();
      break;
    case Op::Not:
      out += '!';
      print(f.child(), kUnary, out);
      break;
    case Op::Eventually:
    case Op::Always:
      out += f.op() == Op::Eventually ? 'F' : 'G';
      out += f.timing().to_string();
      out += ' ';
      print(f.child(), kUnary, out);
      break;
    case Op::And:
      print(f.lhs(), kAnd, out);
      out += " & ";
      print(f.rhs(), kAnd + 1, out);
      break;
    case Op::Or:
      print(f.lhs(), kOr, out);
      out += " | ";
      print(f.rhs(), kOr + 1, out);
      break;
    case Op::Implies:
      print(f.lhs(), kImplies + 1, out);
      out += " -> ";
      print(f.rhs(), kImplies, out);
      break;
    case Op::Until:
      print(f.lhs(), kUnary, out);
      out += " U";
      out += f.timing().to_string();
      out += ' ';
      print(f.rhs(), kUnary, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : cursor_(text) {}

  Formula parse() {
    Formula f = implies();
    if (!cursor_.at_end()) cursor_.fail("unexpected '" + std::string(1, cursor_.peek()) + "'");
    return f;
  }

 private:
  Formula implies() {
    Formula lhs = disjunction();
    if (cursor_.consume("->")) return Formula::implication(std::move(lhs), implies());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (cursor_.consume('|')) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = until();
    while (cursor_.consume('&')) f = Formula::conjunction(std::move(f), until());
    return f;
  }

  Formula until() {
    Formula lhs = unary();
    if (!keyword("U")) return lhs;
    Interval timing = optional_timing();
    Formula rhs = unary();
    if (peek_keyword("U")) cursor_.fail("chained 'U' requires parentheses");
    return Formula::until(std::move(lhs), std::move(rhs), std::move(timing));
  }

  Formula unary() {
    if (cursor_.consume('!')) return Formula::negation(unary());
    if (keyword("F")) {
      Interval timing = optional_timing();
      return Formula::eventually(std::move(timing), unary());
    }
    if (keyword("G")) {
      Interval timing = optional_timing();
      return Formula::always(std::move(timing), unary());
    }
    return atomic();
  }

  Formula atomic() {
    if (cursor_.consume('(')) {
      Formula f = implies();
      cursor_.expect(')', "')'");
      return f;
    }
    std::size_t at = cursor_.offset();
    std::string word = identifier();
    if (word.empty()) {
      if (cursor_.at_end()) cursor_.fail("unexpected end of formula");
      cursor_.fail("unexpected '" + std::string(1, cursor_.peek()) + "'");
    }
    if (word == "true") return Formula::top();
    if (word == "false") return Formula::bottom();
    if (word == "U" || word == "F" || word == "G") throw ParseError("'" + word + "' is missing an operand", at);
    return Formula::atom(std::move(word));
  }

  // Timing literal directly after U/F/G. `(` opens an interval only when a
  // number follows; otherwise it starts a parenthesised operand.
  Interval optional_timing() {
    char c = cursor_.peek();
    bool interval = c == '[';
    if (c == '(') {
      auto rest = cursor_.rest();
      std::size_t k = rest.find('(') + 1;
      while (k < rest.size() && std::isspace(static_cast<unsigned char>(rest[k]))) ++k;
      interval = k < rest.size() && (std::isdigit(static_cast<unsigned char>(rest[k])) || rest[k] == '.');
    }
    if (!interval) return default_timing();

    std::size_t at = cursor_.offset();
    Interval timing = detail::read_interval(cursor_);
    if (timing.is_singleton()) throw ParseError("degenerate timing interval " + timing.to_string(), at);
    return timing;
  }

  std::string identifier() {
    cursor_.skip_space();
    auto rest = cursor_.rest();
    if (rest.empty() || !is_ident_start(rest.front())) return {};
    std::size_t n = 1;
    while (n < rest.size() && is_ident_char(rest[n])) ++n;
    cursor_.reset(cursor_.pos() + n);
    return std::string(rest.substr(0, n));
  }

  bool peek_keyword(std::string_view kw) {
    std::size_t save = cursor_.pos();
    bool hit = identifier() == kw;
    cursor_.reset(save);
    return hit;
  }

  bool keyword(std::string_view kw) {
    std::size_t save = cursor_.pos();
    if (identifier() == kw) return true;
    cursor_.reset(save);
    return false;
  }

  detail::TextCursor cursor_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// ---------------------------------------------------------------------------
// Rewriting and traversal

Formula desugar(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return f;
    case Op::False:
      return Formula::negation(Formula::top());
    case Op::Not:
      return Formula::negation(desugar(f.child()));
    case Op::And:
      return Formula::conjunction(desugar(f.lhs()), desugar(f.rhs()));
    case Op::Until:
      return Formula::until(desugar(f.lhs()), desugar(f.rhs()), f.timing());
    case Op::Or:
      return Formula::negation(Formula::conjunction(Formula::negation(desugar(f.lhs())),
                                                    Formula::negation(desugar(f.rhs()))));
    case Op::Implies:
      return desugar(Formula::disjunction(Formula::negation(f.lhs()), f.rhs()));
    case Op::Eventually:
      return Formula::until(Formula::top(), desugar(f.child()), f.timing());
    case Op::Always:
      return Formula::negation(
          Formula::until(Formula::top(), Formula::negation(desugar(f.child())), f.timing()));
  }
  throw std::logic_error("unknown formula node");
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Atom:
      out.insert(f.name());
      return;
    case Op::True:
    case Op::False:
      return;
    case Op::Not:
    case Op::Eventually:
    case Op::Always:
      collect_atoms(f.child(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

void postorder(const Formula& f, std::unordered_set<std::string>& seen, std::vector<Formula>& out) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      break;
    case Op::Not:
    case Op::Eventually:
    case Op::Always:
      postorder(f.child(), seen, out);
      break;
    default:
      postorder(f.lhs(), seen, out);
      postorder(f.rhs(), seen, out);
  }
  if (seen.insert(f.to_string()).second) out.push_back(f);
}

}  // namespace

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::unordered_set<std::string> seen;
  std::vector<Formula> out;
  postorder(f, seen, out);
  return out;
}

}  // namespace mitlq
