#include "mitlq/engine.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mitlq/error.hpp"

namespace mitlq {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Satisfied:
      return "SATISFIED";
    case Verdict::Violated:
      return "VIOLATED";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

const Approximation& Evaluation::at(const Formula& f) const {
  auto it = index_.find(f.to_string());
  if (it == index_.end()) throw std::out_of_range("not a subformula: " + f.to_string());
  return rows_[it->second].approximation;
}

namespace {

// Negation swaps roles: the new under-approximation complements the old over.
Approximation negate(const Approximation& a) { return {complement(a.over), complement(a.under)}; }

Approximation conjoin(const Approximation& a, const Approximation& b) {
  return {mitlq::conjoin(a.under, b.under), mitlq::conjoin(a.over, b.over)};
}

Approximation until(const Approximation& a, const Approximation& b, const Interval& timing) {
  return {until_op(a.under, b.under, timing), until_op(a.over, b.over, timing)};
}

Approximation everything() { return Approximation::exact(IntervalQueue::everything()); }

class Evaluator {
 public:
  Evaluator(const Trace& trace, std::vector<Evaluation::Row>& rows, std::map<std::string, std::size_t>& index)
      : trace_(trace), rows_(rows), index_(index) {}

  const Approximation& visit(const Formula& f) {
    std::string key = f.to_string();
    if (auto it = index_.find(key); it != index_.end()) return rows_[it->second].approximation;

    Approximation result = compute(f);
    index_.emplace(std::move(key), rows_.size());
    rows_.push_back({f, std::move(result)});
    return rows_.back().approximation;
  }

 private:
  Approximation compute(const Formula& f) {
    switch (f.op()) {
      case Op::True:
        return everything();
      case Op::False:
        return negate(everything());
      case Op::Atom: {
        auto it = trace_.propositions.find(f.name());
        if (it == trace_.propositions.end()) {
          throw EvaluationError("proposition '" + f.name() + "' is not declared in the trace");
        }
        return it->second;
      }
      case Op::Not:
        return negate(visit(f.child()));
      case Op::And: {
        Approximation a = visit(f.lhs());
        return conjoin(a, visit(f.rhs()));
      }
      case Op::Or: {
        Approximation a = visit(f.lhs());
        return negate(conjoin(negate(a), negate(visit(f.rhs()))));
      }
      case Op::Implies: {
        Approximation a = visit(f.lhs());
        return negate(conjoin(negate(negate(a)), negate(visit(f.rhs()))));
      }
      case Op::Until: {
        Approximation a = visit(f.lhs());
        return until(a, visit(f.rhs()), f.timing());
      }
      case Op::Eventually:
        return until(everything(), visit(f.child()), f.timing());
      case Op::Always:
        return negate(until(everything(), negate(visit(f.child())), f.timing()));
    }
    throw std::logic_error("unknown formula node");
  }

  const Trace& trace_;
  std::vector<Evaluation::Row>& rows_;
  std::map<std::string, std::size_t>& index_;
};

}  // namespace

Evaluation evaluate(const Formula& f, const Trace& t) {
  Evaluation out;
  // Rows are appended as subtrees finish, which is exactly postorder.
  Evaluator(t, out.rows_, out.index_).visit(f);
  return out;
}

Verdict verdict(const Approximation& a, const Rational& time) {
  if (time < 0) throw std::invalid_argument("verdict time must be non-negative");
  if (a.under.contains(time)) return Verdict::Satisfied;
  if (!a.over.contains(time)) return Verdict::Violated;
  return Verdict::Unknown;
}

Verdict verdict(const Formula& f, const Trace& t, const Rational& time) {
  return verdict(evaluate(f, t).root().approximation, time);
}

Gap gap(const Approximation& a, const std::optional<Rational>& horizon) {
  IntervalQueue unknown = a.unknown();
  Gap g{unknown.measure(), std::nullopt};
  if (g.delta.is_pos_inf() && horizon) {
    auto window = IntervalQueue::construct({Interval::closed(Rational(0), *horizon)});
    g.delta_bounded = mitlq::conjoin(unknown, window).measure().value();
  }
  return g;
}

std::vector<Gap> gaps(const Formula& f, const Trace& t) {
  std::vector<Gap> out;
  Evaluation eval = evaluate(f, t);
  for (const auto& row : eval.rows()) out.push_back(gap(row.approximation, t.horizon));
  return out;
}

Report report(const Formula& f, const Trace& t) {
  Report r;
  Evaluation eval = evaluate(f, t);
  for (const auto& row : eval.rows()) {
    r.rows.push_back({row.formula.to_string(), row.approximation, gap(row.approximation, t.horizon)});
  }
  return r;
}

std::string report_to_json(const Report& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({
        {"formula", row.formula},
        {"under", row.approximation.under.to_string()},
        {"over", row.approximation.over.to_string()},
        {"delta", row.gap.delta.to_string()},
        {"delta_bounded",
         row.gap.delta_bounded ? nlohmann::json(format_rational(*row.gap.delta_bounded)) : nlohmann::json()},
    });
  }
  return rows.dump(2);
}

Report report_from_json(std::string_view text) {
  Report r;
  try {
    auto rows = nlohmann::json::parse(text);
    if (!rows.is_array()) throw Error("report must be a JSON array");
    for (const auto& row : rows) {
      ReportRow out;
      out.formula = row.at("formula").get<std::string>();
      out.approximation = {parse_queue(row.at("under").get<std::string>()),
                           parse_queue(row.at("over").get<std::string>())};
      out.gap.delta = parse_endpoint(row.at("delta").get<std::string>());
      if (row.contains("delta_bounded") && !row.at("delta_bounded").is_null()) {
        out.gap.delta_bounded = parse_rational(row.at("delta_bounded").get<std::string>());
      }
      r.rows.push_back(std::move(out));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << row.formula << '\n';
    os << "  under: " << row.approximation.under << '\n';
    os << "  over:  " << row.approximation.over << '\n';
    os << "  delta: " << row.gap.delta;
    if (row.gap.delta_bounded) os << " (" << format_rational(*row.gap.delta_bounded) << " within horizon)";
    os << '\n';
  }
  return os.str();
}

}  // namespace mitlq
