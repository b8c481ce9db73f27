#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mitlq/formula.hpp"
#include "mitlq/trace.hpp"

namespace mitlq {

enum class Verdict { Satisfied, Violated, Unknown };

/// `SATISFIED`, `VIOLATED`, `UNKNOWN`.
std::string_view to_string(Verdict v);

/// Approximations of every distinct subformula, in postorder.
class Evaluation {
 public:
  struct Row {
    Formula formula;
    Approximation approximation;
  };

  const std::vector<Row>& rows() const { return rows_; }
  /// Row of the evaluated formula itself.
  const Row& root() const { return rows_.back(); }
  /// Throws std::out_of_range if `f` is not a subformula.
  const Approximation& at(const Formula& f) const;

 private:
  friend Evaluation evaluate(const Formula&, const Trace&);
  std::vector<Row> rows_;
  std::map<std::string, std::size_t> index_;
};

/// Builds under/over-approximations bottom-up. Derived operators are evaluated
/// through their primitive definitions, so sugared and desugared formulas give
/// identical results. Throws EvaluationError for propositions missing from the trace.
Evaluation evaluate(const Formula& f, const Trace& t);

Verdict verdict(const Approximation& a, const Rational& time);
Verdict verdict(const Formula& f, const Trace& t, const Rational& time);

struct Gap {
  /// Measure of union(over) \ union(under); may be +inf.
  Endpoint delta;
  /// Same measure restricted to [0, horizon]; set when delta is infinite and a horizon is known.
  std::optional<Rational> delta_bounded;

  friend bool operator==(const Gap&, const Gap&) = default;
};

Gap gap(const Approximation& a, const std::optional<Rational>& horizon);

struct ReportRow {
  std::string formula;
  Approximation approximation;
  Gap gap;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct Report {
  std::vector<ReportRow> rows;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Per-subformula gaps, postorder.
std::vector<Gap> gaps(const Formula& f, const Trace& t);

Report report(const Formula& f, const Trace& t);

/// JSON array of {formula, under, over, delta, delta_bounded}.
std::string report_to_json(const Report& r);
/// Throws Error on malformed input.
Report report_from_json(std::string_view json);
std::string report_to_text(const Report& r);

}  // namespace mitlq
