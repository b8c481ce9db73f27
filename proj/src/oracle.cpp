#include "mitlq/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mitlq {

Signal::Signal(std::vector<Rational> points, std::vector<char> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.empty() || points_.front() != 0 || values_.size() != 2 * points_.size()) {
    throw std::invalid_argument("malformed signal");
  }
  false_prefix_.resize(values_.size() + 1, 0);
  for (std::size_t e = 0; e < values_.size(); ++e) false_prefix_[e + 1] = false_prefix_[e] + (values_[e] ? 0 : 1);
}

std::size_t Signal::element_of(const Rational& t) const {
  auto it = std::upper_bound(points_.begin(), points_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - points_.begin()) - 1;
  return points_[k] == t ? 2 * k : 2 * k + 1;
}

bool Signal::at(const Rational& t) const { return values_[element_of(t)]; }

bool Signal::all_true_between(const Rational& from, const Rational& to) const {
  if (to <= from) return true;
  std::size_t a = element_of(from);
  std::size_t b = element_of(to);
  std::size_t first = (a % 2 == 0) ? a + 1 : a;
  std::size_t last = (b % 2 == 0) ? b - 1 : b;
  if (first > last) return true;
  return false_prefix_[last + 1] - false_prefix_[first] == 0;
}

IntervalQueue Signal::to_queue() const {
  std::vector<Interval> runs;
  const std::size_t n = points_.size();
  std::size_t e = 0;
  while (e < values_.size()) {
    if (!values_[e]) {
      ++e;
      continue;
    }
    std::size_t start = e;
    while (e + 1 < values_.size() && values_[e + 1]) ++e;
    std::size_t stop = e++;

    bool lo_closed = start % 2 == 0;
    Endpoint lo = points_[start / 2];
    Endpoint hi;
    bool hi_closed;
    if (stop % 2 == 0) {
      hi = points_[stop / 2];
      hi_closed = true;
    } else {
      std::size_t k = stop / 2;
      hi = k + 1 < n ? Endpoint(points_[k + 1]) : Endpoint::pos_inf();
      hi_closed = false;
    }
    runs.emplace_back(lo, lo_closed, hi, hi_closed);
  }
  return IntervalQueue::from_separated(std::move(runs));
}

namespace {

std::vector<Rational> normalize_points(std::vector<Rational> pts) {
  pts.emplace_back(0);
  std::erase_if(pts, [](const Rational& p) { return p < 0; });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// One sample time per region: the breakpoint itself, a gap midpoint, or one past
// the last breakpoint.
Rational sample(const std::vector<Rational>& pts, std::size_t element) {
  std::size_t k = element / 2;
  if (element % 2 == 0) return pts[k];
  if (k + 1 < pts.size()) return Rational((pts[k] + pts[k + 1]) / 2);
  return Rational(pts[k] + 1);
}

Signal tabulate(std::vector<Rational> pts, const std::function<bool(const Rational&)>& pred) {
  pts = normalize_points(std::move(pts));
  std::vector<char> values(2 * pts.size());
  for (std::size_t e = 0; e < values.size(); ++e) values[e] = pred(sample(pts, e));

  // Drop breakpoints where nothing changes.
  std::vector<Rational> kept{pts[0]};
  std::vector<char> kept_values{values[0], values[1]};
  for (std::size_t k = 1; k < pts.size(); ++k) {
    char before = kept_values.back();
    if (values[2 * k] == before && values[2 * k + 1] == before) continue;
    kept.push_back(pts[k]);
    kept_values.push_back(values[2 * k]);
    kept_values.push_back(values[2 * k + 1]);
  }
  return Signal(std::move(kept), std::move(kept_values));
}

std::vector<Rational> merged(const Signal& a, const Signal& b) {
  std::vector<Rational> out(a.points());
  out.insert(out.end(), b.points().begin(), b.points().end());
  return out;
}

// Breakpoints of a timed operator's result: operand breakpoints, shifted back by
// each finite endpoint of the timing interval.
std::vector<Rational> shifted_partition(std::vector<Rational> base, const Interval& timing,
                                        const OracleOptions& options) {
  std::vector<Rational> offsets{timing.lo()};
  if (timing.is_bounded()) offsets.push_back(timing.hi().value());
  std::vector<Rational> out(base);
  for (const auto& p : base) {
    for (const auto& d : offsets) out.emplace_back(p - d);
  }
  out.insert(out.end(), options.extra_points.begin(), options.extra_points.end());
  return out;
}

// Candidate witness times t + t2 with t2 in timing: every operand breakpoint in
// t + timing, the shifted interval endpoints, and one sample between each
// consecutive pair (plus one beyond the last when the interval is unbounded).
std::vector<Rational> witness_candidates(const std::vector<Rational>& breakpoints, const Interval& timing,
                                         const Rational& t) {
  Rational first = t + timing.lo();
  std::vector<Rational> marks{first};
  if (timing.is_bounded()) marks.emplace_back(t + timing.hi().value());
  for (const auto& p : breakpoints) {
    if (p < first) continue;
    if (timing.is_bounded() && p > t + timing.hi().value()) continue;
    marks.push_back(p);
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  std::vector<Rational> out;
  out.reserve(2 * marks.size() + 1);
  for (std::size_t k = 0; k < marks.size(); ++k) {
    out.push_back(marks[k]);
    if (k + 1 < marks.size()) out.emplace_back((marks[k] + marks[k + 1]) / 2);
  }
  if (!timing.is_bounded()) out.emplace_back(marks.back() + 1);
  return out;
}

bool in_timing(const Interval& timing, const Rational& t, const Rational& s) {
  return timing.contains(Rational(s - t));
}

class OracleEvaluator {
 public:
  OracleEvaluator(const ExactTrace& trace, const OracleOptions& options) : trace_(trace), options_(options) {}

  Signal eval(const Formula& f) {
    switch (f.op()) {
      case Op::True:
        return Signal::constant(true);
      case Op::False:
        return Signal::constant(false);
      case Op::Atom:
        return atom(f.name());
      case Op::Not: {
        Signal a = eval(f.child());
        return tabulate(a.points(), [&](const Rational& t) { return !a.at(t); });
      }
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        Signal a = eval(f.lhs());
        Signal b = eval(f.rhs());
        Op op = f.op();
        return tabulate(merged(a, b), [&](const Rational& t) {
          bool x = a.at(t);
          bool y = b.at(t);
          if (op == Op::And) return x && y;
          if (op == Op::Or) return x || y;
          return !x || y;
        });
      }
      case Op::Until:
        return until(eval(f.lhs()), eval(f.rhs()), f.timing());
      case Op::Eventually:
        return until(Signal::constant(true), eval(f.child()), f.timing());
      case Op::Always:
        return always(eval(f.child()), f.timing());
    }
    throw std::logic_error("unknown formula node");
  }

 private:
  Signal atom(const std::string& name) {
    auto it = trace_.propositions.find(name);
    if (it == trace_.propositions.end()) {
      throw EvaluationError("proposition '" + name + "' is not declared in the trace");
    }
    const IntervalQueue& q = it->second;
    std::vector<Rational> pts;
    for (const auto& i : q) {
      pts.push_back(i.lo());
      if (i.is_bounded()) pts.push_back(i.hi().value());
    }
    return tabulate(pts, [&](const Rational& t) {
      return std::any_of(q.begin(), q.end(), [&](const Interval& i) { return i.contains(t); });
    });
  }

  // exists t2 in timing: rhs(t + t2) and lhs on all of (t, t + t2)
  Signal until(const Signal& lhs, const Signal& rhs, const Interval& timing) {
    std::vector<Rational> operand_points = merged(lhs, rhs);
    return tabulate(shifted_partition(operand_points, timing, options_), [&](const Rational& t) {
      for (const auto& s : witness_candidates(operand_points, timing, t)) {
        if (in_timing(timing, t, s) && rhs.at(s) && lhs.all_true_between(t, s)) return true;
      }
      return false;
    });
  }

  // forall t2 in timing: operand(t + t2)
  Signal always(const Signal& operand, const Interval& timing) {
    return tabulate(shifted_partition(operand.points(), timing, options_), [&](const Rational& t) {
      for (const auto& s : witness_candidates(operand.points(), timing, t)) {
        if (in_timing(timing, t, s) && !operand.at(s)) return false;
      }
      return true;
    });
  }

  const ExactTrace& trace_;
  const OracleOptions& options_;
};

bool atoms_settled_by(const ExactTrace& t, const Formula& f, const Rational& horizon) {
  for (const auto& name : atoms(f)) {
    auto it = t.propositions.find(name);
    if (it == t.propositions.end()) continue;
    for (const auto& i : it->second) {
      if (i.lo() > horizon) return false;
      if (i.is_bounded() && i.hi().value() > horizon) return false;
    }
  }
  return true;
}

}  // namespace

Signal oracle_signal(const ExactTrace& t, const Formula& f, const OracleOptions& options) {
  return OracleEvaluator(t, options).eval(f);
}

Endpoint lookahead(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return Endpoint(Rational(0));
    case Op::Not:
      return lookahead(f.child());
    case Op::And:
    case Op::Or:
    case Op::Implies:
      return std::max(lookahead(f.lhs()), lookahead(f.rhs()));
    case Op::Until:
      return f.timing().hi() + std::max(lookahead(f.lhs()), lookahead(f.rhs()));
    case Op::Eventually:
    case Op::Always:
      return f.timing().hi() + lookahead(f.child());
  }
  throw std::logic_error("unknown formula node");
}

std::optional<Interval> certified_window(const ExactTrace& t, const Formula& f, const Rational& horizon) {
  if (horizon < 0) return std::nullopt;
  if (atoms_settled_by(t, f, horizon)) return Interval::closed(Rational(0), horizon);
  Endpoint reach = Endpoint(horizon) - lookahead(f);
  if (!reach.is_finite() || reach.value() < 0) return std::nullopt;
  return Interval::closed(Rational(0), reach.value());
}

bool oracle_holds(const ExactTrace& t, const Formula& f, const Rational& time, const std::optional<Rational>& horizon) {
  if (time < 0) throw std::invalid_argument("time must be non-negative");
  if (horizon) {
    auto window = certified_window(t, f, *horizon);
    if (!window || !window->contains(time)) {
      throw OracleError("horizon " + format_rational(*horizon) + " does not cover " + f.to_string() + " at time " +
                        format_rational(time));
    }
  }
  return oracle_signal(t, f).at(time);
}

IntervalQueue oracle_truth_set(const ExactTrace& t, const Formula& f, const std::optional<Rational>& horizon,
                               const OracleOptions& options) {
  IntervalQueue full = oracle_signal(t, f, options).to_queue();
  if (!horizon) return full;
  auto window = certified_window(t, f, *horizon);
  if (!window) {
    throw OracleError("horizon " + format_rational(*horizon) + " is too short for " + f.to_string());
  }
  // Restrict item by item; this stays clear of the queue operators under test.
  std::vector<Interval> kept;
  for (const auto& i : full) {
    if (auto clipped = intersect(i, *window)) kept.push_back(std::move(*clipped));
  }
  return IntervalQueue::from_separated(std::move(kept));
}

}  // namespace mitlq
