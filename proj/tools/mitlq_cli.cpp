// mitlq: check continuous-time traces against MITL formulas.
//
// Exit codes: 0 SATISFIED, 1 VIOLATED, 2 UNKNOWN (check only; other
// subcommands exit 0 on success). Failures exit with 10 and above:
//   10 formula syntax, 11 trace document, 12 evaluation, 13 usage.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mitlq/engine.hpp"
#include "mitlq/error.hpp"
#include "mitlq/render.hpp"
#include "mitlq/trace.hpp"

namespace {

constexpr int kFormulaError = 10;
constexpr int kTraceError = 11;
constexpr int kEvaluationError = 12;
constexpr int kUsageError = 13;

struct RunConfig {
  std::string subcommand;
  std::string formula;
  std::string trace_path;
  std::string at;
  std::string format = "text";
  std::string window;
  std::string horizon;
};

class UsageError : public mitlq::Error {
 public:
  using Error::Error;
};

std::optional<mitlq::Rational> optional_rational(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return mitlq::parse_rational(text);
  } catch (const mitlq::ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.message());
  }
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "check" && cfg.at.empty()) throw UsageError("check requires --at");
  if (cfg.subcommand != "check" && !cfg.at.empty()) throw UsageError("--at is only valid with check");
  auto at = optional_rational(cfg.at, "--at");
  auto window = optional_rational(cfg.window, "--window");
  auto horizon = optional_rational(cfg.horizon, "--horizon");
  if (at && *at < 0) throw UsageError("--at must be non-negative");
  if (horizon && *horizon < 0) throw UsageError("--horizon must be non-negative");

  std::string format = cfg.subcommand == "render" ? "svg" : cfg.format;
  if (format == "svg" && cfg.subcommand != "render") throw UsageError("svg output is produced by the render subcommand");

  mitlq::Formula formula = mitlq::parse_formula(cfg.formula);
  mitlq::Trace trace = mitlq::load_trace_file(cfg.trace_path);
  if (horizon) trace = mitlq::apply_horizon(trace, *horizon);

  if (cfg.subcommand == "check") {
    mitlq::Verdict v = mitlq::verdict(formula, trace, *at);
    if (format == "json") {
      out << "{\"verdict\": \"" << mitlq::to_string(v) << "\"}\n";
    } else {
      out << mitlq::to_string(v) << '\n';
    }
    switch (v) {
      case mitlq::Verdict::Satisfied:
        return 0;
      case mitlq::Verdict::Violated:
        return 1;
      case mitlq::Verdict::Unknown:
        return 2;
    }
  }

  mitlq::Report report = mitlq::report(formula, trace);
  if (format == "svg") {
    out << mitlq::render_svg(report, window);
  } else if (format == "json") {
    out << mitlq::report_to_json(report) << '\n';
  } else if (cfg.subcommand == "gap") {
    for (const auto& row : report.rows) {
      out << row.formula << "\t" << row.gap.delta;
      if (row.gap.delta_bounded) out << "\t" << mitlq::format_rational(*row.gap.delta_bounded);
      out << '\n';
    }
  } else {
    out << mitlq::report_to_text(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-valued MITL verification over interval-queue approximations"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--formula", cfg.formula, "MITL formula")->required();
    sub->add_option("--trace", cfg.trace_path, "trace JSON file")->required();
    sub->add_option("--horizon", cfg.horizon, "information horizon applied to every proposition");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "svg"}));
    sub->add_option("--window", cfg.window, "display window [0, w] for svg output");
    sub->add_option("--at", cfg.at, "query time (check only)");
  };
  add_common(app.add_subcommand("check", "three-valued verdict at one time"));
  add_common(app.add_subcommand("truthset", "under/over-approximations per subformula"));
  add_common(app.add_subcommand("gap", "gap measure per subformula"));
  add_common(app.add_subcommand("render", "SVG timeline per subformula"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    return run(cfg, std::cout);
  } catch (const mitlq::ParseError& e) {
    std::cerr << "mitlq: formula: " << e.what() << '\n';
    return kFormulaError;
  } catch (const mitlq::TraceError& e) {
    std::cerr << "mitlq: trace: " << e.what() << '\n';
    return kTraceError;
  } catch (const UsageError& e) {
    std::cerr << "mitlq: " << e.what() << '\n';
    return kUsageError;
  } catch (const mitlq::Error& e) {
    std::cerr << "mitlq: " << e.what() << '\n';
    return kEvaluationError;
  } catch (const std::exception& e) {
    std::cerr << "mitlq: " << e.what() << '\n';
    return kEvaluationError;
  }
}
