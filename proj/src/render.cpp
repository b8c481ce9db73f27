#include "mitlq/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mitlq/error.hpp"

namespace mitlq {

namespace {

constexpr double kLabelWidth = 300;
constexpr double kPlotWidth = 640;
constexpr double kLaneHeight = 46;
constexpr double kBarHeight = 14;
constexpr double kTop = 20;
constexpr double kMinBar = 1.5;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Rational default_window(const Report& r) {
  Rational far(0);
  for (const auto& row : r.rows) {
    for (const auto* q : {&row.approximation.under, &row.approximation.over}) {
      for (const auto& i : *q) {
        if (!i.is_bounded()) {
          throw Error("an unbounded interval needs an explicit display window");
        }
        far = std::max(far, Rational(i.hi().value()));
      }
    }
  }
  return far == 0 ? Rational(1) : far;
}

class Canvas {
 public:
  explicit Canvas(Rational window) : window_(std::move(window)), scale_(kPlotWidth / window_.get_d()) {}

  double x(const Rational& t) const { return kLabelWidth + std::min(t, window_).get_d() * scale_; }

  // One bar per item, clipped to the window.
  void bars(const IntervalQueue& q, double y, const std::string& fill, const char* css_class) {
    for (const auto& i : q) {
      if (i.lo() > window_) continue;
      double x0 = x(i.lo());
      bool cut = !i.is_bounded() || i.hi().value() > window_;
      double x1 = cut ? x(window_) : x(i.hi().value());
      double w = std::max(x1 - x0, kMinBar);
      out_ << "  <rect class=\"" << css_class << "\" x=\"" << num(x0) << "\" y=\"" << num(y) << "\" width=\""
           << num(w) << "\" height=\"" << num(kBarHeight) << "\" fill=\"" << fill << "\"><title>" << i
           << "</title></rect>\n";
      if (cut) {
        double xe = x(window_);
        double ym = y + kBarHeight / 2;
        out_ << "  <polygon class=\"arrow\" points=\"" << num(xe) << ',' << num(y - 3) << ' ' << num(xe + 9) << ','
             << num(ym) << ' ' << num(xe) << ',' << num(y + kBarHeight + 3) << "\" fill=\"#444\"/>\n";
      }
    }
  }

  std::ostringstream& out() { return out_; }

 private:
  Rational window_;
  double scale_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const Report& r, const std::optional<Rational>& window) {
  Rational w = window ? *window : default_window(r);
  if (w <= 0) throw Error("display window must be positive");

  Canvas canvas(w);
  auto& out = canvas.out();
  double height = kTop + kLaneHeight * static_cast<double>(r.rows.size()) + 40;
  double width = kLabelWidth + kPlotWidth + 40;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" font-family=\"monospace\" font-size=\"12\">\n";
  out << "  <defs>\n"
         "    <pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
         "patternTransform=\"rotate(45)\">\n"
         "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#c05621\" stroke-width=\"2\"/>\n"
         "    </pattern>\n"
         "  </defs>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    double lane = kTop + kLaneHeight * static_cast<double>(k);
    double bar_y = lane + 8;

    std::string delta = "delta = " + row.gap.delta.to_string();
    if (row.gap.delta_bounded) delta += " (" + format_rational(*row.gap.delta_bounded) + " within horizon)";

    out << "  <g class=\"lane\">\n";
    out << "  <text x=\"8\" y=\"" << num(bar_y + 11) << "\">" << escape(row.formula) << "</text>\n";
    out << "  <text class=\"delta\" x=\"8\" y=\"" << num(bar_y + 27) << "\" fill=\"#555\">" << escape(delta)
        << "</text>\n";
    out << "  <line x1=\"" << num(kLabelWidth) << "\" y1=\"" << num(bar_y + kBarHeight / 2) << "\" x2=\""
        << num(kLabelWidth + kPlotWidth) << "\" y2=\"" << num(bar_y + kBarHeight / 2)
        << "\" stroke=\"#ddd\"/>\n";
    canvas.bars(row.approximation.under, bar_y, "#2b6cb0", "under");
    canvas.bars(row.approximation.unknown(), bar_y, "url(#hatch)", "unknown");
    out << "  </g>\n";
  }

  double axis_y = kTop + kLaneHeight * static_cast<double>(r.rows.size()) + 6;
  out << "  <line x1=\"" << num(kLabelWidth) << "\" y1=\"" << num(axis_y) << "\" x2=\""
      << num(kLabelWidth + kPlotWidth) << "\" y2=\"" << num(axis_y) << "\" stroke=\"black\"/>\n";
  constexpr int kTicks = 10;
  for (int k = 0; k <= kTicks; ++k) {
    Rational t = w * k / kTicks;
    double tx = canvas.x(t);
    out << "  <line x1=\"" << num(tx) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(tx) << "\" y2=\""
        << num(axis_y + 4) << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << num(tx) << "\" y=\"" << num(axis_y + 16) << "\" text-anchor=\"middle\">"
        << num(t.get_d()) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace mitlq
