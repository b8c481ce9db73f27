#pragma once

#include <optional>
#include <string>

#include "mitlq/engine.hpp"

namespace mitlq {

/// SVG timeline with one lane per report row: under-approximation as solid bars,
/// the unknown region as hatched bars, and the gap measure next to each label.
///
/// Time runs over [0, window]. Without a window the largest finite endpoint is
/// used; in that case an unbounded item is an error (throws Error). Items that
/// run past the window are cut there and marked with an arrow.
std::string render_svg(const Report& r, const std::optional<Rational>& window);

}  // namespace mitlq
