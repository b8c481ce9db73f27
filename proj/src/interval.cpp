#include "mitlq/interval.hpp"

#include <ostream>
#include <stdexcept>

#include "text_cursor.hpp"

namespace mitlq {

namespace {

bool bounds_empty(const Endpoint& lo, bool lo_closed, const Endpoint& hi, bool hi_closed) {
  if (lo > hi) return true;
  if (lo == hi) return !lo.is_finite() || !(lo_closed && hi_closed);
  return false;
}

std::string format_bounds(const Endpoint& lo, bool lo_closed, const Endpoint& hi, bool hi_closed) {
  std::string s;
  s += lo_closed ? '[' : '(';
  s += lo.to_string();
  s += ',';
  s += hi.to_string();
  s += hi_closed ? ']' : ')';
  return s;
}

}  // namespace

bool ExtInterval::empty() const { return bounds_empty(lo, lo_closed, hi, hi_closed); }

bool ExtInterval::contains(const Rational& t) const {
  Endpoint e(t);
  bool above = lo_closed ? lo <= e : lo < e;
  bool below = hi_closed ? e <= hi : e < hi;
  return above && below;
}

std::string ExtInterval::to_string() const { return format_bounds(lo, lo_closed, hi, hi_closed); }

Interval::Interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed)
    : lo_(std::move(lo)), lo_closed_(lo_closed), hi_(std::move(hi)), hi_closed_(hi_closed) {
  if (!lo_.is_finite()) throw std::invalid_argument("interval lower bound must be finite");
  if (lo_.value() < 0) throw std::invalid_argument("interval must lie in [0, inf)");
  if (hi_.is_pos_inf()) hi_closed_ = false;
  if (bounds_empty(lo_, lo_closed_, hi_, hi_closed_)) {
    throw std::invalid_argument("empty interval " + format_bounds(lo_, lo_closed_, hi_, hi_closed_));
  }
}

std::optional<Interval> Interval::make(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed) {
  if (hi.is_pos_inf()) hi_closed = false;
  if (bounds_empty(lo, lo_closed, hi, hi_closed)) return std::nullopt;
  return Interval(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

bool Interval::contains(const Rational& t) const { return as_ext().contains(t); }

std::string Interval::to_string() const { return format_bounds(lo_, lo_closed_, hi_, hi_closed_); }

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.to_string(); }

std::optional<Interval> intersect(const ExtInterval& a, const Interval& b) {
  Endpoint lo;
  bool lo_closed;
  if (a.lo == b.lo_endpoint()) {
    lo = a.lo;
    lo_closed = a.lo_closed && b.lo_closed();
  } else if (a.lo > b.lo_endpoint()) {
    lo = a.lo;
    lo_closed = a.lo_closed;
  } else {
    lo = b.lo_endpoint();
    lo_closed = b.lo_closed();
  }

  Endpoint hi;
  bool hi_closed;
  if (a.hi == b.hi()) {
    hi = a.hi;
    hi_closed = a.hi_closed && b.hi_closed();
  } else if (a.hi < b.hi()) {
    hi = a.hi;
    hi_closed = a.hi_closed;
  } else {
    hi = b.hi();
    hi_closed = b.hi_closed();
  }
  return Interval::make(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) { return intersect(a.as_ext(), b); }

Interval closure(const Interval& a) { return {a.lo_endpoint(), true, a.hi(), true}; }

std::optional<Interval> interior(const Interval& a) {
  return Interval::make(a.lo_endpoint(), false, a.hi(), false);
}

bool separated(const Interval& a, const Interval& b) {
  return !intersect(a, closure(b)) && !intersect(closure(a), b);
}

std::optional<Interval> union_if_connected(const Interval& a, const Interval& b) {
  if (separated(a, b)) return std::nullopt;

  bool lo_closed;
  const Endpoint* lo;
  if (a.lo() == b.lo()) {
    lo = &a.lo_endpoint();
    lo_closed = a.lo_closed() || b.lo_closed();
  } else if (a.lo() < b.lo()) {
    lo = &a.lo_endpoint();
    lo_closed = a.lo_closed();
  } else {
    lo = &b.lo_endpoint();
    lo_closed = b.lo_closed();
  }

  bool hi_closed;
  const Endpoint* hi;
  if (a.hi() == b.hi()) {
    hi = &a.hi();
    hi_closed = a.hi_closed() || b.hi_closed();
  } else if (a.hi() > b.hi()) {
    hi = &a.hi();
    hi_closed = a.hi_closed();
  } else {
    hi = &b.hi();
    hi_closed = b.hi_closed();
  }
  return Interval(*lo, lo_closed, *hi, hi_closed);
}

std::optional<Interval> right_of(const std::optional<Interval>& a) {
  if (!a) return Interval::non_negative();
  return Interval::make(a->hi(), !a->hi_closed(), Endpoint::pos_inf(), false);
}

std::optional<Interval> left_of(const std::optional<Interval>& a) {
  if (!a) return Interval::non_negative();
  return Interval::make(Rational(0), true, a->lo_endpoint(), !a->lo_closed());
}

bool precedes(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo_endpoint()) return true;
  return a.hi() == b.lo_endpoint() && !(a.hi_closed() && b.lo_closed());
}

ExtInterval minkowski_diff(const Interval& b, const Interval& i) {
  ExtInterval out;
  out.lo = b.lo_endpoint() - i.hi();
  out.lo_closed = out.lo.is_finite() && b.lo_closed() && i.hi_closed();
  out.hi = b.hi() - i.lo_endpoint();
  out.hi_closed = out.hi.is_finite() && b.hi_closed() && i.lo_closed();
  return out;
}

namespace detail {

Interval read_interval(TextCursor& cursor) {
  std::size_t start = cursor.offset();
  bool lo_closed;
  if (cursor.consume('[')) {
    lo_closed = true;
  } else if (cursor.consume('(')) {
    lo_closed = false;
  } else {
    cursor.fail("expected '[' or '(' to open an interval");
  }

  auto read_bound = [&](const char* which) {
    std::size_t at = cursor.offset();
    auto token = cursor.number_token();
    if (token.empty()) cursor.fail(std::string("expected ") + which + " bound");
    try {
      return parse_endpoint(token);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), at);
    }
  };

  Endpoint lo = read_bound("lower");
  cursor.expect(',', "',' between interval bounds");
  Endpoint hi = read_bound("upper");

  bool hi_closed;
  if (cursor.consume(']')) {
    hi_closed = true;
  } else if (cursor.consume(')')) {
    hi_closed = false;
  } else {
    cursor.fail("expected ']' or ')' to close an interval");
  }

  if (!lo.is_finite() || lo.value() < 0) throw ParseError("interval lower bound must be a non-negative rational", start);
  auto made = Interval::make(std::move(lo), lo_closed, std::move(hi), hi_closed);
  if (!made) throw ParseError("empty interval", start);
  return *made;
}

}  // namespace detail

Interval parse_interval(std::string_view text) {
  detail::TextCursor cursor(text);
  Interval result = detail::read_interval(cursor);
  if (!cursor.at_end()) cursor.fail("trailing characters after interval");
  return result;
}

}  // namespace mitlq
