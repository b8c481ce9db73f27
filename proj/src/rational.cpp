#include "mitlq/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "mitlq/error.hpp"

namespace mitlq {

Endpoint::Endpoint(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {
  value_.canonicalize();
}

const Rational& Endpoint::value() const {
  if (!is_finite()) throw std::logic_error("value() of an infinite endpoint");
  return value_;
}

std::string Endpoint::to_string() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    case Kind::Finite:
      break;
  }
  return format_rational(value_);
}

std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Endpoint operator-(const Endpoint& a, const Endpoint& b) {
  if (a.is_finite() && b.is_finite()) return Endpoint(Rational(a.value_ - b.value_));
  if (!a.is_finite() && !b.is_finite() && a.kind_ == b.kind_) {
    throw std::domain_error("inf - inf is undefined");
  }
  if (a.is_pos_inf() || b.is_neg_inf()) return Endpoint::pos_inf();
  return Endpoint::neg_inf();
}

Endpoint operator+(const Endpoint& a, const Endpoint& b) {
  if (a.is_finite() && b.is_finite()) return Endpoint(Rational(a.value_ + b.value_));
  if (!a.is_finite() && !b.is_finite() && a.kind_ != b.kind_) {
    throw std::domain_error("inf - inf is undefined");
  }
  return a.is_finite() ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Endpoint& e) { return os << e.to_string(); }

std::string format_rational(const Rational& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    result = Rational(w * scale + mpz_class(std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

Endpoint parse_endpoint(std::string_view text) {
  if (text == "inf" || text == "+inf") return Endpoint::pos_inf();
  return Endpoint(parse_rational(text));
}

}  // namespace mitlq
