#pragma once

// Shared scanner for the interval, queue and formula text syntaxes.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "mitlq/error.hpp"
#include "mitlq/interval.hpp"

namespace mitlq::detail {

class TextCursor {
 public:
  explicit TextCursor(std::string_view text, std::size_t base_offset = 0)
      : text_(text), base_(base_offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }

  /// Run of characters that may form a rational or `inf`.
  std::string_view number_token() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == '+' || c == '-') {
        ++pos_;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, offset()); }

  std::size_t offset() const { return base_ + pos_; }
  std::size_t pos() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }
  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

/// Reads one interval literal at the cursor.
Interval read_interval(TextCursor& cursor);

}  // namespace mitlq::detail
