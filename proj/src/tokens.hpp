#pragma once

// Whitespace tokenizer shared by the text format parsers.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "ternary/error.hpp"

namespace ternary::detail {

class Tokens {
 public:
  Tokens(std::string_view text, std::string format) : text_(text), format_(std::move(format)) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::string_view next() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view peek() {
    const std::size_t saved = pos_;
    std::string_view tok = at_end() ? std::string_view{} : next();
    pos_ = saved;
    return tok;
  }

  void expect(std::string_view keyword) {
    const auto tok = next();
    if (tok != keyword)
      fail("expected '" + std::string(keyword) + "', found '" + std::string(tok) + "'");
  }

  std::uint64_t number() {
    const auto tok = next();
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size())
      fail("expected a non-negative integer, found '" + std::string(tok) + "'");
    return value;
  }

  void expect_end() {
    if (!at_end()) fail("trailing data after the last entry");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw InputError(format_ + ": " + message);
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::string format_;
  std::size_t pos_ = 0;
};

}  // namespace ternary::detail
