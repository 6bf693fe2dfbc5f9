#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grammalc/alphabet.hpp"
#include "grammalc/error.hpp"
#include "grammalc/laurent_poly.hpp"

namespace grammalc {

namespace detail {

inline bool is_letter_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_letter_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Recursive descent over
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | LETTER ('^' SIGNED_INT)? | '(' expr ')' ('^' SIGNED_INT)? | '-' factor
class ExprParser {
 public:
  ExprParser(std::string_view text, AlphabetPtr alphabet)
      : text_(text), alphabet_(std::move(alphabet)) {}

  LaurentPoly parse() {
    LaurentPoly value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    Integer e = integer_literal();
    if (e > 1000000) {
      pos_ = start;
      fail("exponent out of range");
    }
    const int value = static_cast<int>(e);
    return negative ? -value : value;
  }

  LaurentPoly factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) {
        const std::size_t at = pos_;
        const int e = exponent();
        if (e >= 0) return pow(inner, static_cast<unsigned>(e));
        if (inner.term_count() != 1) {
          pos_ = at;
          fail("negative power of a non-monomial");
        }
        const auto& [m, coeff] = *inner.terms().begin();
        if (coeff != 1 && coeff != -1) {
          pos_ = at;
          fail("negative power of a non-unit coefficient");
        }
        Integer sign = (coeff == -1 && (-e) % 2 != 0) ? -1 : 1;
        return LaurentPoly::term(alphabet_, m.power(e), sign);
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LaurentPoly::constant(alphabet_, integer_literal());
    }
    if (is_letter_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_letter_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = alphabet_->find(name);
      if (!index) {
        pos_ = start;
        throw UnknownLetter("unknown letter '" + std::string(name) + "' at position " +
                            std::to_string(start));
      }
      int e = 1;
      if (accept('^')) e = exponent();
      return LaurentPoly::term(alphabet_, Monomial(alphabet_->size()).with(*index, e));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  AlphabetPtr alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` over `alphabet`. Throws ParseError or UnknownLetter.
inline LaurentPoly parse_expr(std::string_view text, const AlphabetPtr& alphabet) {
  return detail::ExprParser(text, alphabet).parse();
}

/// Letter names in order of first appearance in `text` (identifier scan only).
inline std::vector<std::string> scan_letters(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (detail::is_letter_start(text[i])) {
      const std::size_t start = i;
      while (i < text.size() && detail::is_letter_char(text[i])) ++i;
      std::string name(text.substr(start, i - start));
      bool seen = false;
      for (const auto& n : names) seen = seen || n == name;
      if (!seen) names.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return names;
}

}  // namespace grammalc
