#pragma once

// Recursive-descent parser shared by polynomial and series text.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | identifier | '(' expr ')'
//
// The Algebra parameter supplies the value type and its operations:
//   Value number(const Integer&)
//   Value variable(std::string_view name, std::size_t pos)
//   Value add/sub/mul/div(const Value&, const Value&)
//   Value pow(const Value&, unsigned)
//   Value neg(const Value&)

#include <cctype>
#include <string>
#include <string_view>

#include "giq/errors.hpp"
#include "giq/rational.hpp"

namespace giq::detail {

template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(std::string_view text, Algebra& algebra)
      : text_(text), algebra_(algebra) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse error at column " + std::to_string(pos_ + 1) +
                     ": " + what + " in '" + std::string(text_) + "'");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = algebra_.add(v, term());
      } else if (accept('-')) {
        v = algebra_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = algebra_.mul(v, unary());
      } else if (accept('/')) {
        std::size_t at = pos_;
        Value d = unary();
        try {
          v = algebra_.div(v, d);
        } catch (const InputError& e) {
          pos_ = at;
          fail(e.what());
        }
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return algebra_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 6) fail("exponent too large");
      unsigned k = static_cast<unsigned>(
          std::stoul(std::string(text_.substr(start, pos_ - start))));
      return algebra_.pow(base, k);
    }
    return base;
  }

  Value atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return algebra_.number(
          Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      try {
        return algebra_.variable(name, start);
      } catch (const InputError& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Algebra& algebra_;
  std::size_t pos_ = 0;
};

}  // namespace giq::detail
