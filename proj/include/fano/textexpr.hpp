#pragma once

// Recursive-descent reader for the small arithmetic grammar shared by all
// text inputs (scalars in w, polynomials, matrix entries):
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (('*'|'/') power | power)*     juxtaposition multiplies
//   power   := primary ('^' integer)?
//   primary := integer | identifier | '(' expr ')'
//
// The value type is supplied by the caller through TextRing.

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fano/error.hpp"

namespace fano {

template <class R>
struct TextRing {
  std::function<R(const mpz_class&)> integer;
  std::function<R(std::string_view)> identifier;
  // Only needs to succeed when the divisor is an invertible constant.
  std::function<R(const R&, const R&)> divide;
  R one;
};

namespace detail {

template <class R>
class ExprReader {
 public:
  ExprReader(std::string_view text, const TextRing<R>& ring) : text_(text), ring_(ring) {}

  R read_all() {
    R value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  std::string_view text_;
  const TextRing<R>& ring_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  R expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    R acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      R rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  R term() {
    R acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        acc = ring_.divide(acc, power());
      } else if (starts_primary(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  R power() {
    R base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    R out = ring_.one;
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  R primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      R inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.integer(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ring_.identifier(text_.substr(start, pos_ - start));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }
};

}  // namespace detail

template <class R>
R read_expression(std::string_view text, const TextRing<R>& ring) {
  return detail::ExprReader<R>(text, ring).read_all();
}

}  // namespace fano
