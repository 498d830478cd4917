#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"
#include "poly_ab.hpp"
#include "scalar.hpp"

namespace btkit {

namespace detail {

// Recursive-descent reader for expressions in u, s (= sqrt u), A, B with
// integers, + - * / ^, parentheses and implicit multiplication.
class ExpressionReader {
 public:
  explicit ExpressionReader(std::string_view text) : text_(text) {}

  PolyAB<Scalar> read_all() {
    PolyAB<Scalar> v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  using Value = PolyAB<Scalar>;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Value expr() {
    Value acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Value t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'u' || c == 's' ||
           c == 'A' || c == 'B';
  }

  Value term() {
    Value acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        Value d = power();
        if (d.total_degree() > 0 || d.is_zero()) {
          if (d.is_zero()) throw DivisionByZero("division by zero in '" + std::string(text_) + "'");
          fail("division by an expression in A or B");
        }
        acc = d.coeff(0, 0).inverse() * acc;
      } else if (starts_primary(c)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Value power() {
    Value base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Value r(Scalar(1));
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Value primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpq_class q(std::string(text_.substr(start, pos_ - start)), 10);
      return Value(Scalar(Rational(q)));
    }
    ++pos_;
    switch (c) {
      case 'u':
        return Value(Scalar::u());
      case 's':
        return Value(Scalar::s());
      case 'A':
        return Value::A();
      case 'B':
        return Value::B();
      default:
        --pos_;
        fail("expected a number, variable or '('");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses text such as "(u+1)A^2+(u+2)AB+B^2".
inline PolyAB<Scalar> parse_poly_ab(std::string_view text) {
  return detail::ExpressionReader(text).read_all();
}

// Parses text such as "(-u+1)/(u+1)"; rejects occurrences of A or B.
inline Scalar parse_scalar(std::string_view text) {
  PolyAB<Scalar> p = parse_poly_ab(text);
  if (p.total_degree() > 0) throw ParseError("scalar contains A or B: '" + std::string(text) + "'");
  return p.coeff(0, 0);
}

}  // namespace btkit
