#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

#include "error.hpp"

namespace btkit {

// Exact rational number. This is the coefficient field used when the
// parameter sqrt(u) has been specialized to a rational value.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero();
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p" or "p/q".
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) {
      throw ParseError("not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Rational(std::move(q));
  }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace btkit
