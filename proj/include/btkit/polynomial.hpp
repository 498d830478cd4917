#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"

namespace btkit {

// Dense univariate polynomial with rational coefficients, stored low degree
// first. The zero polynomial has no coefficients; the top coefficient of a
// nonzero polynomial is never zero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(mpq_class c) {
    if (sgn(c) != 0) c_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly monomial(mpq_class c, std::size_t degree) {
    if (sgn(c) == 0) return {};
    std::vector<mpq_class> v(degree + 1);
    v[degree] = std::move(c);
    return QPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }

  std::size_t term_count() const {
    return static_cast<std::size_t>(
        std::count_if(c_.begin(), c_.end(), [](const mpq_class& q) { return sgn(q) != 0; }));
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  QPoly& operator*=(const mpq_class& s) {
    if (sgn(s) == 0) {
      c_.clear();
    } else {
      for (auto& q : c_) q *= s;
    }
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) {
    for (auto& q : a.c_) q = -q;
    return a;
  }
  friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b * a.c_[0];
    if (b.c_.size() == 1) return a * b.c_[0];
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
    mpq_class t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
        r[i + j] += t;
      }
    }
    return QPoly(std::move(r));
  }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPoly(), std::move(a)};
    std::vector<mpq_class> q(a.c_.size() - b.c_.size() + 1);
    const mpq_class inv_lead = 1 / b.lead();
    mpq_class t;
    while (!a.is_zero() && a.degree() >= b.degree()) {
      const std::size_t shift = a.c_.size() - b.c_.size();
      mpq_class f = a.lead() * inv_lead;
      for (std::size_t k = 0; k < b.c_.size(); ++k) {
        mpq_mul(t.get_mpq_t(), f.get_mpq_t(), b.c_[k].get_mpq_t());
        a.c_[shift + k] -= t;
      }
      q[shift] = std::move(f);
      a.trim();
    }
    return {QPoly(std::move(q)), std::move(a)};
  }

  // Exact division; the caller guarantees b divides a.
  static QPoly exact_div(const QPoly& a, const QPoly& b) {
    if (b.c_.size() == 1) return a * (1 / b.c_[0]);
    return divmod(a, b).first;
  }

  QPoly monic() const {
    if (is_zero() || lead() == 1) return *this;
    return *this * (1 / lead());
  }

  // Monic greatest common divisor; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.c_.size() == 1 || b.c_.size() == 1) return QPoly(mpq_class(1));
    while (!b.is_zero()) {
      QPoly r = divmod(std::move(a), b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  mpq_class evaluate(const mpq_class& x) const {
    mpq_class r;
    for (std::size_t k = c_.size(); k-- > 0;) {
      r *= x;
      r += c_[k];
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<mpq_class> c_;
};

}  // namespace btkit
