#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace btkit {

// Element of the rational function field Q(s), where s stands for the square
// root of the Hecke parameter u. The parameter u itself is never a separate
// variable: it is s^2.
//
// Canonical form: numerator and denominator are coprime and the denominator
// is monic, so two scalars are equal iff their stored forms are identical.
class Scalar {
 public:
  Scalar() : den_(mpq_class(1)) {}
  Scalar(long v) : num_(mpq_class(v)), den_(mpq_class(1)) {}  // NOLINT
  explicit Scalar(const Rational& q) : num_(q.value()), den_(mpq_class(1)) {}
  explicit Scalar(QPoly p) : num_(std::move(p)), den_(mpq_class(1)) {}

  // num / den, reduced to canonical form.
  Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  // The primitive variable sqrt(u).
  static Scalar s() { return Scalar(QPoly::monomial(mpq_class(1), 1)); }
  static Scalar u() { return Scalar(QPoly::monomial(mpq_class(1), 2)); }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_sign();
    return r;
  }

  Scalar& operator+=(const Scalar& o) { return *this = add(*this, o, false); }
  Scalar& operator-=(const Scalar& o) { return *this = add(*this, o, true); }
  Scalar& operator*=(const Scalar& o) { return *this = mul(*this, o); }
  Scalar& operator/=(const Scalar& o) { return *this = mul(*this, o.inverse()); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b, false); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, b, true); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return mul(a, b.inverse()); }
  friend Scalar operator-(const Scalar& a) {
    Scalar r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Substitutes s = point. Throws PoleError if the denominator vanishes.
  Rational evaluate(const Rational& point) const {
    mpq_class d = den_.evaluate(point.value());
    if (sgn(d) == 0) throw PoleError("denominator vanishes at s = " + point.to_string());
    return Rational(mpq_class(num_.evaluate(point.value()) / d));
  }

  // Integer-coefficient form: value = N / D with N, D in Z[s], the integer
  // contents of N and D coprime and D with positive leading coefficient.
  std::pair<std::vector<mpz_class>, std::vector<mpz_class>> integer_form() const {
    mpz_class l = 1;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& q : p->coeffs()) {
        if (sgn(q) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      }
    }
    auto scale = [&l](const QPoly& p) {
      std::vector<mpz_class> out;
      out.reserve(p.size());
      for (const auto& q : p.coeffs()) out.emplace_back(mpq_class(q * l).get_num());
      return out;
    };
    auto n = scale(num_);
    auto d = scale(den_);
    mpz_class g = 0;
    for (const auto* v : {&n, &d}) {
      for (const auto& z : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    }
    if (g > 1) {
      for (auto* v : {&n, &d}) {
        for (auto& z : *v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
      }
    }
    return {std::move(n), std::move(d)};
  }

  // Renders with u = s^2 folded back in, e.g. "(-u+1)/(u+1)" or "2us+3".
  std::string to_string() const {
    auto [n, d] = integer_form();
    std::size_t n_terms = 0;
    std::size_t d_terms = 0;
    for (const auto& z : n) n_terms += sgn(z) != 0;
    for (const auto& z : d) d_terms += sgn(z) != 0;
    std::string ns = render_integer_poly(n);
    if (d.size() == 1 && d[0] == 1) return ns;
    std::string ds = render_integer_poly(d);
    if (n_terms > 1) ns = "(" + ns + ")";
    if (d.size() > 1 || d_terms > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
  }

  // Renders a single monomial c * s^k; `coefficient` may be empty when the
  // coefficient is +-1 and the monomial is non-constant.
  static std::string render_monomial(const mpz_class& c, std::size_t k) {
    std::string out;
    mpz_class a = abs(c);
    if (k == 0 || a != 1) out += a.get_str();
    if (k >= 2) {
      out += "u";
      if (k / 2 > 1) out += "^" + std::to_string(k / 2);
    }
    if (k % 2 == 1) out += "s";
    return out;
  }

  static std::string render_integer_poly(const std::vector<mpz_class>& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
      if (sgn(p[k]) == 0) continue;
      if (sgn(p[k]) < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      out += render_monomial(p[k], k);
    }
    return out;
  }

 private:
  static Scalar add(const Scalar& a, const Scalar& b, bool subtract) {
    Scalar r;
    if (a.den_ == b.den_) {
      r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      r.den_ = a.den_;
      if (!r.den_.is_one()) r.normalize();
      return r;
    }
    QPoly g = QPoly::gcd(a.den_, b.den_);
    QPoly ad = QPoly::exact_div(a.den_, g);
    QPoly bd = QPoly::exact_div(b.den_, g);
    QPoly bn = b.num_ * ad;
    r.num_ = a.num_ * bd;
    if (subtract) {
      r.num_ -= bn;
    } else {
      r.num_ += bn;
    }
    r.den_ = a.den_ * bd;
    r.normalize();
    return r;
  }

  static Scalar mul(const Scalar& a, const Scalar& b) {
    Scalar r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.den_.is_one() && b.den_.is_one()) {
      r.num_ = a.num_ * b.num_;
      return r;
    }
    QPoly g1 = QPoly::gcd(a.num_, b.den_);
    QPoly g2 = QPoly::gcd(b.num_, a.den_);
    r.num_ = QPoly::exact_div(a.num_, g1) * QPoly::exact_div(b.num_, g2);
    r.den_ = QPoly::exact_div(a.den_, g2) * QPoly::exact_div(b.den_, g1);
    r.fix_sign();
    return r;
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = QPoly(mpq_class(1));
      return;
    }
    if (!den_.is_constant()) {
      QPoly g = QPoly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = QPoly::exact_div(num_, g);
        den_ = QPoly::exact_div(den_, g);
      }
    }
    fix_sign();
  }

  // Makes the denominator monic.
  void fix_sign() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = QPoly(mpq_class(1));
      return;
    }
    if (den_.lead() != 1) {
      mpq_class f = 1 / den_.lead();
      num_ *= f;
      den_ *= f;
    }
  }

  QPoly num_;
  QPoly den_;
};

}  // namespace btkit
