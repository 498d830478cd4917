#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "scalar.hpp"

namespace btkit {

// Polynomial in the trace parameters A and B with coefficients in a field F
// (Q(s) symbolically, or Q at a specialization of s). Trace values are always
// polynomial in A and B, so no fractions in A, B are needed.
template <class F>
class PolyAB {
 public:
  // Exponents of A and B.
  struct Monomial {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
  };

  PolyAB() = default;
  PolyAB(F c) { add_term({0, 0}, c); }  // NOLINT(google-explicit-constructor)

  static PolyAB monomial(F c, int a, int b) {
    PolyAB p;
    p.add_term({a, b}, std::move(c));
    return p;
  }
  static PolyAB A() { return monomial(F(1), 1, 0); }
  static PolyAB B() { return monomial(F(1), 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, F>& terms() const { return terms_; }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a + m.b);
    return d;
  }

  F coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? F() : it->second;
  }

  void add_term(Monomial m, const F& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolyAB& operator+=(const PolyAB& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  PolyAB& operator-=(const PolyAB& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend PolyAB operator+(PolyAB a, const PolyAB& b) { return a += b; }
  friend PolyAB operator-(PolyAB a, const PolyAB& b) { return a -= b; }
  friend PolyAB operator-(const PolyAB& a) { return PolyAB() - a; }

  friend PolyAB operator*(const PolyAB& p, const PolyAB& q) {
    PolyAB r;
    for (const auto& [m1, c1] : p.terms_) {
      for (const auto& [m2, c2] : q.terms_) r.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
    }
    return r;
  }
  friend PolyAB operator*(const F& c, const PolyAB& p) {
    PolyAB r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : p.terms_) r.terms_.emplace(m, c * x);
    return r;
  }

  friend bool operator==(const PolyAB& p, const PolyAB& q) { return p.terms_ == q.terms_; }

  // Substitutes A = ratio * B, leaving a polynomial in B alone.
  PolyAB substitute_A(const F& ratio) const {
    PolyAB r;
    for (const auto& [m, c] : terms_) {
      F f = c;
      for (int k = 0; k < m.a; ++k) f = f * ratio;
      r.add_term({0, m.a + m.b}, f);
    }
    return r;
  }

  F evaluate(const F& a, const F& b) const {
    F r;
    for (const auto& [m, c] : terms_) {
      F t = c;
      for (int k = 0; k < m.a; ++k) t = t * a;
      for (int k = 0; k < m.b; ++k) t = t * b;
      r += t;
    }
    return r;
  }

  // Descending graded order with A before B, e.g. "(u+1)A^2+(u+2)AB+B^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    std::vector<std::pair<Monomial, const F*>> order;
    for (const auto& [m, c] : terms_) order.emplace_back(m, &c);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      int dx = x.first.a + x.first.b;
      int dy = y.first.a + y.first.b;
      if (dx != dy) return dx > dy;
      return x.first.a > y.first.a;
    });
    for (const auto& [m, cp] : order) {
      std::string mono;
      if (m.a > 0) mono += m.a == 1 ? "A" : "A^" + std::to_string(m.a);
      if (m.b > 0) mono += m.b == 1 ? "B" : "B^" + std::to_string(m.b);
      std::string c = cp->to_string();
      bool compound = c.find_first_of("+/", 0) != std::string::npos ||
                      c.find('-', 1) != std::string::npos;
      std::string term;
      if (mono.empty()) {
        term = compound && !out.empty() ? "(" + c + ")" : c;
      } else if (c == "1") {
        term = mono;
      } else if (c == "-1") {
        term = "-" + mono;
      } else if (compound) {
        term = "(" + c + ")" + mono;
      } else {
        term = c + mono;
      }
      if (!out.empty() && term[0] != '-') out += "+";
      out += term;
    }
    return out;
  }

 private:
  std::map<Monomial, F> terms_;
};

}  // namespace btkit
