#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "error.hpp"
#include "field.hpp"
#include "parse.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "sparse.hpp"
#include "words.hpp"

namespace btkit {

// The basis vector E_I T_w.
struct BasisElement {
  SetPartition I;
  Permutation w;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;

  std::string to_string() const { return "E" + I.to_string() + "T" + w.to_string(); }
};

// Finite linear combination of basis elements E_I T_w. Terms are kept sorted
// by (partition rgs, permutation one-line) and zero coefficients are dropped.
template <Field F>
class AlgebraElement {
 public:
  explicit AlgebraElement(int n = 1) : n_(n) {}

  int n() const { return n_; }
  const std::map<BasisElement, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  F coeff(const BasisElement& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? F() : it->second;
  }

  void add(const BasisElement& b, const F& c) {
    if (b.I.n() != n_) throw DimensionMismatch("basis element of wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check(o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  friend AlgebraElement operator*(const F& c, const AlgebraElement& a) {
    AlgebraElement r(a.n_);
    if (c.is_zero()) return r;
    for (const auto& [b, x] : a.terms_) r.terms_.emplace(b, c * x);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // "E{{1,2},{3}}T[1,2,3] + (u-1)·E{{1},{2},{3}}T[2,1,3]"; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string cs = c.to_string();
      if (cs != "1") s += "(" + cs + ")·";
      s += b.to_string();
    }
    return s;
  }

 private:
  void check(const AlgebraElement& o) const {
    if (o.n_ != n_) throw DimensionMismatch("algebra elements of different degree");
  }

  int n_;
  std::map<BasisElement, F> terms_;
};

// The algebra of braids and ties E_n as a free module on {E_I T_w}.
//
// Every product is computed by right multiplication with generators, which
// keeps intermediates in normal form:
//   E_I T_w * E_i = E_{I * w(p_i)} T_w
//   E_I T_w * T_i = E_I T_{w s_i}                                if l(w s_i) > l(w)
//                 = E_I T_v + (u-1) E_{I*v(p_i)} T_v + (u-1) E_{I*v(p_i)} T_w
//                                                      otherwise, v = w s_i.
template <Field F>
class BtAlgebra {
 public:
  using Element = AlgebraElement<F>;

  explicit BtAlgebra(int n, FieldContext<F> ctx = {}) : n_(n), ctx_(std::move(ctx)) {
    check_degree(n);
    partitions_ = SetPartition::enumerate(n);
    permutations_ = Permutation::enumerate(n);
    for (std::size_t k = 0; k < partitions_.size(); ++k) partition_index_.emplace(partitions_[k], k);
    for (const auto& p : permutations_) words_.push_back(p.reduced_word());
    for (int i = 1; i < n; ++i) generators_.push_back(SetPartition::generator(i, n));
    u_ = ctx_.sqrt_u() * ctx_.sqrt_u();
    u_minus_1_ = u_ - F(1);
    u_inv_minus_1_ = u_.inverse() - F(1);
  }

  int n() const { return n_; }
  const FieldContext<F>& context() const { return ctx_; }
  const F& u() const { return u_; }

  const std::vector<SetPartition>& partitions() const { return partitions_; }
  const std::vector<Permutation>& permutations() const { return permutations_; }

  // b_n * n!
  std::size_t dimension() const { return partitions_.size() * permutations_.size(); }

  std::size_t index(const BasisElement& b) const {
    return partition_index_.at(b.I) * permutations_.size() + b.w.rank();
  }

  BasisElement basis(std::size_t idx) const {
    return {partitions_[idx / permutations_.size()], permutations_[idx % permutations_.size()]};
  }

  std::vector<BasisElement> basis() const {
    std::vector<BasisElement> out;
    out.reserve(dimension());
    for (std::size_t k = 0; k < dimension(); ++k) out.push_back(basis(k));
    return out;
  }

  SparseVector<F> coordinates(const Element& a) const {
    check(a);
    std::vector<typename SparseVector<F>::Entry> entries;
    entries.reserve(a.size());
    for (const auto& [b, c] : a.terms()) entries.emplace_back(index(b), c);
    return SparseVector<F>::from_entries(std::move(entries));
  }

  Element from_coordinates(const SparseVector<F>& v) const {
    Element r(n_);
    for (const auto& [idx, c] : v.entries()) r.add(basis(idx), c);
    return r;
  }

  // ---- named elements --------------------------------------------------

  Element basis_element(const BasisElement& b, const F& c = F(1)) const {
    Element r(n_);
    r.add(b, c);
    return r;
  }

  Element scalar(const F& c) const { return basis_element(identity_basis(), c); }
  Element one() const { return scalar(F(1)); }

  BasisElement identity_basis() const {
    return {SetPartition::unit(n_), Permutation::identity(n_)};
  }

  Element T(int i) const {
    check_index(i);
    return basis_element({SetPartition::unit(n_), Permutation::simple(i, n_)});
  }

  Element E(int i) const {
    check_index(i);
    return basis_element({generators_[i - 1], Permutation::identity(n_)});
  }

  // T_i + (u^{-1} - 1) E_i (1 + T_i).
  Element T_inverse(int i) const {
    check_index(i);
    return right_Tinv(one(), i);
  }

  Element T_of(const Permutation& w) const {
    return basis_element({SetPartition::unit(n_), w});
  }

  // The single basis term (block {i, j}, identity).
  Element E_arc(int i, int j) const {
    return basis_element({SetPartition::arc(i, j, n_), Permutation::identity(n_)});
  }

  Element E_of_partition(const SetPartition& p) const {
    if (p.n() != n_) throw DimensionMismatch("partition of wrong degree");
    return basis_element({p, Permutation::identity(n_)});
  }

  Element gamma() const { return eval(words::gamma(n_)); }
  Element gamma_inverse() const { return eval(words::gamma_inverse(n_)); }

  Element steinberg(int i, int j) const {
    check_index(i);
    check_index(j);
    return eval(words::steinberg(i, j));
  }

  Element F_gen(int i) const {
    check_index(i);
    return eval(words::F(i));
  }

  Element L_gen(int i) const {
    check_index(i);
    return eval(words::L(i));
  }

  // ---- multiplication ---------------------------------------------------

  Element mul_basis_by_T(const BasisElement& b, int i) const {
    check_index(i);
    Element r(n_);
    add_times_T(r, b, F(1), i);
    return r;
  }

  Element mul_basis_by_E(const BasisElement& b, int i) const {
    check_index(i);
    Element r(n_);
    r.add({join(b.I, apply(b.w, generators_[i - 1])), b.w}, F(1));
    return r;
  }

  Element right_T(const Element& a, int i) const {
    check(a);
    check_index(i);
    Element r(n_);
    for (const auto& [b, c] : a.terms()) add_times_T(r, b, c, i);
    return r;
  }

  Element right_E(const Element& a, int i) const {
    check(a);
    check_index(i);
    Element r(n_);
    for (const auto& [b, c] : a.terms()) {
      r.add({join(b.I, apply(b.w, generators_[i - 1])), b.w}, c);
    }
    return r;
  }

  Element right_Tinv(const Element& a, int i) const {
    Element ae = right_E(a, i);
    Element r = right_T(a, i);
    r += u_inv_minus_1_ * (ae + right_T(ae, i));
    return r;
  }

  Element right_letter(const Element& a, const Letter& l) const {
    switch (l.gen) {
      case Gen::T:
        return right_T(a, l.index);
      case Gen::E:
        return right_E(a, l.index);
      case Gen::Tinv:
        return right_Tinv(a, l.index);
    }
    return a;
  }

  // (E_I T_w)(E_J T_v) = E_{I * wJ} T_w T_v, then right multiplication along
  // the reduced word of v.
  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r(n_);
    for (const auto& [bb, cb] : b.terms()) {
      Element x(n_);
      for (const auto& [ba, ca] : a.terms()) x.add({join(ba.I, apply(ba.w, bb.I)), ba.w}, ca * cb);
      for (int i : words_[bb.w.rank()]) x = right_T(x, i);
      r += x;
    }
    return r;
  }

  Element mul(const Element& a, const Element& b, const Element& c) const {
    return mul(mul(a, b), c);
  }

  // Evaluates a formal word expression in this algebra.
  Element eval(const WordExpr& e) const {
    if (e.max_index() >= n_) throw IndexError("word uses a generator outside E_" + std::to_string(n_));
    Element r(n_);
    for (const auto& [word, c] : e.terms()) {
      Element x = scalar(ctx_.lift(c));
      for (const auto& l : word) x = right_letter(x, l);
      r += x;
    }
    return r;
  }

  // E_{n-1} -> E_n: (I, w) |-> (I + {n}, w fixing n).
  Element embed(const AlgebraElement<F>& smaller) const {
    if (smaller.n() != n_ - 1) throw DimensionMismatch("embedding needs an element of E_{n-1}");
    Element r(n_);
    for (const auto& [b, c] : smaller.terms()) r.add(embed(b), c);
    return r;
  }

  BasisElement embed(const BasisElement& b) const {
    auto images = b.w.one_line();
    images.push_back(n_);
    return {b.I.extended(), Permutation::from_one_line(images)};
  }

 private:
  void check(const Element& a) const {
    if (a.n() != n_) throw DimensionMismatch("element of E_" + std::to_string(a.n()) + " used in E_" +
                                             std::to_string(n_));
  }

  void check_index(int i) const {
    if (i < 1 || i >= n_) {
      throw IndexError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
    }
  }

  void add_times_T(Element& out, const BasisElement& b, const F& c, int i) const {
    Permutation ws = b.w.times_simple(i);
    if (!b.w.has_right_descent(i)) {
      out.add({b.I, ws}, c);
      return;
    }
    // w = v s_i with v = w s_i.
    SetPartition tied = join(b.I, apply(ws, generators_[i - 1]));
    F cu = c * u_minus_1_;
    out.add({b.I, ws}, c);
    out.add({tied, ws}, cu);
    out.add({tied, b.w}, cu);
  }

  int n_;
  FieldContext<F> ctx_;
  std::vector<SetPartition> partitions_;
  std::vector<Permutation> permutations_;
  std::map<SetPartition, std::size_t> partition_index_;
  std::vector<std::vector<int>> words_;
  std::vector<SetPartition> generators_;
  F u_;
  F u_minus_1_;
  F u_inv_minus_1_;
};

// Parses the text produced by AlgebraElement<Scalar>::to_string.
inline AlgebraElement<Scalar> parse_element(const std::string& text, int n) {
  AlgebraElement<Scalar> r(n);
  if (text == "0") return r;
  const std::string dot = "·";
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t sep = text.find(" + ", pos);
    std::string term = text.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
    Scalar c(1);
    std::size_t e = term.rfind("E{");
    if (e == std::string::npos) throw ParseError("term without E{...}: '" + term + "'");
    if (e > 0) {
      std::string coef = term.substr(0, e);
      if (coef.size() >= dot.size() && coef.compare(coef.size() - dot.size(), dot.size(), dot) == 0) {
        coef.erase(coef.size() - dot.size());
      } else if (!coef.empty() && coef.back() == '*') {
        coef.pop_back();
      } else {
        throw ParseError("expected '·' between coefficient and basis element in '" + term + "'");
      }
      c = parse_scalar(coef);
    }
    std::size_t t = term.find("}T[", e);
    if (t == std::string::npos) throw ParseError("term without T[...]: '" + term + "'");
    SetPartition I = SetPartition::parse(term.substr(e + 1, t + 1 - (e + 1)));
    Permutation w = Permutation::parse(term.substr(t + 2));
    if (I.n() != n || w.n() != n) throw DimensionMismatch("term of wrong degree: '" + term + "'");
    r.add({I, w}, c);
    if (sep == std::string::npos) break;
    pos = sep + 3;
  }
  return r;
}

}  // namespace btkit
