#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "parallel.hpp"
#include "relations.hpp"
#include "sparse.hpp"

namespace btkit {

// Basis vector v_{i_1}^{r_1} (x) ... (x) v_{i_n}^{r_n}, 1-based indices.
struct TensorFactor {
  int lower;
  int upper;
  friend bool operator==(const TensorFactor&, const TensorFactor&) = default;
};

// The representation of E_n on V^{(x)n}, dim V = n^2. Basis vectors are
// encoded as base-dim V integers with the first factor most significant.
// `lower_range` narrows the lower indices to 1..lower_range, which gives
// dim V = lower_range * n; the default is the full range 1..n.
// Operators are never stored as matrices: every generator moves a basis
// vector to at most two basis vectors, so images are computed on demand.
template <Field F>
class TensorRep {
 public:
  using Vec = SparseVector<F>;
  using Code = std::uint64_t;

  explicit TensorRep(int n, FieldContext<F> ctx = {}, int lower_range = 0)
      : n_(n), lower_(lower_range > 0 ? lower_range : n), ctx_(std::move(ctx)) {
    check_degree(n);
    if (lower_ > n) throw IndexError("lower index range exceeds n");
    base_ = static_cast<Code>(lower_) * static_cast<Code>(n);
    space_dim_ = 1;
    for (int k = 0; k < n; ++k) space_dim_ *= base_;
    s_ = ctx_.sqrt_u();
    u_ = s_ * s_;
    u_minus_1_ = u_ - F(1);
    u_inv_minus_1_ = u_.inverse() - F(1);
  }

  int n() const { return n_; }
  int lower_range() const { return lower_; }
  Code space_dimension() const { return space_dim_; }
  const FieldContext<F>& context() const { return ctx_; }

  Code encode(const std::vector<TensorFactor>& factors) const {
    if (static_cast<int>(factors.size()) != n_) throw DimensionMismatch("tensor index of wrong length");
    Code c = 0;
    for (const auto& f : factors) {
      if (f.lower < 1 || f.lower > lower_ || f.upper < 1 || f.upper > n_) throw IndexError("tensor index out of range");
      c = c * base_ + static_cast<Code>((f.lower - 1) * n_ + (f.upper - 1));
    }
    return c;
  }

  std::vector<TensorFactor> decode(Code c) const {
    std::vector<TensorFactor> out(static_cast<std::size_t>(n_));
    for (int k = n_ - 1; k >= 0; --k) {
      int d = static_cast<int>(c % base_);
      c /= base_;
      out[static_cast<std::size_t>(k)] = {d / n_ + 1, d % n_ + 1};
    }
    return out;
  }

  Vec basis_vector(const std::vector<TensorFactor>& factors) const {
    return Vec::from_entries({{encode(factors), F(1)}});
  }

  std::string render(Code c) const {
    std::string s;
    for (const auto& f : decode(c)) {
      if (!s.empty()) s += "(x)";
      s += "v" + std::to_string(f.lower) + "^" + std::to_string(f.upper);
    }
    return s;
  }

  // ---- generator actions -----------------------------------------------

  Vec act_E(int i, const Vec& x) const {
    check_index(i);
    std::vector<typename Vec::Entry> out;
    for (const auto& [c, a] : x.entries()) {
      auto [da, db] = pair_at(c, i);
      if (da % n_ == db % n_) out.emplace_back(c, a);
    }
    return Vec::from_entries(std::move(out));
  }

  Vec act_T(int i, const Vec& x) const {
    check_index(i);
    std::vector<typename Vec::Entry> out;
    out.reserve(2 * x.nnz());
    for (const auto& [c, a] : x.entries()) add_T(out, c, a, i);
    return Vec::from_entries(std::move(out));
  }

  // T^{-1} = T + (u^{-1} - 1) E (1 + T).
  Vec act_Tinv(int i, const Vec& x) const {
    Vec t = act_T(i, x);
    Vec e = x;
    e.axpy(F(1), t);
    e = act_E(i, e);
    t.axpy(u_inv_minus_1_, e);
    return t;
  }

  Vec act_letter(const Letter& l, const Vec& x) const {
    switch (l.gen) {
      case Gen::T:
        return act_T(l.index, x);
      case Gen::E:
        return act_E(l.index, x);
      case Gen::Tinv:
        return act_Tinv(l.index, x);
    }
    return x;
  }

  // Words act with their rightmost letter first.
  Vec apply(const WordExpr& e, const Vec& x) const {
    if (e.max_index() >= n_) throw IndexError("word uses a generator outside E_" + std::to_string(n_));
    Vec r;
    for (const auto& [word, c] : e.terms()) {
      Vec y = x;
      for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it) y = act_letter(*it, y);
      r.axpy(ctx_.lift(c), y);
    }
    return r;
  }

  // E_I T_w acts as E_I after T_w, with E_I written through arcs and T_w
  // through the canonical reduced word.
  Vec apply(const BasisElement& b, const Vec& x) const {
    Vec y = x;
    auto word = b.w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it) y = act_T(*it, y);
    return apply(words::E_partition(b.I), y);
  }

  Vec apply(const AlgebraElement<F>& a, const Vec& x) const {
    if (a.n() != n_) throw DimensionMismatch("element and representation of different degree");
    Vec r;
    for (const auto& [b, c] : a.terms()) r.axpy(c, apply(b, x));
    return r;
  }

  // ---- test inputs -------------------------------------------------------

  std::vector<Code> all_inputs() const {
    std::vector<Code> out(static_cast<std::size_t>(space_dim_));
    for (Code c = 0; c < space_dim_; ++c) out[static_cast<std::size_t>(c)] = c;
    return out;
  }

  // Basis vectors whose lower indices use exactly the values 1..k for some k
  // and whose upper indices form a restricted-growth string. The generators
  // see lower indices only through their order and upper indices only
  // through equality, so every operator in the image commutes with the
  // corresponding relabelings, and is determined by its values here.
  std::vector<Code> canonical_inputs() const {
    std::vector<Code> out;
    std::vector<std::vector<int>> lowers;
    std::vector<int> seq(static_cast<std::size_t>(n_), 1);
    const int top = std::min(n_, lower_);
    for (;;) {
      int mx = 0;
      std::vector<bool> used(static_cast<std::size_t>(n_ + 1), false);
      for (int v : seq) {
        mx = std::max(mx, v);
        used[static_cast<std::size_t>(v)] = true;
      }
      bool packed = true;
      for (int v = 1; v <= mx; ++v) packed = packed && used[static_cast<std::size_t>(v)];
      if (packed) lowers.push_back(seq);
      int k = n_ - 1;
      while (k >= 0 && seq[static_cast<std::size_t>(k)] == top) seq[static_cast<std::size_t>(k--)] = 1;
      if (k < 0) break;
      ++seq[static_cast<std::size_t>(k)];
    }
    for (const auto& lower : lowers) {
      for (const auto& p : SetPartition::enumerate(n_)) {
        std::vector<TensorFactor> f;
        for (int k = 0; k < n_; ++k) f.push_back({lower[static_cast<std::size_t>(k)], p.label(k + 1) + 1});
        out.push_back(encode(f));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  template <class Op>
  std::vector<Vec> images(const Op& op, const std::vector<Code>& inputs) const {
    std::vector<Vec> out;
    out.reserve(inputs.size());
    for (Code c : inputs) out.push_back(apply(op, Vec::from_entries({{c, F(1)}})));
    return out;
  }

  // All images laid end to end as one coordinate vector.
  SparseVector<F> flatten(const std::vector<Vec>& imgs) const {
    std::vector<typename Vec::Entry> entries;
    for (std::size_t k = 0; k < imgs.size(); ++k) {
      for (const auto& [c, a] : imgs[k].entries()) entries.emplace_back(k * space_dim_ + c, a);
    }
    return SparseVector<F>::from_entries(std::move(entries));
  }

  // (row, col, value) for every nonzero matrix entry on the given inputs.
  template <class Op>
  std::vector<std::tuple<Code, Code, F>> triplets(const Op& op, const std::vector<Code>& inputs) const {
    std::vector<std::tuple<Code, Code, F>> out;
    for (Code c : inputs) {
      const Vec img = apply(op, Vec::from_entries({{c, F(1)}}));
      for (const auto& [r, a] : img.entries()) out.emplace_back(r, c, a);
    }
    return out;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i >= n_) throw IndexError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
  }

  Code weight(int factor) const {
    Code w = 1;
    for (int k = factor; k < n_; ++k) w *= base_;
    return w;
  }

  // Digits of factors i and i+1.
  std::pair<int, int> pair_at(Code c, int i) const {
    Code wa = weight(i);
    Code wb = wa / base_;
    return {static_cast<int>((c / wa) % base_), static_cast<int>((c / wb) % base_)};
  }

  void add_T(std::vector<typename Vec::Entry>& out, Code c, const F& a, int i) const {
    auto [da, db] = pair_at(c, i);
    Code wa = weight(i);
    Code wb = wa / base_;
    Code swapped = c - static_cast<Code>(da) * wa - static_cast<Code>(db) * wb + static_cast<Code>(db) * wa +
                   static_cast<Code>(da) * wb;
    int la = da / n_, ra = da % n_;
    int lb = db / n_, rb = db % n_;
    if (ra != rb) {
      out.emplace_back(swapped, -a);
    } else if (la == lb) {
      out.emplace_back(c, -a);
    } else if (la < lb) {
      out.emplace_back(c, u_minus_1_ * a);
      out.emplace_back(swapped, s_ * a);
    } else {
      out.emplace_back(swapped, s_ * a);
    }
  }

  int n_;
  int lower_;
  FieldContext<F> ctx_;
  Code base_;
  Code space_dim_;
  F s_;
  F u_;
  F u_minus_1_;
  F u_inv_minus_1_;
};

// Checks identities as operator equalities on the given inputs (canonical
// inputs when `full_space` is false).
template <Field F>
std::vector<IdentityCheck> verify_in_representation(const TensorRep<F>& rep, const std::vector<Identity>& ids,
                                                    bool full_space, unsigned jobs = 1) {
  const auto inputs = full_space ? rep.all_inputs() : rep.canonical_inputs();
  std::vector<IdentityCheck> out(ids.size());
  parallel_for(ids.size(), jobs, [&](std::size_t k) {
    const Identity& id = ids[k];
    std::string detail;
    for (auto c : inputs) {
      auto x = SparseVector<F>::from_entries({{c, F(1)}});
      if (!(rep.apply(id.lhs, x) == rep.apply(id.rhs, x))) {
        detail = "sides differ on " + rep.render(c);
        break;
      }
    }
    out[k] = {id.family, id.id, id.statement, id.indices, detail.empty(), detail};
  });
  return out;
}

struct HomomorphismReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::vector<std::string> failed;
};

// J(ab) = J(a)J(b) for random pairs of basis elements.
template <Field F>
HomomorphismReport check_homomorphism(const BtAlgebra<F>& alg, const TensorRep<F>& rep, std::size_t pairs,
                                      std::uint64_t seed, unsigned jobs = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> chosen(pairs);
  for (auto& p : chosen) p = {pick(rng), pick(rng)};
  const auto inputs = rep.canonical_inputs();
  std::vector<char> ok(pairs, 0);
  parallel_for(pairs, jobs, [&](std::size_t k) {
    auto a = alg.basis_element(alg.basis(chosen[k].first));
    auto b = alg.basis_element(alg.basis(chosen[k].second));
    auto ab = alg.mul(a, b);
    bool good = true;
    for (auto c : inputs) {
      auto x = SparseVector<F>::from_entries({{c, F(1)}});
      if (!(rep.apply(ab, x) == rep.apply(a, rep.apply(b, x)))) {
        good = false;
        break;
      }
    }
    ok[k] = good;
  });
  HomomorphismReport r;
  r.pairs = pairs;
  for (std::size_t k = 0; k < pairs; ++k) {
    if (!ok[k]) {
      ++r.failures;
      r.failed.push_back(alg.basis(chosen[k].first).to_string() + " * " + alg.basis(chosen[k].second).to_string());
    }
  }
  return r;
}

struct RankReport {
  std::string point;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};

// Rank of the span of the images of all basis elements of E_n.
template <Field F>
RankReport representation_rank(const BtAlgebra<F>& alg, const TensorRep<F>& rep, unsigned jobs = 1) {
  const auto inputs = rep.canonical_inputs();
  std::vector<SparseVector<F>> rows(alg.dimension());
  parallel_for(rows.size(), jobs, [&](std::size_t k) {
    rows[k] = rep.flatten(rep.images(alg.basis_element(alg.basis(k)), inputs));
  });
  Echelon<F> e;
  for (const auto& r : rows) e.insert(r);
  return {alg.context().describe(), e.rank(), alg.dimension() - e.rank()};
}

// ---- classical Jimbo representation of the Hecke algebra, dim V = 2 -------

// J on V (x) V and its normalized form F = (1 + J)/(1 + u), acting on
// V^{(x)n}. Basis vectors are bit strings, first factor most significant;
// bit 0 is v_1 and bit 1 is v_2.
template <Field F>
class ClassicalJimbo {
 public:
  using Vec = SparseVector<F>;
  using Code = std::uint64_t;

  explicit ClassicalJimbo(int n, FieldContext<F> ctx = {}) : n_(n), ctx_(std::move(ctx)) {
    if (n < 2 || n > 16) throw IndexError("classical tensor power outside 2..16");
    s_ = ctx_.sqrt_u();
    u_ = s_ * s_;
  }

  int n() const { return n_; }
  Code space_dimension() const { return Code{1} << n_; }

  Vec act_J(int i, const Vec& x) const {
    check_index(i);
    std::vector<typename Vec::Entry> out;
    for (const auto& [c, a] : x.entries()) {
      auto [ba, bb, swapped] = bits(c, i);
      if (ba == bb) {
        out.emplace_back(c, -a);
      } else if (ba == 0) {
        out.emplace_back(c, (u_ - F(1)) * a);
        out.emplace_back(swapped, s_ * a);
      } else {
        out.emplace_back(swapped, s_ * a);
      }
    }
    return Vec::from_entries(std::move(out));
  }

  // J^{-1} = (J - (u-1)) / u, from J^2 = u + (u-1)J.
  Vec act_Jinv(int i, const Vec& x) const {
    Vec r = act_J(i, x);
    r.axpy(-(u_ - F(1)), x);
    r.scale(u_.inverse());
    return r;
  }

  // The displayed table for F.
  Vec act_F_table(int i, const Vec& x) const {
    check_index(i);
    const F c = (u_ + F(1)).inverse();
    std::vector<typename Vec::Entry> out;
    for (const auto& [code, a] : x.entries()) {
      auto [ba, bb, swapped] = bits(code, i);
      if (ba == bb) continue;
      if (ba == 0) {
        out.emplace_back(code, c * u_ * a);
        out.emplace_back(swapped, c * s_ * a);
      } else {
        out.emplace_back(code, c * a);
        out.emplace_back(swapped, c * s_ * a);
      }
    }
    return Vec::from_entries(std::move(out));
  }

  // Evaluates a word expression with T_i -> J_i and E_i -> identity.
  Vec apply(const WordExpr& e, const Vec& x) const {
    if (e.max_index() >= n_) throw IndexError("word uses a generator outside the tensor power");
    Vec r;
    for (const auto& [word, c] : e.terms()) {
      Vec y = x;
      for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it) {
        if (it->gen == Gen::T) y = act_J(it->index, y);
        if (it->gen == Gen::Tinv) y = act_Jinv(it->index, y);
      }
      r.axpy(ctx_.lift(c), y);
    }
    return r;
  }

  std::vector<Code> all_inputs() const {
    std::vector<Code> out;
    for (Code c = 0; c < space_dimension(); ++c) out.push_back(c);
    return out;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i >= n_) throw IndexError("generator index out of range");
  }

  std::tuple<int, int, Code> bits(Code c, int i) const {
    int sa = n_ - i;
    int sb = n_ - i - 1;
    int ba = static_cast<int>((c >> sa) & 1);
    int bb = static_cast<int>((c >> sb) & 1);
    Code swapped = c;
    if (ba != bb) swapped ^= (Code{1} << sa) | (Code{1} << sb);
    return {ba, bb, swapped};
  }

  int n_;
  FieldContext<F> ctx_;
  F s_;
  F u_;
};

// Checks identities under E_i -> 1, T_i -> J_i on the full space.
template <Field F>
std::vector<IdentityCheck> verify_classical(const ClassicalJimbo<F>& cj, const std::vector<Identity>& ids) {
  std::vector<IdentityCheck> out;
  for (const auto& id : ids) {
    std::string detail;
    for (auto c : cj.all_inputs()) {
      auto x = SparseVector<F>::from_entries({{c, F(1)}});
      if (!(cj.apply(id.lhs, x) == cj.apply(id.rhs, x))) {
        detail = "sides differ on basis vector " + std::to_string(c);
        break;
      }
    }
    out.push_back({id.family, id.id, id.statement, id.indices, detail.empty(), detail});
  }
  return out;
}

// The Hecke relations, the vanishing of J(h_{ij}), the table for F and the
// idempotent presentation of the Temperley-Lieb algebra, on V^{(x)3} and,
// for the far-commutation instances, V^{(x)4}.
inline std::vector<IdentityCheck> classical_jimbo_check() {
  using namespace words;
  using detail::make;
  std::vector<IdentityCheck> out;
  const Scalar one_s(1);
  auto f = [&](int i) { return (one_s + u()).inverse() * (one() + T(i)); };
  for (int n : {3, 4}) {
    ClassicalJimbo<Scalar> cj(n);
    std::vector<Identity> ids;
    const std::string fam = "classical";
    for (int i = 1; i < n; ++i) {
      ids.push_back(make(fam, "hecke-quadratic", "J{i}^2 = u + (u-1)J{i}", {i}, T(i) * T(i),
                         WordExpr(u()) + (u() - one_s) * T(i)));
      ids.push_back(make(fam, "f-idempotent", "f{i}^2 = f{i}", {i}, f(i) * f(i), f(i)));
      for (int j = 1; j < n; ++j) {
        if (detail::adjacent(i, j)) {
          ids.push_back(make(fam, "hecke-braid", "J{i}J{j}J{i} = J{j}J{i}J{j}", {i, j}, T(i) * T(j) * T(i),
                             T(j) * T(i) * T(j)));
          ids.push_back(make(fam, "steinberg-kernel", "J(h{i}{j}) = 0", {i, j}, steinberg(i, j), WordExpr()));
          ids.push_back(make(fam, "f-braid-scaled", "f{i}f{j}f{i} = u/(1+u)^2 f{i}", {i, j}, f(i) * f(j) * f(i),
                             (u() / ((one_s + u()) * (one_s + u()))) * f(i)));
        }
        if (j > i && detail::far(i, j)) {
          ids.push_back(make(fam, "hecke-far-commute", "J{i}J{j} = J{j}J{i}", {i, j}, T(i) * T(j), T(j) * T(i)));
          ids.push_back(make(fam, "f-far-commute", "f{i}f{j} = f{j}f{i}", {i, j}, f(i) * f(j), f(j) * f(i)));
        }
      }
    }
    if (n == 4) {
      std::erase_if(ids, [](const Identity& id) { return id.id != "hecke-far-commute" && id.id != "f-far-commute"; });
    }
    for (auto& c : verify_classical(cj, ids)) out.push_back(std::move(c));
    if (n == 3) {
      for (int i = 1; i < n; ++i) {
        std::string detail;
        for (auto c : cj.all_inputs()) {
          auto x = SparseVector<Scalar>::from_entries({{c, Scalar(1)}});
          if (!(cj.act_F_table(i, x) == cj.apply(f(i), x))) {
            detail = "table differs on basis vector " + std::to_string(c);
            break;
          }
        }
        out.push_back({fam, "f-table", "F" + std::to_string(i) + " = (1 + J" + std::to_string(i) + ")/(1+u)", {i},
                       detail.empty(), detail});
      }
    }
  }
  return out;
}

}  // namespace btkit
