#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "combinatorics.hpp"
#include "parallel.hpp"
#include "relations.hpp"
#include "sparse.hpp"

namespace btkit {

// E_iE_j T_{ij} as a word expression.
inline WordExpr ideal_generator_word(int i, int j) { return words::E(i) * words::E(j) * words::steinberg(i, j); }

// Echelon basis of a two-sided ideal of E_n, kept in reduced echelon form.
// Reduction modulo the ideal returns the unique representative with zero
// coordinates at every pivot.
template <Field F>
class IdealBasis {
 public:
  using Element = AlgebraElement<F>;

  IdealBasis(const BtAlgebra<F>& alg, Echelon<F> echelon) : alg_(&alg), echelon_(std::move(echelon)) {
    echelon_.make_reduced();
  }

  const BtAlgebra<F>& algebra() const { return *alg_; }
  std::size_t dimension() const { return echelon_.rank(); }
  std::size_t quotient_dimension() const { return alg_->dimension() - echelon_.rank(); }
  const Echelon<F>& echelon() const { return echelon_; }

  std::vector<Element> rows() const {
    std::vector<Element> out;
    for (const auto& r : echelon_.rows()) out.push_back(alg_->from_coordinates(r));
    return out;
  }

  Element reduce(const Element& a) const { return alg_->from_coordinates(echelon_.reduce(alg_->coordinates(a))); }
  bool contains(const Element& a) const { return echelon_.contains(alg_->coordinates(a)); }
  bool equal_mod(const Element& a, const Element& b) const { return contains(a - b); }

 private:
  const BtAlgebra<F>* alg_;
  Echelon<F> echelon_;
};

// Two-sided ideal generated by `generators`: close the span under left and
// right multiplication by every T_i and E_i. A vector enters the work queue
// only when it enlarges the span, so the loop stops at the ideal.
template <Field F>
IdealBasis<F> build_ideal(const BtAlgebra<F>& alg, const std::vector<AlgebraElement<F>>& generators,
                          unsigned jobs = 1) {
  const int n = alg.n();
  Echelon<F> e(alg.dimension());
  std::deque<AlgebraElement<F>> queue;
  for (const auto& g : generators) {
    if (e.insert(alg.coordinates(g))) queue.push_back(g);
  }
  std::vector<AlgebraElement<F>> gens;
  for (int i = 1; i < n; ++i) {
    gens.push_back(alg.T(i));
    gens.push_back(alg.E(i));
  }
  while (!queue.empty()) {
    AlgebraElement<F> r = std::move(queue.front());
    queue.pop_front();
    std::vector<AlgebraElement<F>> products(2 * gens.size(), AlgebraElement<F>(n));
    parallel_for(products.size(), jobs, [&](std::size_t k) {
      const auto& x = gens[k / 2];
      products[k] = k % 2 == 0 ? alg.mul(x, r) : alg.mul(r, x);
    });
    for (auto& p : products) {
      if (e.insert(alg.coordinates(p))) queue.push_back(std::move(p));
    }
  }
  return IdealBasis<F>(alg, std::move(e));
}

// The ideal generated by E_1E_2 T_{12}.
template <Field F>
IdealBasis<F> build_ptl_ideal(const BtAlgebra<F>& alg, unsigned jobs = 1) {
  if (alg.n() < 3) return IdealBasis<F>(alg, Echelon<F>(alg.dimension()));
  return build_ideal(alg, {alg.eval(ideal_generator_word(1, 2))}, jobs);
}

// The same ideal as the span of every product b1 * g * b2 over basis pairs.
template <Field F>
IdealBasis<F> build_ideal_from_pairs(const BtAlgebra<F>& alg, const AlgebraElement<F>& g, unsigned jobs = 1) {
  const std::size_t dim = alg.dimension();
  std::vector<AlgebraElement<F>> left(dim, AlgebraElement<F>(alg.n()));
  parallel_for(dim, jobs, [&](std::size_t k) { left[k] = alg.mul(alg.basis_element(alg.basis(k)), g); });
  Echelon<F> e(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<SparseVector<F>> row(dim);
    parallel_for(dim, jobs, [&](std::size_t b) {
      row[b] = alg.coordinates(alg.mul(left[a], alg.basis_element(alg.basis(b))));
    });
    for (const auto& v : row) e.insert(v);
  }
  return IdealBasis<F>(alg, std::move(e));
}

// Every echelon row times every generator, on both sides, reduces to zero.
template <Field F>
bool ideal_is_closed(const IdealBasis<F>& ib, unsigned jobs = 1) {
  const auto& alg = ib.algebra();
  const auto rows = ib.rows();
  std::vector<char> ok(rows.size(), 1);
  parallel_for(rows.size(), jobs, [&](std::size_t k) {
    for (int i = 1; i < alg.n(); ++i) {
      for (const auto& x : {alg.T(i), alg.E(i)}) {
        if (!ib.contains(alg.mul(x, rows[k])) || !ib.contains(alg.mul(rows[k], x))) {
          ok[k] = 0;
          return;
        }
      }
    }
  });
  for (char c : ok) {
    if (!c) return false;
  }
  return true;
}

// ---- presentations by F_i and by L_i --------------------------------------

// One instance of a relation from the two quotient presentations. Relations
// expected to need the ideal are flagged.
struct PresentationRelation {
  Identity identity;
  bool expected_in_algebra = true;
  bool diagnostic = false;
};

inline std::vector<PresentationRelation> presentation_relations(int n) {
  using namespace words;
  using detail::make;
  std::vector<PresentationRelation> out;
  const Scalar one_s(1);
  const Scalar c1 = (one_s + u()).inverse();
  const Scalar c2 = c1 * c1;
  const Scalar half = one_s / Scalar(2);
  const Scalar um1 = u() - one_s;
  auto add = [&out](Identity id, bool in_algebra = true, bool diag = false) {
    out.push_back({std::move(id), in_algebra, diag});
  };
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) add(make("tie", "E-commute", "E{i}E{j} = E{j}E{i}", {i, j}, E(i) * E(j), E(j) * E(i)));
    add(make("tie", "E-idempotent", "E{i}^2 = E{i}", {i}, E(i) * E(i), E(i)));
  }
  // Presentation by F_i.
  for (int i = 1; i < n; ++i) {
    add(make("F", "F-quadratic", "F{i}^2 = (1+d)F{i} - dE{i}F{i}", {i}, F(i) * F(i),
             (one_s + delta()) * F(i) - delta() * (E(i) * F(i))));
    add(make("F", "EF-commute", "E{i}F{i} = F{i}E{i}", {i}, E(i) * F(i), F(i) * E(i)));
    for (int j = 1; j < n; ++j) {
      if (j > i && detail::far(i, j)) add(make("F", "F-far-commute", "F{i}F{j} = F{j}F{i}", {i, j}, F(i) * F(j), F(j) * F(i)));
      if (detail::far(i, j)) add(make("F", "FE-far-commute", "F{i}E{j} = E{j}F{i}", {i, j}, F(i) * E(j), E(j) * F(i)));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (!detail::adjacent(i, j)) continue;
      add(make("F", "EEF-left", "E{i}E{j}F{i} = F{i}E{i}E{j}", {i, j}, E(i) * E(j) * F(i), F(i) * E(i) * E(j)));
      add(make("F", "EEF-right", "F{i}E{i}E{j} = E{j}F{i}E{j} + (E{i}E{j} - E{j})/(u+1)", {i, j}, F(i) * E(i) * E(j),
               E(j) * F(i) * E(j) + c1 * (E(i) * E(j) - E(j))));
      add(make("F", "EFF-exchange",
               "E{i}F{j}F{i} = F{j}F{i}E{j} + [(E{i} - E{j})F{j} + F{i}(E{i} - E{j})]/(u+1) - (E{i} - E{j})/(u+1)^2",
               {i, j}, E(i) * F(j) * F(i),
               F(j) * F(i) * E(j) + c1 * ((E(i) - E(j)) * F(j) + F(i) * (E(i) - E(j))) - c2 * (E(i) - E(j))));
      WordExpr fff_l = F(i) * F(j) * F(i);
      WordExpr fff_r = c2 * (F(i) - (one_s - u()) * (E(i) * F(i)));
      add(make("F", "FFF-contract", "F{i}F{j}F{i} = (F{i} - (1-u)E{i}F{i})/(u+1)^2", {i, j}, fff_l, fff_r), false);
      add(make("F", "FFF-contract-tied", "E{i}E{j}F{i}F{j}F{i} = E{i}E{j}(F{i} - (1-u)E{i}F{i})/(u+1)^2", {i, j},
               E(i) * E(j) * fff_l, E(i) * E(j) * fff_r),
          false, true);
    }
  }
  // Presentation by L_i.
  for (int i = 1; i < n; ++i) {
    add(make("L", "L-idempotent", "L{i}^2 = L{i}", {i}, L(i) * L(i), L(i)));
    add(make("L", "LE-commute", "L{i}E{i} = E{i}L{i}", {i}, L(i) * E(i), E(i) * L(i)));
    for (int j = 1; j < n; ++j) {
      if (j > i && detail::far(i, j)) add(make("L", "L-far-commute", "L{i}L{j} = L{j}L{i}", {i, j}, L(i) * L(j), L(j) * L(i)));
      if (detail::far(i, j)) add(make("L", "LE-far-commute", "L{i}E{j} = E{j}L{i}", {i, j}, L(i) * E(j), E(j) * L(i)));
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (!detail::adjacent(i, j)) continue;
      add(make("L", "EEL-left", "E{i}E{j}L{i} = L{i}E{i}E{j}", {i, j}, E(i) * E(j) * L(i), L(i) * E(i) * E(j)));
      add(make("L", "EEL-right", "L{i}E{i}E{j} = E{j}L{i}E{j} + (E{i}E{j} - E{j})/2", {i, j}, L(i) * E(i) * E(j),
               E(j) * L(i) * E(j) + half * (E(i) * E(j) - E(j))));
      add(make("L", "LLE-exchange", "4L{i}L{j}E{i} + 2E{j}(L{j} + L{i}) + E{i} = 4E{j}L{i}L{j} + 2(L{i} + L{j})E{i} + E{j}",
               {i, j}, Scalar(4) * (L(i) * L(j) * E(i)) + Scalar(2) * (E(j) * (L(j) + L(i))) + E(i),
               Scalar(4) * (E(j) * L(i) * L(j)) + Scalar(2) * ((L(i) + L(j)) * E(i)) + E(j)));
      WordExpr lll = L(i) * L(j) * L(i);
      WordExpr lhs = Scalar(8) * lll +
                     (Scalar(4) * um1) * (L(i) * E(j) * L(j) * L(i) + E(i) * L(i) * L(j) * L(i) + L(i) * L(j) * E(i) * L(i)) +
                     (um1 * um1 * (u() + Scalar(5))) * (E(i) * E(j) * lll);
      WordExpr rhs = Scalar(2) * L(i) + (Scalar(3) * um1) * (E(i) * L(i)) + (um1 * um1) * (E(i) * E(j) * L(i));
      const std::string st =
          "8L{i}L{j}L{i} + 4(u-1)[L{i}E{j}L{j}L{i} + E{i}L{i}L{j}L{i} + L{i}L{j}E{i}L{i}] + (u-1)^2(u+5)E{i}E{j}L{i}L{j}L{i}"
          " = 2L{i} + 3(u-1)E{i}L{i} + (u-1)^2E{i}E{j}L{i}";
      add(make("L", "LLL-contract", st, {i, j}, lhs, rhs), false);
      add(make("L", "LLL-contract-tied", "E{i}E{j}*(" + st + ")", {i, j}, E(i) * E(j) * lhs, E(i) * E(j) * rhs), false,
          true);
    }
  }
  return out;
}

struct PresentationCheck {
  IdentityCheck identity;
  bool expected_in_algebra = true;
  bool diagnostic = false;
  bool holds_in_algebra = false;
  bool holds_mod_ideal = false;
};

template <Field F>
std::vector<PresentationCheck> verify_presentations(const IdealBasis<F>& ib, unsigned jobs = 1) {
  const auto& alg = ib.algebra();
  const auto rels = presentation_relations(alg.n());
  std::vector<PresentationCheck> out(rels.size());
  parallel_for(rels.size(), jobs, [&](std::size_t k) {
    const auto& r = rels[k];
    auto diff = alg.eval(r.identity.lhs) - alg.eval(r.identity.rhs);
    PresentationCheck c;
    c.identity = {r.identity.family, r.identity.id, r.identity.statement, r.identity.indices, false, ""};
    c.expected_in_algebra = r.expected_in_algebra;
    c.diagnostic = r.diagnostic;
    c.holds_in_algebra = diff.is_zero();
    c.holds_mod_ideal = ib.contains(diff);
    c.identity.passed = c.holds_mod_ideal && c.holds_in_algebra == c.expected_in_algebra;
    if (!c.holds_mod_ideal) c.identity.detail = "remainder mod ideal: " + ib.reduce(diff).to_string();
    out[k] = std::move(c);
  });
  return out;
}

// ---- F-reduced words and the spanning set ----------------------------------

// Runs (i_1..j_1)...(i_k..j_k); each run is F_{i}F_{i-1}...F_{j}.
struct FReducedWord {
  std::vector<std::pair<int, int>> runs;

  WordExpr word() const {
    WordExpr r = words::one();
    for (const auto& [i, j] : runs) {
      for (int m = i; m >= j; --m) r = r * words::F(m);
    }
    return r;
  }

  std::string to_string() const {
    if (runs.empty()) return "1";
    std::string s;
    for (const auto& [i, j] : runs) {
      s += "(";
      for (int m = i; m >= j; --m) s += "F" + std::to_string(m);
      s += ")";
    }
    return s;
  }
};

// Jones normal form: i_1 < ... < i_k, j_1 < ... < j_k and j_l <= i_l, all
// indices in 1..n-1. Ordered by number of runs, then lexicographically.
inline std::vector<FReducedWord> enumerate_F_reduced(int n) {
  std::vector<FReducedWord> out;
  std::vector<std::pair<int, int>> runs;
  auto rec = [&](auto&& self, int min_i, int min_j, std::size_t k) -> void {
    if (runs.size() == k) {
      out.push_back({runs});
      return;
    }
    for (int i = min_i; i < n; ++i) {
      for (int j = min_j; j <= i; ++j) {
        runs.emplace_back(i, j);
        self(self, i + 1, j + 1, k);
        runs.pop_back();
      }
    }
  };
  for (std::size_t k = 0; k < static_cast<std::size_t>(std::max(n, 1)); ++k) rec(rec, 1, 1, k);
  return out;
}

struct SpanningReport {
  std::size_t candidates = 0;
  std::size_t rank = 0;
  std::size_t quotient_dim = 0;
  std::size_t conjectured_dim = 0;
  std::size_t zero_candidates = 0;
};

// Rank modulo the ideal of {E_I F : I in P_n, F reduced}.
template <Field F>
SpanningReport spanning_check(const IdealBasis<F>& ib, unsigned jobs = 1) {
  const auto& alg = ib.algebra();
  const auto fw = enumerate_F_reduced(alg.n());
  std::vector<AlgebraElement<F>> fvals;
  for (const auto& w : fw) fvals.push_back(alg.eval(w.word()));
  const auto& parts = alg.partitions();
  std::vector<SparseVector<F>> reduced(parts.size() * fvals.size());
  parallel_for(reduced.size(), jobs, [&](std::size_t k) {
    auto e = alg.E_of_partition(parts[k / fvals.size()]);
    reduced[k] = ib.echelon().reduce(alg.coordinates(alg.mul(e, fvals[k % fvals.size()])));
  });
  SpanningReport r;
  r.candidates = reduced.size();
  for (const auto& v : reduced) r.zero_candidates += v.is_zero();
  r.rank = rank_of(reduced);
  r.quotient_dim = ib.quotient_dimension();
  r.conjectured_dim = static_cast<std::size_t>(bell(alg.n()) * catalan(alg.n()));
  return r;
}

// The ideals generated by E_iE_jT_{ij}, |i-j| = 1, and by T_{12}E_1E_2 all
// coincide with the ideal generated by E_1E_2T_{12}.
template <Field F>
bool single_relation_suffices(const IdealBasis<F>& ib, unsigned jobs = 1) {
  const auto& alg = ib.algebra();
  std::vector<AlgebraElement<F>> gens;
  for (int i = 1; i < alg.n(); ++i) {
    for (int j = 1; j < alg.n(); ++j) {
      if (detail::adjacent(i, j)) gens.push_back(alg.eval(ideal_generator_word(i, j)));
    }
  }
  gens.push_back(alg.eval(words::steinberg(1, 2) * words::E(1) * words::E(2)));
  for (const auto& g : gens) {
    if (!ib.contains(g)) return false;
    if (build_ideal(alg, {g}, jobs).dimension() != ib.dimension()) return false;
  }
  return true;
}

}  // namespace btkit
