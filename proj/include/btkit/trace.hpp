#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "parallel.hpp"
#include "parse.hpp"
#include "poly_ab.hpp"
#include "ptl.hpp"
#include "sparse.hpp"

namespace btkit {

// How many instances of one Markov rule follow from all other constraints.
struct RuleRedundancy {
  std::string rule;
  std::size_t instances = 0;
  std::size_t implied = 0;
};

// A solved trace on E_n: one polynomial in A, B per basis element.
template <Field F>
struct TraceFunctional {
  int n = 1;
  bool exists = false;
  bool unique = false;
  std::size_t unknowns = 0;
  std::size_t constraints = 0;
  std::size_t nullity = 0;
  std::string witness;
  std::vector<PolyAB<F>> values;
  std::vector<RuleRedundancy> redundancy;
};

struct TraceOptions {
  // Use rho(xy) = rho(yx) for every basis pair instead of for generators y.
  bool all_pairs = false;
  // Also measure which Markov rule instances are implied by the others.
  bool redundancy = false;
  unsigned jobs = 1;
};

template <Field F>
TraceFunctional<F> trivial_trace() {
  TraceFunctional<F> t;
  t.n = 1;
  t.exists = true;
  t.unique = true;
  t.unknowns = 1;
  t.constraints = 1;
  t.values = {PolyAB<F>::monomial(F(1), 0, 0)};
  return t;
}

namespace detail {

// One linear constraint sum_k a_k rho(b_k) = rhs(A, B).
template <Field F>
struct TraceRow {
  SparseVector<F> lhs;
  PolyAB<F> rhs;
  std::string label;
  int rule = -1;  // 0: x T, 1: x E T, 2: x E; -1 otherwise
};

template <Field F>
class MonomialColumns {
 public:
  explicit MonomialColumns(std::size_t offset) : offset_(offset) {}

  std::size_t column(int a, int b) {
    auto [it, inserted] = index_.try_emplace({a, b}, monomials_.size());
    if (inserted) monomials_.emplace_back(a, b);
    return offset_ + it->second;
  }

  std::pair<int, int> monomial(std::size_t column) const { return monomials_[column - offset_]; }

 private:
  std::size_t offset_;
  std::map<std::pair<int, int>, std::size_t> index_;
  std::vector<std::pair<int, int>> monomials_;
};

// Appends -rhs in the monomial columns; the augmented row reads lhs - rhs = 0.
template <Field F>
SparseVector<F> augment(const TraceRow<F>& row, MonomialColumns<F>& cols) {
  std::vector<typename SparseVector<F>::Entry> entries(row.lhs.entries().begin(), row.lhs.entries().end());
  for (const auto& [m, c] : row.rhs.terms()) entries.emplace_back(cols.column(m.a, m.b), -c);
  return SparseVector<F>::from_entries(std::move(entries));
}

}  // namespace detail

// Solves for rho_n given rho_{n-1}. Unknowns are rho_n on the basis; the
// constraint matrix has entries in the base field and right-hand sides in
// F[A, B], so elimination runs over F with the A, B monomials as extra
// columns after the unknowns. A pivot in those columns means 0 = nonzero.
template <Field F>
TraceFunctional<F> solve_trace(const BtAlgebra<F>& alg, const TraceFunctional<F>& prev,
                               const TraceOptions& opt = {}) {
  const int n = alg.n();
  if (n == 1) return trivial_trace<F>();
  if (prev.n != n - 1 || !prev.exists) throw Error("trace on E_" + std::to_string(n - 1) + " is not available");
  const std::size_t N = alg.dimension();
  BtAlgebra<F> lower(n - 1, alg.context());
  using Row = detail::TraceRow<F>;
  std::vector<Row> rows;

  rows.push_back({alg.coordinates(alg.one()), PolyAB<F>::monomial(F(1), 0, 0), "rho(1) = 1"});

  // Trace symmetry.
  std::vector<AlgebraElement<F>> others;
  if (opt.all_pairs) {
    for (std::size_t k = 0; k < N; ++k) others.push_back(alg.basis_element(alg.basis(k)));
  } else {
    for (int i = 1; i < n; ++i) {
      others.push_back(alg.T(i));
      others.push_back(alg.E(i));
    }
  }
  std::vector<Row> sym(N * others.size());
  parallel_for(sym.size(), opt.jobs, [&](std::size_t k) {
    auto x = alg.basis_element(alg.basis(k / others.size()));
    const auto& y = others[k % others.size()];
    sym[k] = {alg.coordinates(alg.mul(x, y) - alg.mul(y, x)), PolyAB<F>(),
              "rho(xy) = rho(yx), x = " + alg.basis(k / others.size()).to_string()};
  });
  for (auto& r : sym) {
    if (!r.lhs.is_zero()) rows.push_back(std::move(r));
  }

  // Markov rules on the embedded basis of E_{n-1}.
  const auto A = PolyAB<F>::A();
  const auto B = PolyAB<F>::B();
  for (std::size_t k = 0; k < lower.dimension(); ++k) {
    auto xb = lower.basis(k);
    auto x = alg.embed(lower.basis_element(xb));
    const auto& p = prev.values[k];
    const std::string xs = xb.to_string();
    rows.push_back({alg.coordinates(alg.right_T(x, n - 1)), A * p, "rho(x T" + std::to_string(n - 1) + ") = A rho(x), x = " + xs, 0});
    rows.push_back({alg.coordinates(alg.right_T(alg.right_E(x, n - 1), n - 1)), A * p,
                    "rho(x E" + std::to_string(n - 1) + "T" + std::to_string(n - 1) + ") = A rho(x), x = " + xs, 1});
    rows.push_back({alg.coordinates(alg.right_E(x, n - 1)), B * p, "rho(x E" + std::to_string(n - 1) + ") = B rho(x), x = " + xs, 2});
  }

  TraceFunctional<F> tf;
  tf.n = n;
  tf.unknowns = N;
  tf.constraints = rows.size();

  detail::MonomialColumns<F> cols(N);
  std::vector<SparseVector<F>> aug;
  aug.reserve(rows.size());
  for (const auto& r : rows) aug.push_back(detail::augment(r, cols));

  Echelon<F> e;
  for (std::size_t k = 0; k < aug.size(); ++k) {
    auto pivot = e.insert(aug[k]);
    if (pivot && *pivot >= N && tf.witness.empty()) tf.witness = rows[k].label;
  }
  std::size_t unknown_pivots = 0;
  bool consistent = true;
  for (auto p : e.pivot_columns()) {
    if (p < N) {
      ++unknown_pivots;
    } else {
      consistent = false;
    }
  }
  tf.exists = consistent;
  tf.nullity = N - unknown_pivots;
  tf.unique = consistent && tf.nullity == 0;

  if (consistent) {
    e.make_reduced();
    tf.values.assign(N, PolyAB<F>());
    for (auto p : e.pivot_columns()) {
      PolyAB<F> v;
      for (const auto& [col, c] : e.row_for_pivot(p).entries()) {
        if (col < N) continue;
        auto [a, b] = cols.monomial(col);
        v.add_term({a, b}, -c);
      }
      tf.values[p] = std::move(v);
    }
  }

  if (opt.redundancy) {
    const char* names[] = {"rho(x T) = A rho(x)", "rho(x E T) = A rho(x)", "rho(x E) = B rho(x)"};
    for (int rule = 0; rule < 3; ++rule) {
      Echelon<F> rest;
      RuleRedundancy rr{names[rule], 0, 0};
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].rule != rule) rest.insert(aug[k]);
      }
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].rule != rule) continue;
        ++rr.instances;
        rr.implied += rest.contains(aug[k]);
      }
      tf.redundancy.push_back(rr);
    }
  }
  return tf;
}

// rho_1, ..., rho_n at one value of sqrt(u).
template <Field F>
std::vector<TraceFunctional<F>> solve_trace_tower(int n, const FieldContext<F>& ctx = {},
                                                  const TraceOptions& opt = {}) {
  std::vector<TraceFunctional<F>> out{trivial_trace<F>()};
  for (int m = 2; m <= n; ++m) {
    BtAlgebra<F> alg(m, ctx);
    out.push_back(solve_trace(alg, out.back(), opt));
    if (!out.back().exists) break;
  }
  return out;
}

template <Field F>
PolyAB<F> evaluate_trace(const BtAlgebra<F>& alg, const TraceFunctional<F>& tf, const AlgebraElement<F>& a) {
  if (!tf.exists) throw Error("trace functional does not exist");
  if (tf.n != alg.n() || a.n() != alg.n()) throw DimensionMismatch("trace of an element of the wrong degree");
  PolyAB<F> r;
  for (const auto& [b, c] : a.terms()) r += c * tf.values[alg.index(b)];
  return r;
}

// rho(ab) = rho(ba) for random elements with small integer coefficients.
template <Field F>
std::size_t check_trace_symmetry(const BtAlgebra<F>& alg, const TraceFunctional<F>& tf, std::size_t count,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  auto random_element = [&] {
    AlgebraElement<F> a(alg.n());
    for (int t = 0; t < 3; ++t) a.add(alg.basis(pick(rng)), F(coef(rng)));
    return a;
  };
  std::size_t failures = 0;
  for (std::size_t k = 0; k < count; ++k) {
    auto a = random_element();
    auto b = random_element();
    failures += !(evaluate_trace(alg, tf, alg.mul(a, b)) == evaluate_trace(alg, tf, alg.mul(b, a)));
  }
  return failures;
}

// The value of rho_3 on E_1E_2T_{12} and the conditions under which it
// vanishes.
struct FactorizationReport {
  PolyAB<Scalar> value;
  bool matches_expected = false;
  bool vanishes_at_minus_B = false;
  bool vanishes_at_minus_B_over_1pu = false;
  PolyAB<Scalar> value_at_A_eq_B;
  bool nonzero_at_A_eq_B = false;
  std::size_t scalar_multiple_count = 0;
  std::size_t basis_size = 0;
};

inline FactorizationReport factorization_condition(const BtAlgebra<Scalar>& alg3, const TraceFunctional<Scalar>& rho3) {
  if (alg3.n() != 3) throw DimensionMismatch("factorization condition is computed in E_3");
  FactorizationReport r;
  const auto g = alg3.eval(ideal_generator_word(1, 2));
  r.value = evaluate_trace(alg3, rho3, g);
  r.matches_expected = r.value == parse_poly_ab("(u+1)A^2+(u+2)AB+B^2");
  const Scalar one(1);
  r.vanishes_at_minus_B = r.value.substitute_A(-one).is_zero();
  r.vanishes_at_minus_B_over_1pu = r.value.substitute_A(-(one + Scalar::u()).inverse()).is_zero();
  r.value_at_A_eq_B = r.value.substitute_A(one);
  r.nonzero_at_A_eq_B = !r.value_at_A_eq_B.is_zero();
  const auto& [b0, c0] = *g.terms().begin();
  r.basis_size = alg3.dimension();
  for (std::size_t k = 0; k < alg3.dimension(); ++k) {
    auto zg = alg3.mul(alg3.basis_element(alg3.basis(k)), g);
    Scalar c = zg.coeff(b0) / c0;
    r.scalar_multiple_count += zg == c * g;
  }
  return r;
}

}  // namespace btkit
