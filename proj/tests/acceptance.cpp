// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// (tolerance 0); there is no floating point anywhere in the library.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "btkit/btkit.hpp"

namespace {

using namespace btkit;
namespace w = words;

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned jobs() { return default_jobs(); }

std::string count_line(const std::vector<IdentityCheck>& checks) {
  std::size_t ok = 0;
  for (const auto& c : checks) ok += c.passed;
  return std::to_string(ok) + "/" + std::to_string(checks.size());
}

std::string first_failure(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return "; first failure " + c.id + ": " + c.statement;
  }
  return "";
}

Outcome relations() {
  std::ostringstream d;
  bool pass = true;
  for (int n = 3; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    TensorRep<Scalar> rep(n);
    auto ids = defining_relations(n);
    auto eng = verify_in_algebra(alg, ids, jobs());
    auto op = verify_in_representation(rep, ids, n == 3, jobs());
    pass = pass && all_passed(eng) && all_passed(op);
    d << "n=" << n << " engine " << count_line(eng) << ", operators " << count_line(op)
      << (n == 3 ? " (all inputs)" : " (canonical inputs)") << first_failure(eng) << first_failure(op) << "; ";
  }
  return {pass, d.str()};
}

Outcome lemmas() {
  std::ostringstream d;
  bool pass = true;
  for (int n = 3; n <= 4; ++n) {
    auto checks = verify_in_algebra(BtAlgebra<Scalar>(n), lemma_identities(n), jobs());
    pass = pass && all_passed(checks);
    d << "n=" << n << " " << count_line(checks) << first_failure(checks) << "; ";
  }
  return {pass, d.str()};
}

Outcome jimbo_computations() {
  BtAlgebra<Scalar> alg(3);
  TensorRep<Scalar> rep(3);
  auto g = alg.eval(ideal_generator_word(1, 2));
  std::size_t nonzero = 0;
  for (auto c : rep.all_inputs()) nonzero += !rep.apply(g, rep.basis_vector(rep.decode(c))).is_zero();

  const Scalar u = Scalar::u();
  const Scalar s = Scalar::s();
  auto vec = [&](std::vector<TensorFactor> f) { return rep.basis_vector(f); };
  SparseVector<Scalar> expect;
  expect.axpy(u, vec({{1, 1}, {2, 1}, {1, 2}}));
  expect.axpy(-u, vec({{1, 1}, {1, 2}, {2, 1}}));
  expect.axpy(s, vec({{2, 1}, {1, 1}, {1, 2}}));
  expect.axpy(-s, vec({{2, 1}, {1, 2}, {1, 1}}));
  expect.axpy(u, vec({{1, 2}, {1, 1}, {2, 1}}));
  expect.axpy(s, vec({{1, 2}, {2, 1}, {1, 1}}));
  bool display = rep.apply(alg.steinberg(1, 2), vec({{1, 1}, {2, 1}, {1, 2}})) == expect;

  TensorRep<Scalar> narrow(3, {}, 2);
  std::size_t narrow_nonzero = 0;
  for (auto c : narrow.all_inputs()) narrow_nonzero += !narrow.apply(g, narrow.basis_vector(narrow.decode(c))).is_zero();

  std::ostringstream d;
  d << "J_3(E1E2T12) nonzero on " << nonzero << " of " << rep.space_dimension()
    << " basis vectors (three distinct lower indices, equal upper indices); with lower indices in {1,2} nonzero on "
    << narrow_nonzero << "; six-term image of v1^1(x)v2^1(x)v1^2 " << (display ? "matches" : "differs");
  return {nonzero == 0 && display, d.str()};
}

Outcome classical() {
  auto checks = classical_jimbo_check();
  return {all_passed(checks), count_line(checks) + first_failure(checks)};
}

Outcome presentations() {
  BtAlgebra<Scalar> alg(3);
  auto ib = build_ptl_ideal(alg, jobs());
  auto checks = verify_presentations(ib, jobs());
  std::size_t in_alg = 0, in_alg_ok = 0, contract = 0, contract_fail_alg = 0, contract_mod = 0;
  std::vector<std::string> bad;
  for (const auto& c : checks) {
    if (c.diagnostic) continue;
    if (c.expected_in_algebra) {
      ++in_alg;
      in_alg_ok += c.holds_in_algebra;
      if (!c.holds_in_algebra) bad.push_back(c.identity.id);
    } else {
      ++contract;
      contract_fail_alg += !c.holds_in_algebra;
      contract_mod += c.holds_mod_ideal;
      if (c.holds_in_algebra || !c.holds_mod_ideal) bad.push_back(c.identity.id + "[" + c.identity.statement + "]");
    }
  }
  std::size_t tied = 0, tied_ok = 0;
  for (const auto& c : checks) {
    if (!c.diagnostic) continue;
    ++tied;
    tied_ok += c.holds_mod_ideal;
  }
  std::ostringstream d;
  d << "E_3: " << in_alg_ok << "/" << in_alg << " relations hold in the algebra; contraction relations: " << contract_fail_alg
    << "/" << contract << " fail in the algebra, " << contract_mod << "/" << contract
    << " hold mod the ideal; multiplied by E_iE_j: " << tied_ok << "/" << tied << " hold mod the ideal";
  return {bad.empty(), d.str()};
}

Outcome quotient_dimensions() {
  std::ostringstream d;
  bool invariants = true;
  auto check = [&](const auto& alg, const std::string& label) {
    auto ib = build_ptl_ideal(alg, jobs());
    bool closed = ideal_is_closed(ib, jobs());
    bool idem = true;
    for (std::size_t k = 0; k < alg.dimension(); ++k) {
      auto b = alg.basis_element(alg.basis(k));
      auto r = ib.reduce(b);
      idem = idem && ib.reduce(r) == r && ib.contains(b - r);
    }
    invariants = invariants && closed && idem;
    d << label << ": dim PTL = " << ib.quotient_dimension() << " (ideal " << ib.dimension() << ", closed "
      << (closed ? "yes" : "no") << ", reduce idempotent " << (idem ? "yes" : "no") << "); ";
    return ib.quotient_dimension();
  };
  auto d3 = check(BtAlgebra<Scalar>(3), "n=3 symbolic");
  auto d4a = check(BtAlgebra<Rational>(4, {Rational(5, 7)}), "n=4 s=5/7");
  auto d4b = check(BtAlgebra<Rational>(4, {Rational(3, 2)}), "n=4 s=3/2");
  bool agree = d4a == d4b;
  d << "b_3C_3 = 25 " << (d3 == 25 ? "agrees" : "differs") << ", b_4C_4 = 210 " << (d4a == 210 ? "agrees" : "differs")
    << ", n=4 points " << (agree ? "agree" : "disagree");
  return {invariants && agree, d.str()};
}

Outcome spanning() {
  BtAlgebra<Scalar> alg(3);
  auto ib = build_ptl_ideal(alg, jobs());
  auto r = spanning_check(ib, jobs());
  std::ostringstream d;
  d << "rank of " << r.candidates << " candidates mod the ideal = " << r.rank << ", dim PTL_3 = " << r.quotient_dim;
  return {r.rank == r.quotient_dim, d.str()};
}

Outcome trace() {
  auto tower = solve_trace_tower<Scalar>(3, {}, {.all_pairs = false, .redundancy = false, .jobs = jobs()});
  std::ostringstream d;
  bool pass = tower.size() == 3;
  for (std::size_t k = 1; k < tower.size(); ++k) {
    pass = pass && tower[k].exists && tower[k].unique;
    d << "n=" << tower[k].n << " exists " << tower[k].exists << " unique " << tower[k].unique << "; ";
  }
  if (!pass) return {false, d.str()};
  BtAlgebra<Scalar> alg(3);
  const auto& rho = tower.back();
  auto val = [&](const AlgebraElement<Scalar>& a) { return evaluate_trace(alg, rho, a); };
  const auto st = alg.steinberg(1, 2);
  std::size_t ok = 0, total = 0;
  auto expect = [&](const AlgebraElement<Scalar>& a, const char* text) {
    ++total;
    ok += val(a) == parse_poly_ab(text);
  };
  expect(alg.eval(w::E(1) * w::T(1) * w::T(2) * w::T(1)), "(u-1)A^2+uAB");
  expect(st, "(u+1)A^2+3A+(u-1)AB+1");
  expect(alg.mul(alg.E_of_partition(SetPartition::full(3)), st), "(u+1)A^2+(u+2)AB+B^2");
  for (const auto& I : alg.partitions()) {
    if (I.block_count() == 2) expect(alg.mul(alg.E_of_partition(I), st), "(u+1)A^2+(u+1)AB+A+B");
  }
  auto f = factorization_condition(alg, rho);
  pass = ok == total && f.matches_expected && f.vanishes_at_minus_B && f.vanishes_at_minus_B_over_1pu &&
         f.nonzero_at_A_eq_B && f.scalar_multiple_count == f.basis_size && f.basis_size == 30;
  d << "values " << ok << "/" << total << "; rho(E1E2T12) = " << f.value.to_string() << "; zero at A=-B "
    << f.vanishes_at_minus_B << ", at A=-B/(1+u) " << f.vanishes_at_minus_B_over_1pu << ", at A=B "
    << f.value_at_A_eq_B.to_string() << "; z*g scalar multiple for " << f.scalar_multiple_count << "/" << f.basis_size;
  return {pass, d.str()};
}

template <class F>
AlgebraElement<F> random_element(const BtAlgebra<F>& alg, std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  AlgebraElement<F> a(alg.n());
  for (int t = 0; t < terms; ++t) a.add(alg.basis(pick(rng)), F(coef(rng)));
  return a;
}

Outcome properties() {
  std::mt19937_64 rng(1);
  std::ostringstream d;
  bool pass = true;

  for (int n = 3; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    std::size_t bad = 0;
    for (int k = 0; k < 200; ++k) {
      auto a = random_element(alg, rng, 2);
      auto b = random_element(alg, rng, 2);
      auto c = random_element(alg, rng, 2);
      bad += !(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
    }
    pass = pass && bad == 0;
    d << "associativity n=" << n << " " << 200 - bad << "/200; ";
  }

  std::size_t walks = 0, walk_bad = 0;
  for (int n = 2; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    for (const auto& perm : alg.permutations()) {
      auto word = perm.reduced_word();
      const auto tw = alg.T_of(perm);
      for (int step = 0; step < 10; ++step) {
        std::vector<std::size_t> spots;
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
          int a = word[k], b = word[k + 1];
          bool far = a - b > 1 || b - a > 1;
          bool braid = k + 2 < word.size() && word[k + 2] == a && (a - b == 1 || b - a == 1);
          if (far || braid) spots.push_back(k);
        }
        if (spots.empty()) break;
        std::size_t k = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        int a = word[k], b = word[k + 1];
        if (a - b > 1 || b - a > 1) {
          std::swap(word[k], word[k + 1]);
        } else {
          word[k] = b;
          word[k + 1] = a;
          word[k + 2] = b;
        }
        ++walks;
        walk_bad += !(alg.eval(w::T_word(word)) == tw);
      }
    }
  }
  pass = pass && walk_bad == 0;
  d << "braid-move rewritings n<=4 " << walks - walk_bad << "/" << walks << "; ";

  for (int n = 3; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    TensorRep<Scalar> rep(n);
    auto h = check_homomorphism(alg, rep, 100, 1, jobs());
    pass = pass && h.failures == 0;
    d << "homomorphism n=" << n << " " << h.pairs - h.failures << "/" << h.pairs << "; ";
  }

  std::size_t laws = 0, law_bad = 0;
  for (int n = 1; n <= 4; ++n) {
    auto all = SetPartition::enumerate(n);
    auto unit = SetPartition::unit(n);
    for (const auto& a : all) {
      laws += 2;
      law_bad += !(join(a, a) == a) + !(join(a, unit) == a);
      for (const auto& b : all) {
        ++laws;
        law_bad += !(join(a, b) == join(b, a));
        for (const auto& c : all) {
          ++laws;
          law_bad += !(join(join(a, b), c) == join(a, join(b, c)));
        }
      }
    }
  }
  pass = pass && law_bad == 0;
  d << "partition monoid laws n<=4 " << laws - law_bad << "/" << laws;
  return {pass, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "defining relations in the engine and as operators, n=3,4", relations},
      {2, "identity families in the engine, n=3,4", lemmas},
      {3, "tensor representation computations at n=3", jimbo_computations},
      {4, "classical Jimbo harness", classical},
      {5, "quotient presentations at n=3", presentations},
      {6, "quotient dimensions and ideal invariants", quotient_dimensions},
      {7, "E_I F candidates span the quotient at n=3", spanning},
      {8, "Markov trace at n=2,3 and factorization", trace},
      {9, "property suites", properties},
  };
  std::cout << "tolerance: exact (0) for every comparison\n";
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(1);
    t << secs;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " | " << o.detail
              << " | " << t.str() << "s\n"
              << std::flush;
  }
  std::cout << "summary: " << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
