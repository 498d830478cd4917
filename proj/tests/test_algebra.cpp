#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "btkit/btkit.hpp"

using btkit::AlgebraElement;
using btkit::BasisElement;
using btkit::BtAlgebra;
using btkit::Permutation;
using btkit::Rational;
using btkit::Scalar;
using btkit::SetPartition;
namespace w = btkit::words;

namespace {

template <class F>
AlgebraElement<F> random_element(const BtAlgebra<F>& alg, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, alg.dimension() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  AlgebraElement<F> a(alg.n());
  for (int t = 0; t < terms; ++t) a.add(alg.basis(pick(rng)), F(coef(rng)));
  return a;
}

// One random braid or commutation move on a reduced word, if any applies.
bool random_move(std::vector<int>& word, std::mt19937_64& rng) {
  std::vector<std::pair<std::size_t, bool>> moves;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    int a = word[k];
    int b = word[k + 1];
    if (a - b > 1 || b - a > 1) moves.emplace_back(k, false);
    if (k + 2 < word.size() && word[k + 2] == a && (a - b == 1 || b - a == 1)) moves.emplace_back(k, true);
  }
  if (moves.empty()) return false;
  auto [k, braid] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  if (braid) {
    int a = word[k];
    int b = word[k + 1];
    word[k] = b;
    word[k + 1] = a;
    word[k + 2] = b;
  } else {
    std::swap(word[k], word[k + 1]);
  }
  return true;
}

}  // namespace

TEST_CASE("dimension is b_n n!") {
  for (int n = 1; n <= 5; ++n) {
    BtAlgebra<Rational> alg(n, {Rational(5, 7)});
    CHECK(alg.dimension() == btkit::bell(n) * btkit::factorial(n));
    for (std::size_t k = 0; k < alg.dimension(); k += 11) CHECK(alg.index(alg.basis(k)) == k);
  }
}

TEST_CASE("right multiplication by generators on basis elements") {
  BtAlgebra<Scalar> alg(3);
  const auto unit = SetPartition::unit(3);
  const auto p1 = SetPartition::generator(1, 3);
  const auto e = Permutation::identity(3);
  const auto s1 = Permutation::simple(1, 3);
  const Scalar um1 = Scalar::u() - Scalar(1);

  CHECK(alg.mul_basis_by_T({unit, e}, 1) == alg.basis_element({unit, s1}));
  AlgebraElement<Scalar> expect(3);
  expect.add({unit, e}, Scalar(1));
  expect.add({p1, e}, um1);
  expect.add({p1, s1}, um1);
  CHECK(alg.mul_basis_by_T({unit, s1}, 1) == expect);
  CHECK(alg.mul_basis_by_T({SetPartition::full(3), e}, 1) == alg.basis_element({SetPartition::full(3), s1}));
  CHECK(alg.mul_basis_by_E({unit, s1}, 1) == alg.basis_element({p1, s1}));
  CHECK(alg.mul_basis_by_E({unit, Permutation::from_word({2, 1}, 3)}, 2) ==
        alg.basis_element({p1, Permutation::from_word({2, 1}, 3)}));
  CHECK(alg.mul_basis_by_E({p1, e}, 1) == alg.basis_element({p1, e}));
  CHECK(alg.mul(alg.T(1), alg.T_inverse(1)) == alg.one());
  CHECK(alg.mul(alg.T_inverse(1), alg.T(1)) == alg.one());
  CHECK(alg.E_arc(1, 2) == alg.E(1));
  CHECK(alg.E_of_partition(unit) == alg.one());
  CHECK_THROWS_AS(alg.T(3), btkit::IndexError);
  CHECK_THROWS_AS(alg.mul(alg.one(), BtAlgebra<Scalar>(2).one()), btkit::DimensionMismatch);
}

TEST_CASE("T_i^{-1} expanded by hand") {
  // T^{-1} = T + (u^{-1} - 1) E (1 + T)
  for (int n = 2; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    for (int i = 1; i < n; ++i) {
      auto inv = alg.T(i) + (Scalar::u().inverse() - Scalar(1)) * alg.mul(alg.E(i), alg.one() + alg.T(i));
      CHECK(alg.T_inverse(i) == inv);
      CHECK(alg.mul(alg.T(i), inv) == alg.one());
    }
  }
}

TEST_CASE("multiplication is associative on random triples") {
  std::mt19937_64 rng(2024);
  {
    BtAlgebra<Scalar> alg(3);
    for (int k = 0; k < 200; ++k) {
      auto a = random_element(alg, rng);
      auto b = random_element(alg, rng);
      auto c = random_element(alg, rng);
      REQUIRE(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
    }
  }
  {
    BtAlgebra<Scalar> alg(4);
    for (int k = 0; k < 200; ++k) {
      auto a = random_element(alg, rng, 2);
      auto b = random_element(alg, rng, 2);
      auto c = random_element(alg, rng, 2);
      REQUIRE(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
    }
  }
}

TEST_CASE("T_w does not depend on the reduced word") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    for (const auto& perm : alg.permutations()) {
      auto word = perm.reduced_word();
      const auto tw = alg.T_of(perm);
      CHECK(alg.eval(w::T_word(word)) == tw);
      for (int step = 0; step < 12 && random_move(word, rng); ++step) {
        REQUIRE(Permutation::from_word(word, n) == perm);
        CHECK(alg.eval(w::T_word(word)) == tw);
      }
    }
  }
}

TEST_CASE("conjugating ties by T_w permutes the partition") {
  for (int n = 2; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    for (const auto& perm : alg.permutations()) {
      auto tw = alg.T_of(perm);
      for (const auto& I : alg.partitions()) {
        CHECK(alg.mul(tw, alg.E_of_partition(I)) == alg.mul(alg.E_of_partition(apply(perm, I)), tw));
      }
    }
  }
}

TEST_CASE("E_J from chains, stars and arcs agree") {
  for (int n = 2; n <= 5; ++n) {
    BtAlgebra<Rational> alg(n, {Rational(3, 2)});
    for (const auto& I : alg.partitions()) {
      auto chain = alg.one();
      auto star = alg.one();
      for (const auto& block : I.blocks()) {
        chain = alg.mul(chain, alg.eval(w::E_block_chain(block)));
        star = alg.mul(star, alg.eval(w::E_block_star(block)));
      }
      CHECK(chain == alg.E_of_partition(I));
      CHECK(star == alg.E_of_partition(I));
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        CHECK(alg.eval(w::E_arc(i, j)) == alg.basis_element({SetPartition::arc(i, j, n), Permutation::identity(n)}));
      }
    }
  }
}

TEST_CASE("specialized and symbolic engines agree") {
  std::mt19937_64 rng(5);
  const Rational p(5, 7);
  BtAlgebra<Scalar> sym(3);
  BtAlgebra<Rational> num(3, {p});
  auto special = [&](const AlgebraElement<Scalar>& a) {
    AlgebraElement<Rational> r(3);
    for (const auto& [b, c] : a.terms()) r.add(b, c.evaluate(p));
    return r;
  };
  for (int k = 0; k < 50; ++k) {
    auto a = random_element(sym, rng);
    auto b = random_element(sym, rng);
    CHECK(special(sym.mul(a, b)) == num.mul(special(a), special(b)));
  }
}

TEST_CASE("products match operator composition in the faithful tensor representation") {
  // The representation has full rank at n = 3, so this pins down every product.
  BtAlgebra<Scalar> alg(3);
  btkit::TensorRep<Scalar> rep(3);
  auto inputs = rep.canonical_inputs();
  for (const auto& x : alg.basis()) {
    for (const auto& y : alg.basis()) {
      auto xy = alg.mul(alg.basis_element(x), alg.basis_element(y));
      for (auto c : inputs) {
        auto v = btkit::SparseVector<Scalar>::from_entries({{c, Scalar(1)}});
        REQUIRE(rep.apply(xy, v) == rep.apply(x, rep.apply(y, v)));
      }
    }
  }
}

TEST_CASE("element text round-trips") {
  std::mt19937_64 rng(17);
  BtAlgebra<Scalar> alg(3);
  for (int k = 0; k < 50; ++k) {
    auto a = alg.mul(random_element(alg, rng), random_element(alg, rng));
    CHECK(btkit::parse_element(a.to_string(), 3) == a);
  }
  CHECK(btkit::parse_element("0", 3).is_zero());
  CHECK(btkit::parse_element("(u-1)*E{{1,2},{3}}T[2,1,3]", 3) ==
        (Scalar::u() - Scalar(1)) * alg.basis_element({SetPartition::generator(1, 3), Permutation::simple(1, 3)}));
  CHECK_THROWS_AS(btkit::parse_element("E{{1,2}}T[2,1]", 3), btkit::DimensionMismatch);
  CHECK_THROWS_AS(btkit::parse_element("T[2,1,3]", 3), btkit::ParseError);
}

TEST_CASE("defining relations and identities hold in the engine") {
  for (int n = 3; n <= 4; ++n) {
    BtAlgebra<Scalar> alg(n);
    auto checks = btkit::verify_in_algebra(alg, btkit::defining_relations(n), 2);
    auto lemmas = btkit::verify_in_algebra(alg, btkit::lemma_identities(n), 2);
    checks.insert(checks.end(), lemmas.begin(), lemmas.end());
    for (const auto& c : checks) {
      INFO(c.id << ": " << c.statement << " " << c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("a wrong identity is reported as failing") {
  BtAlgebra<Scalar> alg(3);
  btkit::Identity bad{"test", "wrong-quadratic", "T1^2 = 1", {1}, w::T(1) * w::T(1), w::one()};
  auto checks = btkit::verify_in_algebra(alg, {bad});
  REQUIRE(checks.size() == 1);
  CHECK_FALSE(checks[0].passed);
  CHECK_FALSE(btkit::all_passed(checks));
}
