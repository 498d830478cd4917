#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "btkit/btkit.hpp"

using btkit::Permutation;

namespace {

int inversions(const std::vector<int>& one_line) {
  int count = 0;
  for (std::size_t a = 0; a < one_line.size(); ++a) {
    for (std::size_t b = a + 1; b < one_line.size(); ++b) count += one_line[a] > one_line[b];
  }
  return count;
}

// Applies a word to positions: right multiplication by s_i swaps entries i, i+1.
std::vector<int> one_line_of_word(const std::vector<int>& word, int n) {
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) v.push_back(k);
  for (int i : word) std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return v;
}

}  // namespace

TEST_CASE("small cases") {
  auto s1 = Permutation::simple(1, 3);
  CHECK((s1 * s1).is_identity());
  auto v = Permutation::parse("[3,1,2]");
  CHECK(v * Permutation::identity(3) == v);
  CHECK(Permutation::identity(3).reduced_word().empty());
  CHECK(Permutation::parse("[3,2,1]").reduced_word().size() == 3);
  CHECK(s1.reduced_word() == std::vector<int>{1});
  CHECK(Permutation::enumerate(1).size() == 1);
  CHECK(Permutation::enumerate(3).size() == 6);
  CHECK(Permutation::enumerate(4).size() == 24);
  // Rightmost factor acts first.
  auto w = Permutation::from_word({2, 1}, 3);
  CHECK(w(2) == 1);
  CHECK(w(3) == 2);
  CHECK(w.to_string() == "[3,1,2]");
  CHECK(w.word_string() == "s2.s1");
  CHECK(Permutation::parse_word("s2.s1", 3) == w);
  CHECK_THROWS_AS(Permutation::parse("[1,1,2]"), btkit::Error);
  CHECK_THROWS_AS(Permutation::parse("1,2"), btkit::ParseError);
  CHECK_THROWS_AS(Permutation::parse_word("s1.x", 3), btkit::ParseError);
}

TEST_CASE("reduced words are reduced and spell the permutation, exhaustively") {
  for (int n = 1; n <= 5; ++n) {
    auto all = Permutation::enumerate(n);
    CHECK(all.size() == btkit::factorial(n));
    std::set<std::vector<int>> lines;
    for (std::size_t k = 0; k < all.size(); ++k) {
      const auto& w = all[k];
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == inversions(w.one_line()));
      CHECK(w.length() == inversions(w.one_line()));
      CHECK(one_line_of_word(word, n) == w.one_line());
      CHECK(Permutation::from_word(word, n) == w);
      CHECK(Permutation::parse(w.to_string()) == w);
      CHECK(w.rank() == k);
      CHECK(w * w.inverse() == Permutation::identity(n));
      lines.insert(w.one_line());
      for (int i = 1; i < n; ++i) {
        bool descent = w.one_line()[static_cast<std::size_t>(i - 1)] > w.one_line()[static_cast<std::size_t>(i)];
        CHECK(w.has_right_descent(i) == descent);
        CHECK(w.times_simple(i) == w * Permutation::simple(i, n));
        CHECK(w.times_simple(i).length() == w.length() + (descent ? -1 : 1));
      }
    }
    CHECK(lines.size() == all.size());
  }
}

TEST_CASE("composition is associative") {
  auto all = Permutation::enumerate(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (std::size_t k = 0; k < all.size(); k += 5) CHECK((a * b) * all[k] == a * (b * all[k]));
    }
  }
}
