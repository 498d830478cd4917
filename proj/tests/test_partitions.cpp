#include <catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "btkit/btkit.hpp"

using btkit::Permutation;
using btkit::SetPartition;

namespace {

// Bell numbers as row sums of Stirling numbers of the second kind,
// S(n, k) = k S(n-1, k) + S(n-1, k-1).
std::vector<std::uint64_t> bell_by_stirling(int upto) {
  std::vector<std::uint64_t> out{1};
  std::vector<std::uint64_t> row{1};
  for (int n = 1; n <= upto; ++n) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n + 1), 0);
    for (int k = 1; k <= n; ++k) {
      std::uint64_t same = k < n ? static_cast<std::uint64_t>(k) * row[static_cast<std::size_t>(k)] : 0;
      next[static_cast<std::size_t>(k)] = same + row[static_cast<std::size_t>(k - 1)];
    }
    row = next;
    std::uint64_t total = 0;
    for (auto x : row) total += x;
    out.push_back(total);
  }
  return out;
}

// Join by brute force: the coarsest partition below every common upper bound.
SetPartition join_oracle(const SetPartition& a, const SetPartition& b) {
  const int n = a.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) parent[static_cast<std::size_t>(k)] = k;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (a.same_block(x, y) || b.same_block(x, y)) parent[static_cast<std::size_t>(find(x - 1))] = find(y - 1);
    }
  }
  std::vector<int> labels;
  for (int k = 0; k < n; ++k) labels.push_back(find(k));
  return SetPartition::from_labels(labels);
}

bool leq_oracle(const SetPartition& a, const SetPartition& b) {
  for (int x = 1; x <= a.n(); ++x) {
    for (int y = 1; y <= a.n(); ++y) {
      if (a.same_block(x, y) && !b.same_block(x, y)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("partition counts are Bell numbers") {
  auto b = bell_by_stirling(8);
  for (int n = 1; n <= 8; ++n) {
    CHECK(SetPartition::enumerate(n).size() == b[static_cast<std::size_t>(n)]);
    CHECK(btkit::bell(n) == b[static_cast<std::size_t>(n)]);
  }
  CHECK(SetPartition::enumerate(3).size() == 5);
  CHECK(SetPartition::enumerate(4).size() == 15);
}

TEST_CASE("enumeration is sorted and duplicate free") {
  for (int n = 1; n <= 6; ++n) {
    auto all = SetPartition::enumerate(n);
    std::set<SetPartition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("join and order agree with brute force, monoid laws exhaustively") {
  for (int n = 1; n <= 4; ++n) {
    auto all = SetPartition::enumerate(n);
    const auto unit = SetPartition::unit(n);
    for (const auto& a : all) {
      CHECK(join(a, unit) == a);
      CHECK(join(a, a) == a);
      for (const auto& b : all) {
        CHECK(join(a, b) == join_oracle(a, b));
        CHECK(join(a, b) == join(b, a));
        CHECK(leq(a, b) == leq_oracle(a, b));
        CHECK(leq(a, b) == (join(a, b) == b));
        for (const auto& c : all) CHECK(join(join(a, b), c) == join(a, join(b, c)));
      }
    }
  }
}

TEST_CASE("named partitions") {
  auto p = SetPartition::parse;
  CHECK(join(p("{{1,2},{3}}"), p("{{1},{2,3}}")) == p("{{1,2,3}}"));
  CHECK(join(SetPartition::generator(1, 3), SetPartition::generator(2, 3)) == SetPartition::full(3));
  CHECK(SetPartition::generator(1, 3) == p("{{1,2},{3}}"));
  CHECK(SetPartition::generator(2, 3) == p("{{2,3},{1}}"));
  CHECK(leq(p("{{1,2},{3}}"), p("{{1,2,3}}")));
  CHECK_FALSE(leq(p("{{1,2},{3}}"), p("{{1,3},{2}}")));
  using Arcs = std::vector<std::pair<int, int>>;
  CHECK(SetPartition::full(3).arcs() == Arcs{{1, 2}, {2, 3}});
  CHECK(SetPartition::unit(4).arcs().empty());
  CHECK(p("{{1,3},{2}}").arcs() == Arcs{{1, 3}});
  CHECK(p("{{1,3},{2}}").to_string() == "{{1,3},{2}}");
  CHECK(p("{{1,3},{2}}").rgs_string() == "0,1,0");
  CHECK(SetPartition::parse_rgs("0,1,0") == p("{{1,3},{2}}"));
  CHECK_THROWS_AS(p("{{1,2},{2}}"), btkit::ParseError);
  CHECK_THROWS_AS(SetPartition::parse_rgs("1,0"), btkit::ParseError);
}

TEST_CASE("a partition is the join of its arcs") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : SetPartition::enumerate(n)) {
      auto q = SetPartition::unit(n);
      for (auto [i, j] : p.arcs()) q = join(q, SetPartition::arc(i, j, n));
      CHECK(q == p);
    }
  }
}

TEST_CASE("generators and permutations reach every partition") {
  for (int n = 1; n <= 5; ++n) {
    std::set<SetPartition> reached{SetPartition::unit(n)};
    std::vector<SetPartition> queue{SetPartition::unit(n)};
    while (!queue.empty()) {
      auto p = queue.back();
      queue.pop_back();
      for (int i = 1; i < n; ++i) {
        for (const auto& q : {join(p, SetPartition::generator(i, n)), apply(Permutation::simple(i, n), p)}) {
          if (reached.insert(q).second) queue.push_back(q);
        }
      }
    }
    CHECK(reached.size() == btkit::bell(n));
  }
}

TEST_CASE("permutation action laws") {
  auto p = SetPartition::parse;
  CHECK(apply(Permutation::simple(2, 3), p("{{1,2},{3}}")) == p("{{1,3},{2}}"));
  // s2 s1: 2 -> 1, 3 -> 2.
  CHECK(apply(Permutation::from_word({2, 1}, 3), p("{{2,3},{1}}")) == p("{{1,2},{3}}"));
  for (int n = 1; n <= 4; ++n) {
    auto parts = SetPartition::enumerate(n);
    auto perms = Permutation::enumerate(n);
    for (const auto& a : parts) {
      CHECK(apply(Permutation::identity(n), a) == a);
      for (const auto& v : perms) {
        CHECK(apply(v.inverse(), apply(v, a)) == a);
        for (const auto& w : perms) CHECK(apply(v * w, a) == apply(v, apply(w, a)));
        for (const auto& b : parts) CHECK(apply(v, join(a, b)) == join(apply(v, a), apply(v, b)));
        // Blocks move with the permutation.
        auto moved = apply(v, a);
        for (int x = 1; x <= n; ++x) {
          for (int y = 1; y <= n; ++y) CHECK(moved.same_block(v(x), v(y)) == a.same_block(x, y));
        }
      }
    }
  }
}
