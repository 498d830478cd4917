#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "permutation.hpp"

namespace btkit {

// Set partition of {1..n} stored as a restricted-growth string: rgs[0] = 0
// and every label is at most one more than the largest label before it.
// Blocks are the label fibers; the canonical form makes equality structural.
class SetPartition {
 public:
  SetPartition() : SetPartition(1) {}

  // The unit {{1},{2},...,{n}}.
  explicit SetPartition(int n) : n_(static_cast<std::uint8_t>(n)) {
    check_degree(n);
    for (int k = 0; k < n; ++k) rgs_[k] = static_cast<std::uint8_t>(k);
  }

  static SetPartition unit(int n) { return SetPartition(n); }

  // The partition of everything into one block.
  static SetPartition full(int n) {
    SetPartition p(n);
    for (int k = 0; k < n; ++k) p.rgs_[k] = 0;
    return p;
  }

  // p_i: the single arc {i, i+1}.
  static SetPartition generator(int i, int n) {
    if (i < 1 || i >= n) throw IndexError("generator p_" + std::to_string(i) + " needs 1 <= i < n");
    return arc(i, i + 1, n);
  }

  // The partition with one non-singleton block {i, j}.
  static SetPartition arc(int i, int j, int n) {
    if (i < 1 || j > n || i >= j) throw IndexError("arc needs 1 <= i < j <= n");
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    labels[static_cast<std::size_t>(j - 1)] = i - 1;
    return from_labels(labels);
  }

  // Any labelling of the points; canonicalized to restricted-growth form.
  static SetPartition from_labels(const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    SetPartition p(n);
    std::array<int, kMaxN> seen_label{};
    int next = 0;
    for (int k = 0; k < n; ++k) {
      int found = -1;
      for (int j = 0; j < next; ++j) {
        if (seen_label[j] == labels[static_cast<std::size_t>(k)]) found = j;
      }
      if (found < 0) {
        seen_label[next] = labels[static_cast<std::size_t>(k)];
        found = next++;
      }
      p.rgs_[k] = static_cast<std::uint8_t>(found);
    }
    return p;
  }

  // Validates restricted-growth form.
  static SetPartition from_rgs(const std::vector<int>& rgs) {
    int n = static_cast<int>(rgs.size());
    SetPartition p(n);
    int max = -1;
    for (int k = 0; k < n; ++k) {
      int v = rgs[static_cast<std::size_t>(k)];
      if (v < 0 || v > max + 1) throw Error("not a restricted-growth string");
      max = std::max(max, v);
      p.rgs_[k] = static_cast<std::uint8_t>(v);
    }
    return p;
  }

  // Blocks as lists of 1-based points; every point must appear exactly once.
  static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    int b = 0;
    for (const auto& block : blocks) {
      for (int m : block) {
        if (m < 1 || m > n || labels[static_cast<std::size_t>(m - 1)] >= 0) {
          throw Error("blocks do not partition 1.." + std::to_string(n));
        }
        labels[static_cast<std::size_t>(m - 1)] = b;
      }
      ++b;
    }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
      throw Error("blocks do not cover 1.." + std::to_string(n));
    }
    return from_labels(labels);
  }

  int n() const { return n_; }
  int label(int m) const { return rgs_[m - 1]; }
  bool same_block(int a, int b) const { return rgs_[a - 1] == rgs_[b - 1]; }

  int block_count() const {
    int mx = -1;
    for (int k = 0; k < n_; ++k) mx = std::max<int>(mx, rgs_[k]);
    return mx + 1;
  }

  bool is_unit() const { return block_count() == n_; }

  std::vector<int> rgs() const { return {rgs_.begin(), rgs_.begin() + n_}; }

  // Blocks sorted by their minimum, points ascending.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
    for (int k = 0; k < n_; ++k) out[rgs_[k]].push_back(k + 1);
    return out;
  }

  // Pairs of adjacent points within a block, sorted.
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& block : blocks()) {
      for (std::size_t k = 1; k < block.size(); ++k) out.emplace_back(block[k - 1], block[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Finest partition coarser than both (the monoid product).
  friend SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("join of partitions of different size");
    std::array<int, kMaxN> parent;
    for (int k = 0; k < a.n_; ++k) parent[k] = k;
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    std::array<int, kMaxN> first_a;
    std::array<int, kMaxN> first_b;
    first_a.fill(-1);
    first_b.fill(-1);
    for (int k = 0; k < a.n_; ++k) {
      for (auto [lab, first] : {std::pair{a.rgs_[k], &first_a}, std::pair{b.rgs_[k], &first_b}}) {
        int& f = (*first)[lab];
        if (f < 0) {
          f = k;
        } else {
          int x = find(k);
          int y = find(f);
          if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
      }
    }
    std::vector<int> labels(static_cast<std::size_t>(a.n_));
    for (int k = 0; k < a.n_; ++k) labels[static_cast<std::size_t>(k)] = find(k);
    return from_labels(labels);
  }

  // Every block of `a` lies inside a block of `b`.
  friend bool leq(const SetPartition& a, const SetPartition& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("comparing partitions of different size");
    for (int x = 0; x < a.n_; ++x) {
      for (int y = x + 1; y < a.n_; ++y) {
        if (a.rgs_[x] == a.rgs_[y] && b.rgs_[x] != b.rgs_[y]) return false;
      }
    }
    return true;
  }

  // wI: the image of every block under w.
  friend SetPartition apply(const Permutation& w, const SetPartition& p) {
    if (w.n() != p.n_) throw DimensionMismatch("permutation and partition of different size");
    std::vector<int> labels(static_cast<std::size_t>(p.n_));
    for (int m = 1; m <= p.n_; ++m) labels[static_cast<std::size_t>(w(m) - 1)] = p.rgs_[m - 1];
    return from_labels(labels);
  }

  // Adds the point n+1 as a singleton block.
  SetPartition extended() const {
    auto labels = rgs();
    labels.push_back(block_count());
    return from_labels(labels);
  }

  // "{{1,2},{3}}".
  std::string to_string() const {
    std::string s = "{";
    auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      if (b > 0) s += ",";
      s += "{";
      for (std::size_t k = 0; k < bs[b].size(); ++k) {
        if (k > 0) s += ",";
        s += std::to_string(bs[b][k]);
      }
      s += "}";
    }
    return s + "}";
  }

  // "0,0,1".
  std::string rgs_string() const {
    std::string s;
    for (int k = 0; k < n_; ++k) {
      if (k > 0) s += ",";
      s += std::to_string(rgs_[k]);
    }
    return s;
  }

  // Accepts "{{1,2},{3}}"; the size is the largest point mentioned.
  static SetPartition parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    auto expect = [&](char c) {
      if (pos >= text.size() || text[pos] != c) {
        throw ParseError(std::string("expected '") + c + "' in partition '" + text + "'");
      }
      ++pos;
    };
    expect('{');
    int n = 0;
    while (pos < text.size() && text[pos] == '{') {
      ++pos;
      std::vector<int> block;
      while (pos < text.size() && text[pos] != '}') {
        std::size_t end = text.find_first_of(",}", pos);
        if (end == std::string::npos) throw ParseError("unterminated block in '" + text + "'");
        int m = 0;
        try {
          m = std::stoi(text.substr(pos, end - pos));
        } catch (const std::exception&) {
          throw ParseError("bad point in partition '" + text + "'");
        }
        block.push_back(m);
        n = std::max(n, m);
        pos = end;
        if (text[pos] == ',') ++pos;
      }
      expect('}');
      blocks.push_back(std::move(block));
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    expect('}');
    if (pos != text.size()) throw ParseError("trailing characters in partition '" + text + "'");
    try {
      return from_blocks(blocks, n);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string(e.what()) + ": '" + text + "'");
    }
  }

  // Parses the rgs form "0,0,1".
  static SetPartition parse_rgs(const std::string& text) {
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad rgs entry '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    try {
      return from_rgs(v);
    } catch (const Error& e) {
      throw ParseError(std::string(e.what()) + ": '" + text + "'");
    }
  }

  // All partitions of {1..n}, lexicographic in the rgs.
  static std::vector<SetPartition> enumerate(int n) {
    check_degree(n);
    std::vector<SetPartition> out;
    SetPartition p = full(n);
    for (;;) {
      out.push_back(p);
      // Advance to the next restricted-growth string.
      int k = n - 1;
      for (; k >= 1; --k) {
        int mx = 0;
        for (int j = 0; j < k; ++j) mx = std::max<int>(mx, p.rgs_[j]);
        if (p.rgs_[k] <= mx) break;
      }
      if (k < 1) break;
      ++p.rgs_[k];
      for (int j = k + 1; j < n; ++j) p.rgs_[j] = 0;
    }
    return out;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.rgs_ == b.rgs_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.rgs_ <=> b.rgs_;
  }

 private:
  std::uint8_t n_;
  std::array<std::uint8_t, kMaxN> rgs_{};
};

}  // namespace btkit
