#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace btkit {

inline constexpr int kMaxN = 8;

inline void check_degree(int n) {
  if (n < 1 || n > kMaxN) {
    throw IndexError("degree n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxN));
  }
}

// Element of the symmetric group S_n in one-line notation. Points are 1-based
// in the public interface.
//
// Composition is right-to-left: (v * w)(m) = v(w(m)). With this convention
// the word s_{i1} ... s_{ik} denotes the permutation that applies s_{ik}
// first, which is what makes T_w E_I T_w^{-1} = E_{wI} hold verbatim.
class Permutation {
 public:
  Permutation() : Permutation(1) {}
  explicit Permutation(int n) : n_(static_cast<std::uint8_t>(n)) {
    check_degree(n);
    for (int k = 0; k < kMaxN; ++k) img_[k] = static_cast<std::uint8_t>(k);
  }

  static Permutation identity(int n) { return Permutation(n); }

  // The simple transposition s_i = (i, i+1).
  static Permutation simple(int i, int n) {
    if (i < 1 || i >= n) throw IndexError("s_" + std::to_string(i) + " not in S_" + std::to_string(n));
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
  }

  static Permutation from_one_line(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    Permutation p(n);
    std::array<bool, kMaxN> seen{};
    for (int k = 0; k < n; ++k) {
      int v = images[static_cast<std::size_t>(k)];
      if (v < 1 || v > n || seen[v - 1]) throw Error("not a permutation of 1.." + std::to_string(n));
      seen[v - 1] = true;
      p.img_[k] = static_cast<std::uint8_t>(v - 1);
    }
    return p;
  }

  // Product s_{w[0]} s_{w[1]} ... of simple transpositions.
  static Permutation from_word(const std::vector<int>& word, int n) {
    Permutation p(n);
    for (int i : word) p = p * simple(i, n);
    return p;
  }

  int n() const { return n_; }
  int operator()(int m) const { return img_[m - 1] + 1; }

  friend Permutation operator*(const Permutation& v, const Permutation& w) {
    if (v.n_ != w.n_) throw DimensionMismatch("composing permutations of different degree");
    Permutation r(v.n_);
    for (int k = 0; k < v.n_; ++k) r.img_[k] = v.img_[w.img_[k]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(n_);
    for (int k = 0; k < n_; ++k) r.img_[img_[k]] = static_cast<std::uint8_t>(k);
    return r;
  }

  // Right multiplication by s_i, i.e. swapping positions i and i+1.
  Permutation times_simple(int i) const {
    Permutation r = *this;
    std::swap(r.img_[i - 1], r.img_[i]);
    return r;
  }

  // w(i) > w(i+1), equivalently l(w s_i) < l(w).
  bool has_right_descent(int i) const { return img_[i - 1] > img_[i]; }

  int length() const {
    int inv = 0;
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) inv += img_[a] > img_[b];
    }
    return inv;
  }

  bool is_identity() const {
    for (int k = 0; k < n_; ++k) {
      if (img_[k] != k) return false;
    }
    return true;
  }

  // Deterministic reduced word: strip the smallest right descent until the
  // identity is reached, then read the stripped letters back to front.
  std::vector<int> reduced_word() const {
    std::vector<int> stripped;
    Permutation w = *this;
    for (bool found = true; found;) {
      found = false;
      for (int i = 1; i < n_; ++i) {
        if (w.has_right_descent(i)) {
          stripped.push_back(i);
          w = w.times_simple(i);
          found = true;
          break;
        }
      }
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
  }

  // Position in the lexicographic enumeration (Lehmer code).
  std::size_t rank() const {
    std::size_t r = 0;
    for (int a = 0; a < n_; ++a) {
      int smaller = 0;
      for (int b = a + 1; b < n_; ++b) smaller += img_[b] < img_[a];
      r = r * static_cast<std::size_t>(n_ - a) + static_cast<std::size_t>(smaller);
    }
    return r;
  }

  std::vector<int> one_line() const {
    std::vector<int> v;
    for (int k = 0; k < n_; ++k) v.push_back(img_[k] + 1);
    return v;
  }

  // "[2,1,3]".
  std::string to_string() const {
    std::string s = "[";
    for (int k = 0; k < n_; ++k) {
      if (k > 0) s += ",";
      s += std::to_string(img_[k] + 1);
    }
    return s + "]";
  }

  // "s1.s2.s1"; the identity renders as "e".
  std::string word_string() const {
    auto w = reduced_word();
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0) s += ".";
      s += "s" + std::to_string(w[k]);
    }
    return s;
  }

  // Accepts "[2,1,3]" (degree from the length).
  static Permutation parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw ParseError("expected one-line notation like [2,1,3]: '" + text + "'");
    }
    std::vector<int> images;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        images.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad permutation entry '" + tok + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    try {
      return from_one_line(images);
    } catch (const Error& e) {
      throw ParseError(std::string(e.what()) + ": '" + text + "'");
    }
  }

  // Accepts "s1.s2.s1" or "e".
  static Permutation parse_word(const std::string& text, int n) {
    if (text == "e" || text.empty()) return identity(n);
    std::vector<int> word;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t dot = text.find('.', pos);
      std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
      if (tok.size() < 2 || tok[0] != 's' || tok.find_first_not_of("0123456789", 1) != std::string::npos) {
        throw ParseError("bad generator '" + tok + "'");
      }
      word.push_back(std::stoi(tok.substr(1)));
      if (dot == std::string::npos) break;
      pos = dot + 1;
    }
    return from_word(word, n);
  }

  // All of S_n in lexicographic order of one-line notation.
  static std::vector<Permutation> enumerate(int n) {
    check_degree(n);
    std::vector<Permutation> out;
    Permutation p(n);
    do {
      out.push_back(p);
    } while (std::next_permutation(p.img_.begin(), p.img_.begin() + n));
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.img_ <=> b.img_;
  }

 private:
  std::uint8_t n_;
  std::array<std::uint8_t, kMaxN> img_{};
};

}  // namespace btkit
