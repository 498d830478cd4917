#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "scalar.hpp"

namespace btkit {

enum class Gen : std::uint8_t { T, E, Tinv };

struct Letter {
  Gen gen;
  std::uint8_t index;  // 1-based generator index
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    switch (l.gen) {
      case Gen::T:
        s += "T" + std::to_string(l.index);
        break;
      case Gen::E:
        s += "E" + std::to_string(l.index);
        break;
      case Gen::Tinv:
        s += "T" + std::to_string(l.index) + "^-1";
        break;
    }
  }
  return s;
}

// Formal linear combination of words in T_i, E_i and T_i^{-1} with
// coefficients in Q(s). This is the free-algebra side of every identity: both
// the basis engine and the tensor representation evaluate these, so relations
// are checked without going through either normal form.
class WordExpr {
 public:
  WordExpr() = default;
  WordExpr(Scalar c) { add(Word{}, c); }  // NOLINT(google-explicit-constructor)
  WordExpr(long c) : WordExpr(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static WordExpr letter(Gen g, int i) {
    if (i < 1 || i > 255) throw IndexError("generator index out of range");
    WordExpr e;
    e.add(Word{Letter{g, static_cast<std::uint8_t>(i)}}, Scalar(1));
    return e;
  }

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Largest generator index used.
  int max_index() const {
    int m = 0;
    for (const auto& [w, c] : terms_) {
      for (const auto& l : w) m = std::max<int>(m, l.index);
    }
    return m;
  }

  void add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WordExpr& operator+=(const WordExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WordExpr& operator-=(const WordExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }

  friend WordExpr operator+(WordExpr a, const WordExpr& b) { return a += b; }
  friend WordExpr operator-(WordExpr a, const WordExpr& b) { return a -= b; }
  friend WordExpr operator-(const WordExpr& a) { return WordExpr() - a; }

  friend WordExpr operator*(const WordExpr& a, const WordExpr& b) {
    WordExpr r;
    for (const auto& [w1, c1] : a.terms_) {
      for (const auto& [w2, c2] : b.terms_) {
        Word w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        r.add(w, c1 * c2);
      }
    }
    return r;
  }
  friend WordExpr operator*(const Scalar& c, const WordExpr& a) { return WordExpr(c) * a; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")" + btkit::to_string(w);
    }
    return s;
  }

 private:
  std::map<Word, Scalar> terms_;
};

// Named elements of E_n written as words in the generators.
namespace words {

inline Scalar u() { return Scalar::u(); }
// (1-u)/(1+u)
inline Scalar delta() { return (Scalar(1) - u()) / (Scalar(1) + u()); }
// (1+u)/2
inline Scalar alpha() { return (Scalar(1) + u()) / Scalar(2); }

inline WordExpr one() { return WordExpr(1); }
inline WordExpr T(int i) { return WordExpr::letter(Gen::T, i); }
inline WordExpr E(int i) { return WordExpr::letter(Gen::E, i); }
inline WordExpr Tinv(int i) { return WordExpr::letter(Gen::Tinv, i); }

// T_i^{-1} expanded through the quadratic relation: T_i + (u^{-1} - 1) E_i (1 + T_i).
inline WordExpr Tinv_expanded(int i) {
  return T(i) + (u().inverse() - Scalar(1)) * (E(i) * (one() + T(i)));
}

// E_{ij} = T_i ... T_{j-2} E_{j-1} T_{j-2}^{-1} ... T_i^{-1}, and E_i when j = i+1.
inline WordExpr E_arc(int i, int j) {
  if (i < 1 || j <= i) throw IndexError("E_arc needs 1 <= i < j");
  WordExpr r = E(j - 1);
  for (int k = j - 2; k >= i; --k) r = T(k) * r * Tinv(k);
  return r;
}

// E_J for a single block, as the product of consecutive arcs i1i2, i2i3, ...
inline WordExpr E_block_chain(const std::vector<int>& block) {
  WordExpr r = one();
  for (std::size_t k = 1; k < block.size(); ++k) r = r * E_arc(block[k - 1], block[k]);
  return r;
}

// E_J for a single block, as the product of E_{i0 j} over j != i0 = min J.
inline WordExpr E_block_star(const std::vector<int>& block) {
  WordExpr r = one();
  for (std::size_t k = 1; k < block.size(); ++k) r = r * E_arc(block[0], block[k]);
  return r;
}

// E_I = product of E_J over the blocks J of I.
inline WordExpr E_partition(const SetPartition& p) {
  WordExpr r = one();
  for (const auto& block : p.blocks()) r = r * E_block_chain(block);
  return r;
}

// T_w along a word of simple transpositions.
inline WordExpr T_word(const std::vector<int>& word) {
  WordExpr r = one();
  for (int i : word) r = r * T(i);
  return r;
}

// Gamma = T_1 T_2 ... T_{n-1}.
inline WordExpr gamma(int n) {
  WordExpr r = one();
  for (int i = 1; i < n; ++i) r = r * T(i);
  return r;
}

inline WordExpr gamma_inverse(int n) {
  WordExpr r = one();
  for (int i = n - 1; i >= 1; --i) r = r * Tinv(i);
  return r;
}

// Gamma^k for any integer k.
inline WordExpr gamma_power(int k, int n) {
  WordExpr base = k >= 0 ? gamma(n) : gamma_inverse(n);
  WordExpr r = one();
  for (int m = 0; m < (k >= 0 ? k : -k); ++m) r = r * base;
  return r;
}

// Steinberg element 1 + T_i + T_j + T_iT_j + T_jT_i + T_iT_jT_i, |i-j| = 1.
inline WordExpr steinberg(int i, int j) {
  if (i - j != 1 && j - i != 1) throw IndexError("steinberg element needs |i-j| = 1");
  return one() + T(i) + T(j) + T(i) * T(j) + T(j) * T(i) + T(i) * T(j) * T(i);
}

// F_i = (1 + T_i) / (u + 1).
inline WordExpr F(int i) { return (Scalar(1) + u()).inverse() * (one() + T(i)); }

// L_i = (1 + T_i)(1 + delta E_i) / 2.
inline WordExpr L(int i) {
  return (Scalar(1) / Scalar(2)) * ((one() + T(i)) * (one() + delta() * E(i)));
}

// L_i from its defining form (T_i + 1)(alpha + (1 - alpha) E_i) / (1 + u).
inline WordExpr L_from_alpha(int i) {
  return (Scalar(1) + u()).inverse() *
         ((T(i) + one()) * (WordExpr(alpha()) + (Scalar(1) - alpha()) * E(i)));
}

}  // namespace words

}  // namespace btkit
