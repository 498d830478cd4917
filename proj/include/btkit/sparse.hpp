#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace btkit {

// Sparse coordinate vector: (index, value) pairs sorted by index, no zeros.
template <Field F>
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, F>;

  SparseVector() = default;

  // Entries may be unsorted and repeated; they are merged.
  static SparseVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& e : entries) {
      if (!v.e_.empty() && v.e_.back().first == e.first) {
        v.e_.back().second += e.second;
      } else {
        v.e_.push_back(std::move(e));
      }
    }
    std::erase_if(v.e_, [](const Entry& e) { return e.second.is_zero(); });
    return v;
  }

  bool is_zero() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  const Entry& operator[](std::size_t k) const { return e_[k]; }

  F get(std::size_t index) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), index,
                               [](const Entry& a, std::size_t i) { return a.first < i; });
    return it != e_.end() && it->first == index ? it->second : F();
  }

  // this += c * other
  void axpy(const F& c, const SparseVector& other) {
    if (c.is_zero() || other.e_.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + other.e_.size());
    auto a = e_.begin();
    auto b = other.e_.begin();
    while (a != e_.end() || b != other.e_.end()) {
      if (b == other.e_.end() || (a != e_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == e_.end() || b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        F s = a->second + c * b->second;
        if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    e_ = std::move(out);
  }

  void scale(const F& c) {
    if (c.is_zero()) {
      e_.clear();
      return;
    }
    for (auto& e : e_) e.second = e.second * c;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.e_ == b.e_; }

 private:
  std::vector<Entry> e_;
};

// Incremental row echelon form over a field. Each stored row has its
// smallest index as pivot, normalized to 1. Reducing a vector subtracts
// pivot rows in ascending pivot order, which leaves zero coordinates at
// every pivot position; the result is the unique such representative of the
// coset modulo the row space.
template <Field F>
class Echelon {
 public:
  explicit Echelon(std::size_t dimension = 0) : dim_(dimension) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVector<F>>& rows() const { return rows_; }

  SparseVector<F> reduce(SparseVector<F> v) const {
    std::size_t pos = 0;
    while (pos < v.nnz()) {
      auto it = pivots_.find(v[pos].first);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      F c = -v[pos].second;
      v.axpy(c, rows_[it->second]);
    }
    return v;
  }

  bool contains(const SparseVector<F>& v) const { return reduce(v).is_zero(); }

  // Adds v to the row space. Returns the new pivot, or nullopt if v was
  // already in the span.
  std::optional<std::size_t> insert(const SparseVector<F>& v) {
    SparseVector<F> r = reduce(v);
    if (r.is_zero()) return std::nullopt;
    std::size_t pivot = r[0].first;
    r.scale(r[0].second.inverse());
    pivots_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(r));
    return pivot;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [p, _] : pivots_) out.push_back(p);
    return out;
  }

  bool is_pivot(std::size_t column) const { return pivots_.count(column) != 0; }

  const SparseVector<F>& row_for_pivot(std::size_t column) const {
    return rows_[pivots_.at(column)];
  }

  // Back-substitutes so every pivot column is zero outside its own row.
  void make_reduced() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const std::size_t col = it->first;
      const SparseVector<F>& prow = rows_[it->second];
      for (auto jt = pivots_.begin(); jt->first < col; ++jt) {
        SparseVector<F>& other = rows_[jt->second];
        F c = other.get(col);
        if (!c.is_zero()) other.axpy(-c, prow);
      }
    }
  }

  bool is_reduced() const {
    for (const auto& [col, idx] : pivots_) {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r != idx && !rows_[r].get(col).is_zero()) return false;
      }
    }
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<SparseVector<F>> rows_;
  std::map<std::size_t, std::size_t> pivots_;
};

// Rank of a family of vectors.
template <Field F>
std::size_t rank_of(const std::vector<SparseVector<F>>& vectors) {
  Echelon<F> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace btkit
