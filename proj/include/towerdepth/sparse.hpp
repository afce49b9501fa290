#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "towerdepth/field.hpp"

namespace td {

using Index = std::uint32_t;

/// Sparse vector: strictly increasing indices, no stored zeros.
template <class T>
struct SparseVec {
  std::vector<std::pair<Index, T>> terms;

  SparseVec() = default;

  static SparseVec unit(Index i, const T& one_value) {
    SparseVec v;
    v.terms.emplace_back(i, one_value);
    return v;
  }

  bool empty() const { return terms.empty(); }
  std::size_t nnz() const { return terms.size(); }
  Index last_index() const { return terms.back().first; }

  /// Coefficient at i (zero if absent). Requires a zero value to return.
  T at(Index i, const T& zero_value) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, Index k) { return t.first < k; });
    if (it != terms.end() && it->first == i) return it->second;
    return zero_value;
  }

  /// Appends a term; indices must arrive in increasing order.
  void push(Index i, const T& value) {
    if (!Scalar<T>::is_zero(value)) terms.emplace_back(i, value);
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
      if (a.terms[k].first != b.terms[k].first || a.terms[k].second != b.terms[k].second) return false;
    }
    return true;
  }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }
};

/// Returns x + a*y.
template <class T>
SparseVec<T> axpy(const SparseVec<T>& x, const T& a, const SparseVec<T>& y) {
  SparseVec<T> out;
  if (Scalar<T>::is_zero(a)) return x;
  out.terms.reserve(x.terms.size() + y.terms.size());
  std::size_t i = 0, j = 0;
  while (i < x.terms.size() || j < y.terms.size()) {
    if (j == y.terms.size() || (i < x.terms.size() && x.terms[i].first < y.terms[j].first)) {
      out.terms.push_back(x.terms[i++]);
    } else if (i == x.terms.size() || y.terms[j].first < x.terms[i].first) {
      out.terms.emplace_back(y.terms[j].first, a * y.terms[j].second);
      ++j;
    } else {
      T s = x.terms[i].second + a * y.terms[j].second;
      if (!Scalar<T>::is_zero(s)) out.terms.emplace_back(x.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace detail {
template <class T, bool Subtract>
SparseVec<T> merge(const SparseVec<T>& x, const SparseVec<T>& y) {
  SparseVec<T> out;
  out.terms.reserve(x.terms.size() + y.terms.size());
  std::size_t i = 0, j = 0;
  while (i < x.terms.size() || j < y.terms.size()) {
    if (j == y.terms.size() || (i < x.terms.size() && x.terms[i].first < y.terms[j].first)) {
      out.terms.push_back(x.terms[i++]);
    } else if (i == x.terms.size() || y.terms[j].first < x.terms[i].first) {
      if constexpr (Subtract) {
        out.terms.emplace_back(y.terms[j].first, -y.terms[j].second);
      } else {
        out.terms.push_back(y.terms[j]);
      }
      ++j;
    } else {
      T s = Subtract ? T(x.terms[i].second - y.terms[j].second) : T(x.terms[i].second + y.terms[j].second);
      if (!Scalar<T>::is_zero(s)) out.terms.emplace_back(x.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace detail

template <class T>
SparseVec<T> operator+(const SparseVec<T>& x, const SparseVec<T>& y) {
  return detail::merge<T, false>(x, y);
}

template <class T>
SparseVec<T> operator-(const SparseVec<T>& x, const SparseVec<T>& y) {
  return detail::merge<T, true>(x, y);
}

template <class T>
SparseVec<T> scaled(const SparseVec<T>& x, const T& a) {
  SparseVec<T> out;
  if (Scalar<T>::is_zero(a)) return out;
  out.terms.reserve(x.terms.size());
  for (const auto& [i, v] : x.terms) out.terms.emplace_back(i, a * v);
  return out;
}

/// Builds a sparse vector from unsorted (index, value) pairs, summing duplicates.
template <class T>
SparseVec<T> collect(std::vector<std::pair<Index, T>> raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<T> out;
  for (auto& [i, v] : raw) {
    if (!out.terms.empty() && out.terms.back().first == i) {
      out.terms.back().second += v;
      if (Scalar<T>::is_zero(out.terms.back().second)) out.terms.pop_back();
    } else if (!Scalar<T>::is_zero(v)) {
      out.terms.emplace_back(i, std::move(v));
    }
  }
  return out;
}

/// Dense scratch accumulator reused across sparse combinations.
template <class T>
class Accumulator {
 public:
  Accumulator(std::size_t n, const T& zero_value) : values_(n, zero_value), used_(n, 0), zero_(zero_value) {}

  void add(Index i, const T& v) {
    if (!used_[i]) {
      used_[i] = 1;
      touched_.push_back(i);
      values_[i] = v;
    } else {
      values_[i] += v;
    }
  }
  void add(const SparseVec<T>& x, const T& a) {
    for (const auto& [i, v] : x.terms) add(i, a * v);
  }
  void add(const SparseVec<T>& x) {
    for (const auto& [i, v] : x.terms) add(i, v);
  }

  /// Extracts the accumulated vector and resets the scratch space.
  SparseVec<T> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec<T> out;
    out.terms.reserve(touched_.size());
    for (Index i : touched_) {
      if (!Scalar<T>::is_zero(values_[i])) out.terms.emplace_back(i, values_[i]);
      values_[i] = zero_;
      used_[i] = 0;
    }
    touched_.clear();
    return out;
  }

  std::size_t size() const { return values_.size(); }
  const T& peek(Index i) const { return used_[i] ? values_[i] : zero_; }

 private:
  std::vector<T> values_;
  std::vector<char> used_;
  std::vector<Index> touched_;
  T zero_;
};

/// Sparse linear map stored by columns: column j is the image of basis vector j.
template <class T>
struct SparseMap {
  std::size_t rows = 0;
  std::vector<SparseVec<T>> cols;

  SparseMap() = default;
  SparseMap(std::size_t r, std::size_t c) : rows(r), cols(c) {}

  std::size_t ncols() const { return cols.size(); }

  SparseVec<T> apply(const SparseVec<T>& x) const {
    if (x.empty()) return {};
    if (x.terms.size() == 1) return scaled(cols[x.terms[0].first], x.terms[0].second);
    std::vector<std::pair<Index, T>> raw;
    for (const auto& [j, a] : x.terms) {
      for (const auto& [i, v] : cols[j].terms) raw.emplace_back(i, a * v);
    }
    return collect(std::move(raw));
  }

  /// this ∘ other
  SparseMap compose(const SparseMap& other) const {
    SparseMap out(rows, other.ncols());
    for (std::size_t j = 0; j < other.ncols(); ++j) out.cols[j] = apply(other.cols[j]);
    return out;
  }

  bool is_zero() const {
    return std::all_of(cols.begin(), cols.end(), [](const auto& c) { return c.empty(); });
  }

  /// Row-major view: row i lists (column, value).
  std::vector<SparseVec<T>> rows_view() const {
    std::vector<SparseVec<T>> r(rows);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (const auto& [i, v] : cols[j].terms) r[i].terms.emplace_back(static_cast<Index>(j), v);
    }
    return r;
  }

  SparseMap transpose() const {
    SparseMap t(cols.size(), rows);
    t.cols = rows_view();
    return t;
  }

  friend bool operator==(const SparseMap& a, const SparseMap& b) { return a.rows == b.rows && a.cols == b.cols; }
};

template <class T>
SparseMap<T> identity_map(std::size_t n, const T& one_value) {
  SparseMap<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols[i] = SparseVec<T>::unit(static_cast<Index>(i), one_value);
  return m;
}

/// Linear combination of maps with equal shape.
template <class T>
SparseMap<T> combine(const std::vector<const SparseMap<T>*>& maps, const std::vector<T>& coeffs, std::size_t rows,
                     std::size_t cols) {
  SparseMap<T> out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::pair<Index, T>> raw;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (Scalar<T>::is_zero(coeffs[k])) continue;
      for (const auto& [i, v] : maps[k]->cols[j].terms) raw.emplace_back(i, coeffs[k] * v);
    }
    out.cols[j] = collect(std::move(raw));
  }
  return out;
}

}  // namespace td
