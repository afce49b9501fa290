#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "towerdepth/field.hpp"
#include "towerdepth/sparse.hpp"

namespace td {

/// Incremental sparse row echelon form.
///
/// The pivot of a row is its highest index below `pivot_limit`; indices at or
/// above the limit are payload (right-hand sides) and never pivot. With this
/// rule the non-pivot coordinates of a reduced relation space are the
/// lexicographically first ones.
template <class T>
class Echelon {
 public:
  enum class Outcome { Added, Dependent, Inconsistent };

  Echelon(const FieldSpec& field, std::size_t ncols, std::optional<std::size_t> pivot_limit = std::nullopt)
      : field_(field),
        ncols_(ncols),
        limit_(pivot_limit.value_or(ncols)),
        pivot_row_(ncols, -1),
        acc_(ncols, zero<T>(field)),
        in_heap_(ncols, 0) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const FieldSpec& field() const { return field_; }

  Outcome insert(const SparseVec<T>& row) {
    SparseVec<T> r = reduce_leading(row);
    if (r.empty()) return Outcome::Dependent;
    // find the highest non-payload index
    std::optional<std::size_t> lead;
    for (std::size_t k = r.terms.size(); k-- > 0;) {
      if (r.terms[k].first < limit_) {
        lead = k;
        break;
      }
    }
    if (!lead) {
      inconsistent_ = true;
      return Outcome::Inconsistent;
    }
    T inv = one<T>(field_) / r.terms[*lead].second;
    if (!Scalar<T>::is_one(inv)) r = scaled(r, inv);
    Index pc = r.terms[*lead].first;
    pivot_row_[pc] = static_cast<long>(rows_.size());
    pivots_.push_back(pc);
    rows_.push_back(std::move(r));
    reduced_ = false;
    return Outcome::Added;
  }

  /// Remainder of v modulo the row space (fully reduced on non-payload indices).
  SparseVec<T> remainder(const SparseVec<T>& v) { return reduce_all(v); }

  bool in_span(const SparseVec<T>& v) { return remainder(v).empty(); }

  bool inconsistent() const { return inconsistent_; }

  /// Brings the rows into reduced form: every pivot column is zero in all other rows.
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    for (std::size_t k : order) {
      const auto& row = rows_[k];
      bool needs = false;
      for (const auto& [j, v] : row.terms) {
        if (j != pivots_[k] && j < limit_ && pivot_row_[j] >= 0) {
          needs = true;
          break;
        }
      }
      if (!needs) continue;
      acc_.add(row);
      for (const auto& [j, v] : row.terms) {
        if (j != pivots_[k] && j < limit_ && pivot_row_[j] >= 0) acc_.add(rows_[pivot_row_[j]], T(-v));
      }
      rows_[k] = acc_.take();
    }
    reduced_ = true;
  }

  const std::vector<SparseVec<T>>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }
  long pivot_row(Index col) const { return pivot_row_[col]; }
  bool is_pivot(Index col) const { return pivot_row_[col] >= 0; }

 private:
  // Reduces until the highest non-payload index has no pivot.
  SparseVec<T> reduce_leading(const SparseVec<T>& v) { return reduce_impl(v, false); }
  SparseVec<T> reduce_all(const SparseVec<T>& v) { return reduce_impl(v, true); }

  SparseVec<T> reduce_impl(const SparseVec<T>& v, bool full) {
    if (v.empty()) return v;
    std::priority_queue<Index> heap;
    for (const auto& [i, x] : v.terms) {
      acc_.add(i, x);
      if (i < limit_ && !in_heap_[i]) {
        in_heap_[i] = 1;
        heap.push(i);
      }
    }
    while (!heap.empty()) {
      Index i = heap.top();
      heap.pop();
      in_heap_[i] = 0;
      long pr = pivot_row_[i];
      T val = acc_.peek(i);
      if (Scalar<T>::is_zero(val)) continue;
      if (pr < 0) {
        if (!full) break;
        continue;
      }
      for (const auto& [j, x] : rows_[pr].terms) {
        acc_.add(j, T(-(val * x)));
        if (j < i && !in_heap_[j]) {
          in_heap_[j] = 1;
          heap.push(j);
        }
      }
    }
    while (!heap.empty()) {
      in_heap_[heap.top()] = 0;
      heap.pop();
    }
    return acc_.take();
  }

  FieldSpec field_;
  std::size_t ncols_;
  std::size_t limit_;
  std::vector<SparseVec<T>> rows_;
  std::vector<Index> pivots_;
  std::vector<long> pivot_row_;
  Accumulator<T> acc_;
  std::vector<char> in_heap_;
  bool reduced_ = true;
  bool inconsistent_ = false;
};

/// A subspace in "pivot-normal" form: basis[k] has coefficient 1 at
/// pivots[k] and 0 at every other pivot, so coordinates are read off directly.
template <class T>
struct Subspace {
  FieldSpec field;
  std::size_t ambient = 0;
  std::vector<SparseVec<T>> basis;
  std::vector<Index> pivots;

  std::size_t dim() const { return basis.size(); }

  /// Coordinates of v, assuming v lies in the subspace.
  std::vector<T> coords(const SparseVec<T>& v) const {
    std::vector<T> c(basis.size(), zero<T>(field));
    ensure_lookup();
    for (const auto& [i, x] : v.terms) {
      long k = lookup_[i];
      if (k >= 0) c[k] = x;
    }
    return c;
  }

  SparseVec<T> coords_sparse(const SparseVec<T>& v) const {
    ensure_lookup();
    std::vector<std::pair<Index, T>> raw;
    for (const auto& [i, x] : v.terms) {
      long k = lookup_[i];
      if (k >= 0) raw.emplace_back(static_cast<Index>(k), x);
    }
    return collect(std::move(raw));
  }

  SparseVec<T> element(const std::vector<T>& c) const {
    Accumulator<T> acc(ambient, zero<T>(field));
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!Scalar<T>::is_zero(c[k])) acc.add(basis[k], c[k]);
    }
    return acc.take();
  }

  SparseVec<T> element(const SparseVec<T>& c) const {
    Accumulator<T> acc(ambient, zero<T>(field));
    for (const auto& [k, x] : c.terms) acc.add(basis[k], x);
    return acc.take();
  }

  bool contains(const SparseVec<T>& v) const { return element(coords_sparse(v)) == v; }

 private:
  void ensure_lookup() const {
    if (lookup_.size() == ambient) return;
    lookup_.assign(ambient, -1);
    for (std::size_t k = 0; k < pivots.size(); ++k) lookup_[pivots[k]] = static_cast<long>(k);
  }
  mutable std::vector<long> lookup_;
};

/// Span of the given vectors in pivot-normal form.
template <class T>
Subspace<T> span_of(const FieldSpec& field, std::size_t ambient, const std::vector<SparseVec<T>>& vectors) {
  Echelon<T> ech(field, ambient);
  for (const auto& v : vectors) ech.insert(v);
  ech.make_reduced();
  Subspace<T> s;
  s.field = field;
  s.ambient = ambient;
  std::vector<std::size_t> order(ech.rank());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ech.pivots()[a] < ech.pivots()[b]; });
  for (auto k : order) {
    s.basis.push_back(ech.rows()[k]);
    s.pivots.push_back(ech.pivots()[k]);
  }
  return s;
}

/// Null space of the equations sum_j row[j] x_j = 0 over `nvars` unknowns.
/// Basis vectors are indexed by the free unknowns in increasing order.
template <class T>
Subspace<T> kernel_of(Echelon<T>& ech) {
  ech.make_reduced();
  const std::size_t n = ech.ncols();
  const FieldSpec& field = ech.field();
  std::vector<long> free_index(n, -1);
  Subspace<T> s;
  s.field = field;
  s.ambient = n;
  for (Index j = 0; j < n; ++j) {
    if (!ech.is_pivot(j)) {
      free_index[j] = static_cast<long>(s.pivots.size());
      s.pivots.push_back(j);
    }
  }
  std::vector<std::vector<std::pair<Index, T>>> raw(s.pivots.size());
  for (std::size_t k = 0; k < s.pivots.size(); ++k) raw[k].emplace_back(s.pivots[k], one<T>(field));
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    Index pc = ech.pivots()[r];
    for (const auto& [j, v] : ech.rows()[r].terms) {
      if (j == pc) continue;
      raw[free_index[j]].emplace_back(pc, T(-v));
    }
  }
  s.basis.reserve(raw.size());
  for (auto& r : raw) s.basis.push_back(collect(std::move(r)));
  return s;
}

template <class T>
Subspace<T> kernel_of(const FieldSpec& field, std::size_t nvars, const std::vector<SparseVec<T>>& equations) {
  Echelon<T> ech(field, nvars);
  for (const auto& e : equations) ech.insert(e);
  return kernel_of(ech);
}

/// Solves sum_j x_j * columns[j] = target. Returns the solution with free
/// unknowns set to zero, or nullopt if the target is outside the column span.
template <class T>
std::optional<SparseVec<T>> solve_columns(const FieldSpec& field, std::size_t ambient,
                                          const std::vector<SparseVec<T>>& columns, const SparseVec<T>& target) {
  const std::size_t n = columns.size();
  std::vector<std::vector<std::pair<Index, T>>> rows(ambient);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [i, v] : columns[j].terms) rows[i].emplace_back(static_cast<Index>(j), v);
  }
  for (const auto& [i, v] : target.terms) rows[i].emplace_back(static_cast<Index>(n), v);
  Echelon<T> ech(field, n + 1, n);
  for (auto& r : rows) {
    SparseVec<T> row;
    row.terms = std::move(r);
    if (row.empty()) continue;
    if (ech.insert(row) == Echelon<T>::Outcome::Inconsistent) return std::nullopt;
  }
  ech.make_reduced();
  std::vector<std::pair<Index, T>> raw;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const auto& row = ech.rows()[r];
    if (!row.terms.empty() && row.terms.back().first == n) raw.emplace_back(ech.pivots()[r], row.terms.back().second);
  }
  return collect(std::move(raw));
}

}  // namespace td
