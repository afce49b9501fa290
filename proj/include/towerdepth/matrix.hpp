#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "towerdepth/echelon.hpp"
#include "towerdepth/field.hpp"
#include "towerdepth/sparse.hpp"

namespace td {

/// Dense matrix over Q or F_p, row-major.
template <class T>
struct ExactMatrix {
  FieldSpec field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> entries;

  ExactMatrix() = default;
  ExactMatrix(const FieldSpec& f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), entries(r * c, zero<T>(f)) {}

  static ExactMatrix identity(const FieldSpec& f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one<T>(f);
    return m;
  }

  T& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  std::vector<T> apply(const std::vector<T>& x) const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field == b.field && a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

/// Result of row reduction: the reduced matrix and its pivot columns.
template <class T>
struct Rref {
  ExactMatrix<T> reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. The parallel kernel splits each elimination step
/// across rows with OpenMP; the serial kernel is the reference it is tested against.
template <class T>
Rref<T> rref_parallel(ExactMatrix<T> m, std::optional<std::size_t> pivot_limit = std::nullopt);
template <class T>
Rref<T> rref_serial(ExactMatrix<T> m, std::optional<std::size_t> pivot_limit = std::nullopt);

template <class T>
std::size_t rank(const ExactMatrix<T>& m);

/// Some x with m x = rhs, or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const ExactMatrix<T>& m, const std::vector<T>& rhs);

/// Basis of {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> kernel(const ExactMatrix<T>& m);

/// Coefficients c with sum_k c_k generators[k] = target, or nullopt.
template <class T>
std::optional<std::vector<T>> span_membership(const ExactMatrix<T>& target, const std::vector<ExactMatrix<T>>& generators);

template <class T>
ExactMatrix<T> from_sparse_rows(const FieldSpec& f, std::size_t cols, const std::vector<SparseVec<T>>& rows);

}  // namespace td
