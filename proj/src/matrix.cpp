#include "towerdepth/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace td {

namespace {

template <class T>
void check_entries(const FieldSpec& f, const std::vector<T>& xs) {
  if (!Scalar<T>::compatible(f)) throw FieldMismatch("scalar type does not match field " + f.name());
  if constexpr (std::is_same_v<T, Fp>) {
    for (const auto& x : xs) {
      if (x.p != f.p) throw FieldMismatch("entry modulo " + std::to_string(x.p) + " in matrix over " + f.name());
    }
  }
}

// Chooses the pivot row for column c among rows [r, rows).
template <class T>
std::optional<std::size_t> choose_pivot(const ExactMatrix<T>& m, std::size_t r, std::size_t c) {
  std::optional<std::size_t> best;
  std::size_t best_weight = 0;
  for (std::size_t i = r; i < m.rows; ++i) {
    const T& x = m(i, c);
    if (Scalar<T>::is_zero(x)) continue;
    std::size_t w = Scalar<T>::weight(x);
    if (!best || w < best_weight) {
      best = i;
      best_weight = w;
      if constexpr (std::is_same_v<T, Fp>) break;
    }
  }
  return best;
}

template <class T>
void swap_rows(ExactMatrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

template <class T>
void normalize_row(ExactMatrix<T>& m, std::size_t r, std::size_t c) {
  T inv = one<T>(m.field) / m(r, c);
  for (std::size_t j = c; j < m.cols; ++j) {
    if (!Scalar<T>::is_zero(m(r, j))) m(r, j) *= inv;
  }
}

template <class T>
void eliminate_row(ExactMatrix<T>& m, std::size_t i, std::size_t r, std::size_t c) {
  T f = m(i, c);
  if (Scalar<T>::is_zero(f)) return;
  for (std::size_t j = c; j < m.cols; ++j) {
    const T& pj = m(r, j);
    if (!Scalar<T>::is_zero(pj)) m(i, j) -= f * pj;
  }
}

template <class T, bool Parallel>
Rref<T> rref_impl(ExactMatrix<T> m, std::optional<std::size_t> pivot_limit) {
  check_entries(m.field, m.entries);
  const std::size_t limit = std::min(pivot_limit.value_or(m.cols), m.cols);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows; ++c) {
    auto p = choose_pivot(m, r, c);
    if (!p) continue;
    swap_rows(m, r, *p);
    normalize_row(m, r, c);
    const long nrows = static_cast<long>(m.rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 8) if (m.rows * (m.cols - c) > 4096)
      for (long i = 0; i < nrows; ++i) {
        if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c);
      }
    } else {
      for (long i = 0; i < nrows; ++i) {
        if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

template <class T>
ExactMatrix<T> ExactMatrix<T>::transpose() const {
  ExactMatrix t(field, cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class T>
ExactMatrix<T> ExactMatrix<T>::operator*(const ExactMatrix& o) const {
  if (!(field == o.field)) throw FieldMismatch("matrix product over different fields");
  if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(field, rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const T& a = (*this)(i, k);
      if (Scalar<T>::is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

template <class T>
std::vector<T> ExactMatrix<T>::apply(const std::vector<T>& x) const {
  if (x.size() != cols) throw std::invalid_argument("vector length does not match matrix columns");
  std::vector<T> y(rows, zero<T>(field));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

template <class T>
bool ExactMatrix<T>::is_zero() const {
  for (const auto& x : entries)
    if (!Scalar<T>::is_zero(x)) return false;
  return true;
}

template <class T>
Rref<T> rref_parallel(ExactMatrix<T> m, std::optional<std::size_t> pivot_limit) {
  return rref_impl<T, true>(std::move(m), pivot_limit);
}

template <class T>
Rref<T> rref_serial(ExactMatrix<T> m, std::optional<std::size_t> pivot_limit) {
  return rref_impl<T, false>(std::move(m), pivot_limit);
}

template <class T>
std::size_t rank(const ExactMatrix<T>& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return rref_parallel(m).pivot_cols.size();
}

template <class T>
std::optional<std::vector<T>> solve(const ExactMatrix<T>& m, const std::vector<T>& rhs) {
  if (rhs.size() != m.rows) throw std::invalid_argument("right-hand side length does not match matrix rows");
  check_entries(m.field, rhs);
  ExactMatrix<T> aug(m.field, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = rhs[i];
  }
  auto rr = rref_parallel(std::move(aug), m.cols);
  const auto& red = rr.reduced;
  for (std::size_t i = rr.pivot_cols.size(); i < m.rows; ++i) {
    if (!Scalar<T>::is_zero(red(i, m.cols))) return std::nullopt;
  }
  std::vector<T> x(m.cols, zero<T>(m.field));
  for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) x[rr.pivot_cols[k]] = red(k, m.cols);
  return x;
}

template <class T>
std::vector<std::vector<T>> kernel(const ExactMatrix<T>& m) {
  auto rr = rref_parallel(m);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : rr.pivot_cols) is_pivot[c] = 1;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols, zero<T>(m.field));
    v[f] = one<T>(m.field);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k) v[rr.pivot_cols[k]] = -rr.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<std::vector<T>> span_membership(const ExactMatrix<T>& target, const std::vector<ExactMatrix<T>>& generators) {
  for (const auto& g : generators) {
    if (!(g.field == target.field)) throw FieldMismatch("generator over a different field");
    if (g.rows != target.rows || g.cols != target.cols) throw std::invalid_argument("generator shape mismatch");
  }
  const std::size_t n = target.rows * target.cols;
  ExactMatrix<T> cols(target.field, n, generators.size());
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (std::size_t e = 0; e < n; ++e) cols(e, k) = generators[k].entries[e];
  if (generators.empty()) {
    if (target.is_zero()) return std::vector<T>{};
    return std::nullopt;
  }
  return solve(cols, target.entries);
}

template <class T>
ExactMatrix<T> from_sparse_rows(const FieldSpec& f, std::size_t cols, const std::vector<SparseVec<T>>& rows) {
  ExactMatrix<T> m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i].terms) m(i, j) = v;
  return m;
}

#define TD_INSTANTIATE(T)                                                                                  \
  template struct ExactMatrix<T>;                                                                          \
  template Rref<T> rref_parallel<T>(ExactMatrix<T>, std::optional<std::size_t>);                           \
  template Rref<T> rref_serial<T>(ExactMatrix<T>, std::optional<std::size_t>);                             \
  template std::size_t rank<T>(const ExactMatrix<T>&);                                                     \
  template std::optional<std::vector<T>> solve<T>(const ExactMatrix<T>&, const std::vector<T>&);           \
  template std::vector<std::vector<T>> kernel<T>(const ExactMatrix<T>&);                                   \
  template std::optional<std::vector<T>> span_membership<T>(const ExactMatrix<T>&,                         \
                                                            const std::vector<ExactMatrix<T>>&);           \
  template ExactMatrix<T> from_sparse_rows<T>(const FieldSpec&, std::size_t, const std::vector<SparseVec<T>>&);

TD_INSTANTIATE(Rational)
TD_INSTANTIATE(Fp)

}  // namespace td
