#pragma once

// Small helpers shared by the galois sources.

#include "towerdepth/galois.hpp"

namespace td::detail {

template <class T>
SparseVec<T> unit_vec(Index i, const FieldSpec& f) {
  return SparseVec<T>::unit(i, one<T>(f));
}

/// Σ x^1 m x^2 for x in quotient coordinates of a tensor square of A.
template <class T>
SparseVec<T> sandwich(const FinDimAlgebra<T>& a, const TensorProduct<T>& x, const SparseVec<T>& tensor,
                      const SparseVec<T>& m) {
  SparseVec<T> out;
  for (const auto& [q, c] : tensor.terms) {
    const auto& [i, j] = x.pairs[q];
    out = out + scaled(a.mul(a.mul(unit_vec<T>(i, a.field), m), unit_vec<T>(j, a.field)), c);
  }
  return out;
}

/// Σ x^1 x^2.
template <class T>
SparseVec<T> multiply_out(const FinDimAlgebra<T>& a, const TensorProduct<T>& x, const SparseVec<T>& tensor) {
  SparseVec<T> out;
  for (const auto& [q, c] : tensor.terms) {
    const auto& [i, j] = x.pairs[q];
    out = out + scaled(a.basis_product(i, j), c);
  }
  return out;
}

/// Σ x^1 ⊗ f(x^2), with f left linear over the balancing subalgebra.
template <class T>
SparseVec<T> apply_right_leg(const TensorProduct<T>& x, const SparseVec<T>& tensor, const SparseMap<T>& f) {
  SparseVec<T> out;
  for (const auto& [q, c] : tensor.terms) {
    const auto& [i, j] = x.pairs[q];
    out = out + x.element(SparseVec<T>::unit(i, c), f.cols[j]);
  }
  return out;
}

/// A bimodule over a left and a right algebra on the basis of a subspace,
/// with actions given on ambient vectors.
template <class T>
Bimodule<T> subspace_bimodule(AlgebraPtr<T> left, AlgebraPtr<T> right, const Subspace<T>& s,
                              std::function<SparseVec<T>(Index, const SparseVec<T>&)> act_left,
                              std::function<SparseVec<T>(const SparseVec<T>&, Index)> act_right) {
  Bimodule<T> m;
  m.left = std::move(left);
  m.right = std::move(right);
  m.dim = s.dim();
  auto space = std::make_shared<Subspace<T>>(s);
  m.left_basis = [space, act_left](Index a, Index k) { return space->coords_sparse(act_left(a, space->basis[k])); };
  m.right_basis = [space, act_right](Index k, Index a) { return space->coords_sparse(act_right(space->basis[k], a)); };
  return m;
}

/// {x : α(x) = α(1) x for every α in maps}.
template <class T>
Subspace<T> fixed_points(const FinDimAlgebra<T>& a, const std::vector<SparseMap<T>>& maps) {
  std::vector<SparseVec<T>> eqs;
  for (const auto& alpha : maps) {
    auto lam = a.left_mult(alpha.apply(a.unit));
    for (Index i = 0; i < a.dim; ++i) lam.cols[i] = alpha.cols[i] - lam.cols[i];
    for (auto& row : lam.rows_view())
      if (!row.empty()) eqs.push_back(std::move(row));
  }
  return kernel_of(a.field, a.dim, eqs);
}

template <class T>
bool same_subspace(const Subspace<T>& x, const Subspace<T>& y) {
  if (x.dim() != y.dim()) return false;
  for (const auto& v : x.basis)
    if (!y.contains(v)) return false;
  return true;
}

}  // namespace td::detail
