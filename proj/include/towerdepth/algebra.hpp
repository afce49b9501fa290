#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "towerdepth/echelon.hpp"
#include "towerdepth/field.hpp"
#include "towerdepth/groups.hpp"
#include "towerdepth/sparse.hpp"

namespace td {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of an exhaustive identity check.
struct Audit {
  bool ok = true;
  std::string detail;  // first failure, empty when ok

  void fail(std::string what) {
    if (ok) detail = std::move(what);
    ok = false;
  }
  void merge(const Audit& other) {
    if (!other.ok) fail(other.detail);
  }
};

/// Unital algebra with a fixed basis b_0, ..., b_{dim-1}.
template <class T>
struct FinDimAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// table[i * dim + j] = b_i b_j
  std::vector<SparseVec<T>> table;
  SparseVec<T> unit;
  /// Elements generating the algebra together with the unit.
  std::vector<SparseVec<T>> generators;
  std::string name;

  const SparseVec<T>& basis_product(Index i, Index j) const { return table[static_cast<std::size_t>(i) * dim + j]; }
  SparseVec<T> basis(Index i) const { return SparseVec<T>::unit(i, one<T>(field)); }
  SparseVec<T> mul(const SparseVec<T>& x, const SparseVec<T>& y) const;
  /// Matrix of z -> x z.
  SparseMap<T> left_mult(const SparseVec<T>& x) const;
  /// Matrix of z -> z x.
  SparseMap<T> right_mult(const SparseVec<T>& x) const;
  bool is_commutative() const;
};

template <class T>
using AlgebraPtr = std::shared_ptr<const FinDimAlgebra<T>>;

/// Unit, generation and associativity checks. Associativity is checked on
/// (basis, basis, generator) triples; the set of z with (xy)z = x(yz) for all
/// x, y is a subalgebra, so together with the generation check this covers all triples.
template <class T>
Audit audit_algebra(const FinDimAlgebra<T>& a);

/// Validates and freezes an algebra; throws AlgebraError when an audit fails.
template <class T>
AlgebraPtr<T> make_algebra(FinDimAlgebra<T> a);

template <class T>
AlgebraPtr<T> base_field_algebra(const FieldSpec& field);

template <class T>
AlgebraPtr<T> group_algebra(const PermGroup& g, const FieldSpec& field);

template <class T>
AlgebraPtr<T> opposite(const AlgebraPtr<T>& a);

/// Unital injective algebra map sub -> sup, stored by columns.
template <class T>
struct Embedding {
  AlgebraPtr<T> sub;
  AlgebraPtr<T> sup;
  SparseMap<T> map;

  SparseVec<T> operator()(const SparseVec<T>& x) const { return map.apply(x); }
  const SparseVec<T>& image(Index i) const { return map.cols[i]; }
};

template <class T>
Audit audit_embedding(const Embedding<T>& e);

/// Validates an embedding (injective, unital, multiplicative); throws AlgebraError.
template <class T>
Embedding<T> make_embedding(AlgebraPtr<T> sub, AlgebraPtr<T> sup, SparseMap<T> map);

template <class T>
Embedding<T> identity_embedding(const AlgebraPtr<T>& a);

/// The base field F -> A, 1 -> unit.
template <class T>
Embedding<T> scalar_embedding(const AlgebraPtr<T>& a);

/// outer ∘ inner
template <class T>
Embedding<T> compose(const Embedding<T>& outer, const Embedding<T>& inner);

/// F[H] -> F[G] induced by the inclusion H ⊆ G.
template <class T>
Embedding<T> subgroup_embedding(const AlgebraPtr<T>& fh, const PermGroup& h, const AlgebraPtr<T>& fg, const PermGroup& g);

/// The same map viewed between opposite algebras.
template <class T>
Embedding<T> opposite_embedding(const Embedding<T>& e, const AlgebraPtr<T>& sub_op, const AlgebraPtr<T>& sup_op);

/// Tower C -> B -> A of unital embeddings.
template <class T>
struct Tower {
  AlgebraPtr<T> a, b, c;
  Embedding<T> incl_cb;
  Embedding<T> incl_ba;
  Embedding<T> incl_ca;  // composite
};

template <class T>
Tower<T> make_tower(Embedding<T> incl_cb, Embedding<T> incl_ba);

/// F[K] -> F[H] -> F[G] for K ⊆ H ⊆ G.
template <class T>
Tower<T> group_tower(const PermGroup& g, const PermGroup& h, const PermGroup& k, const FieldSpec& field);

/// Tower A | B | B.
template <class T>
Tower<T> degenerate_tower(const Embedding<T>& incl_ba);

/// L-R bimodule on a vector space with basis m_0, ..., m_{dim-1}. Actions are
/// given on basis elements and extended bilinearly.
template <class T>
struct Bimodule {
  AlgebraPtr<T> left;
  AlgebraPtr<T> right;
  std::size_t dim = 0;
  /// left_basis(a, k) = b_a · m_k, right_basis(k, a) = m_k · b_a
  std::function<SparseVec<T>(Index, Index)> left_basis;
  std::function<SparseVec<T>(Index, Index)> right_basis;

  const FieldSpec& field() const { return left->field; }
  SparseVec<T> act_left(const SparseVec<T>& a, const SparseVec<T>& m) const;
  SparseVec<T> act_right(const SparseVec<T>& m, const SparseVec<T>& a) const;
  /// Matrix of m -> a·m.
  SparseMap<T> left_matrix(const SparseVec<T>& a) const;
  /// Matrix of m -> m·a.
  SparseMap<T> right_matrix(const SparseVec<T>& a) const;
};

/// Unitality, associativity (on basis × generator pairs) and commuting actions.
template <class T>
Audit audit_bimodule(const Bimodule<T>& m);

/// A as an A-A-bimodule.
template <class T>
Bimodule<T> regular_bimodule(const AlgebraPtr<T>& a);

/// Restriction of scalars along lhs: L' -> L and rhs: R' -> R.
template <class T>
Bimodule<T> restrict_bimodule(const Bimodule<T>& m, const Embedding<T>& lhs, const Embedding<T>& rhs);

/// X ⊗_B Y realized as a quotient of the tensor product over the field. The
/// quotient basis consists of the simple tensors m_i ⊗ n_j that are not pivots
/// of the relation space (lexicographically first complement).
template <class T>
struct TensorProduct {
  Bimodule<T> module;
  std::size_t dim_x = 0;
  std::size_t dim_y = 0;
  /// quotient basis element q is the class of m_{pairs[q].first} ⊗ n_{pairs[q].second}
  std::vector<std::pair<Index, Index>> pairs;
  /// proj[i * dim_y + j] = class of m_i ⊗ n_j in quotient coordinates
  std::shared_ptr<const std::vector<SparseVec<T>>> proj;
  std::size_t relation_rank = 0;

  std::size_t dim() const { return module.dim; }
  const SparseVec<T>& simple(Index i, Index j) const { return (*proj)[static_cast<std::size_t>(i) * dim_y + j]; }
  /// Class of x ⊗ y.
  SparseVec<T> element(const SparseVec<T>& x, const SparseVec<T>& y) const;
};

template <class T>
TensorProduct<T> tensor_over(const Bimodule<T>& x, const Bimodule<T>& y);

/// {m : ι_L(c) m = m ι_R(c) for all c}, with C acting through the two embeddings.
template <class T>
Subspace<T> centralizer(const Bimodule<T>& m, const Embedding<T>& into_left, const Embedding<T>& into_right);

/// A^C for C -> A.
template <class T>
Subspace<T> algebra_centralizer(const Embedding<T>& c_in_a);

/// Basis of the L-R-bimodule maps m -> n, each as a dim(n) × dim(m) map.
template <class T>
std::vector<SparseMap<T>> bimodule_hom(const Bimodule<T>& m, const Bimodule<T>& n);

/// The subalgebra generated by `gens` (closure under right multiplication from 1).
template <class T>
Subspace<T> generated_subalgebra(const FinDimAlgebra<T>& a, const std::vector<SparseVec<T>>& gens);

/// Picks generators greedily among the basis elements, then validates as make_algebra.
template <class T>
AlgebraPtr<T> make_algebra_generated(FinDimAlgebra<T> a);

/// A subspace that contains 1 and is closed under multiplication, as an
/// algebra in the basis of the subspace, together with its embedding.
template <class T>
Embedding<T> subalgebra(const AlgebraPtr<T>& a, const Subspace<T>& s, const std::string& name);

/// Whether two algebras have identical structure constants.
template <class T>
bool same_algebra(const AlgebraPtr<T>& x, const AlgebraPtr<T>& y);

}  // namespace td
