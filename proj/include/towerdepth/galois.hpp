#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "towerdepth/algebra.hpp"
#include "towerdepth/depth.hpp"

namespace td {

/// Elements of a tensor square centralizing a subalgebra, in quotient coordinates.
template <class T>
struct TensorSubspace {
  std::shared_ptr<const TensorProduct<T>> x;
  Subspace<T> space;
  std::size_t dim() const { return space.dim(); }
};

/// A space of linear maps A -> A. Flattened coordinates put entry (r, c) at c * n + r.
template <class T>
struct MapSubspace {
  std::size_t n = 0;
  std::vector<SparseMap<T>> maps;
  Subspace<T> flat;

  std::size_t dim() const { return maps.size(); }
  SparseVec<T> flatten(const SparseMap<T>& m) const;
  SparseMap<T> unflatten(const SparseVec<T>& v) const;
  bool contains(const SparseMap<T>& m) const { return flat.contains(flatten(m)); }
  SparseVec<T> coords(const SparseMap<T>& m) const { return flat.coords_sparse(flatten(m)); }
  /// Σ c_k maps[k].
  SparseMap<T> element(const SparseVec<T>& c) const { return unflatten(flat.element(c)); }
};

template <class T>
MapSubspace<T> map_subspace(const FieldSpec& f, std::size_t n, const std::vector<SparseMap<T>>& maps);

/// The bimodules and rings attached to a tower A | B | C:
/// P = (A⊗_B A)^C, Q = (A⊗_C A)^B, T = (A⊗_B A)^B, U = (A⊗_C A)^C,
/// R = A^B, V = A^C, E = End(_B A_C), J = End(_C A_B), S = End(_C A_C), S_cal = End(_B A_B).
template <class T>
struct StandardBimodules {
  Tower<T> tower;
  std::shared_ptr<const TensorProduct<T>> xb, xc;
  TensorSubspace<T> p, q, t, u;
  Subspace<T> r, v;
  MapSubspace<T> e, j, s, s_cal;
  /// T and U with tt' = t'^1 t^1 ⊗ t^2 t'^2 (basis of the centralizer subspace).
  AlgebraPtr<T> t_ring, u_ring;
  Embedding<T> r_in_a, v_in_a;
  Audit ring_laws;
  std::size_t dim_v_via_end = 0, dim_p_via_hom = 0, dim_q_via_hom = 0;
};

template <class T>
StandardBimodules<T> standard_bimodules(const Tower<T>& t, const Caps& caps = {});

/// x_m^1 ... x_1^1 ⊗ x_1^2 ... x_m^2 for x_1 innermost, each x_k an element of its
/// tensor square, evaluated on quotient-basis representatives and projected into `out`.
template <class T>
SparseVec<T> nest(const FinDimAlgebra<T>& a, const TensorProduct<T>& out,
                  const std::vector<std::pair<const TensorProduct<T>*, SparseVec<T>>>& factors);

struct MoritaReport {
  Audit associativity;   // p(qp') = (pq)p' and q(pq') = (qp)q'
  Audit products;        // pq ∈ T, qp ∈ U, module actions stay in P and Q
  std::size_t triples = 0;
  bool anchor_r_bijective = false;  // R ⊗_T P -> V
  bool anchor_v_bijective = false;  // V ⊗_U Q -> R
  std::size_t dim_r_t_p = 0, dim_v_u_q = 0, rank_r = 0, rank_v = 0;
  bool h_separable = false;
};

template <class T>
MoritaReport morita_anchor_check(const StandardBimodules<T>& sb, const Caps& caps = {});

/// The V-coring on P and the pairing with E.
template <class T>
struct CoringData {
  AlgebraPtr<T> v;
  Bimodule<T> p_module;                                // P as a V-V-bimodule
  std::shared_ptr<const TensorProduct<T>> pp;          // P ⊗_V P
  std::shared_ptr<const TensorProduct<T>> ppp;         // (P ⊗_V P) ⊗_V P
  SparseMap<T> delta;                                  // P -> P ⊗_V P
  SparseMap<T> counit;                                 // P -> V
  SparseVec<T> grouplike;                              // 1 ⊗ 1 in P coordinates
  std::shared_ptr<const TensorProduct<T>> triple;      // A ⊗_B A ⊗_B A
  Subspace<T> triple_c;                                // (A ⊗_B A ⊗_B A)^C
};

struct CoringReport {
  Audit identification;  // P ⊗_V P <-> (A⊗_B A⊗_B A)^C mutually inverse
  Audit coassociative, counit_left, counit_right, grouplike;
  Audit pairing;         // nondegenerate, E ≅ Hom(_V P, _V V)
  Audit duality;         // ⟨-, α⟩ * ⟨-, β⟩ = ⟨-, α∘β⟩
  std::size_t dim_p = 0, dim_e = 0, pairing_rank = 0, dim_hom = 0;
  bool ok() const;
};

/// Needs a right D3 witness of the tower.
template <class T>
CoringData<T> coring_on_p(const StandardBimodules<T>& sb, const QuasibaseWitness<T>& right);

template <class T>
CoringReport audit_coring(const StandardBimodules<T>& sb, const CoringData<T>& cd, const QuasibaseWitness<T>& right);

template <class T>
struct PreGaloisReport {
  Audit beta_then_inverse, inverse_then_beta, coaction_unit;
  std::size_t dim_aba = 0, dim_avp = 0, dim_a = 0, dim_p = 0, dim_v = 0;
  SparseMap<T> beta, beta_inverse;   // A⊗_B A <-> A⊗_V P
  std::vector<SparseVec<T>> delta;   // δ(a_k) in A⊗_V P
  bool ok() const { return beta_then_inverse.ok && inverse_then_beta.ok && coaction_unit.ok; }
};

template <class T>
PreGaloisReport<T> pre_galois(const StandardBimodules<T>& sb, const QuasibaseWitness<T>& right);

struct SmashReport {
  Audit end_iso;          // End A_B ≅ A ⊗_V J both composites
  std::size_t dim_end_ab = 0, dim_a_v_j = 0;
  bool composite_d2 = false;       // A | C right D2, which enables the coproduct checks
  Audit coideal;          // Δ(J) ⊆ S ⊗_V J
  Audit coproduct_agree;  // the left and right quasibase formulas give the same Δ on S
  Audit smash_law;
  Audit bicommutator;     // A^J ≅ End(_E A) through x -> ρ_x
  std::size_t dim_a_j = 0, dim_end_e_a = 0;
  bool balanced_case = false;      // B = C
  Audit invariants;       // A^S = B
  std::string note;
  bool ok() const;
};

/// Needs a left D3 witness of the tower.
template <class T>
SmashReport smash_and_invariants(const StandardBimodules<T>& sb, const QuasibaseWitness<T>& left,
                                 const Caps& caps = {});

// Finite fields.

/// F_{p^n} as an n-dimensional algebra over F_p with basis 1, x, ..., x^{n-1}.
struct FiniteField {
  std::uint32_t p = 2;
  int n = 1;
  std::vector<std::uint32_t> modulus;   // monic irreducible, coefficients of x^0..x^n
  AlgebraPtr<Fp> algebra;
  SparseMap<Fp> frobenius;              // x -> x^p
};

/// Uses the first monic irreducible polynomial of degree n, counting with the
/// constant coefficient as the least significant digit.
FiniteField finite_field(std::uint32_t p, int n, std::size_t cap = 4096);

struct IntermediateField {
  int d = 1;
  Subspace<Fp> field;          // fixed points of the d-th power of Frobenius
  Embedding<Fp> embedding;     // F_{p^d} -> E
  MapSubspace<Fp> gal;         // End(E_F) inside End(E_K)
  Subspace<Fp> fix_of_gal;     // Fix(Gal(F))
  MapSubspace<Fp> gal_of_fix;  // Gal(Fix(Gal(F)))
};

struct FieldCorrespondence {
  FiniteField e;
  std::vector<IntermediateField> fields;
  Audit round_trips;          // Fix(Gal(F)) = F and Gal(Fix(W)) = W
  Audit gal_shape;            // λ(E) ⊆ Gal(F), dim Gal(F) = (n/d)^2 d
  bool counts_match = false;  // number of intermediate fields = number of divisors of n
  std::optional<Audit> antipode;
};

/// Subfields, Galois subrings and both round trips. With `antipode` also runs
/// the experimental trace-form antipode candidate on End(E_K).
FieldCorrespondence field_fix_gal(std::uint32_t p, int n, bool antipode = false);

/// Fix(W) = {x ∈ E : α(x) = α(1) x for all α ∈ W}.
Subspace<Fp> fix_of(const FiniteField& e, const MapSubspace<Fp>& w);
/// Gal(F) = End(E_F) for a subfield given as an embedding.
MapSubspace<Fp> gal_of(const FiniteField& e, const Embedding<Fp>& f);

/// The tower F_p ⊆ F_{p^d} ⊆ F_{p^n}.
Tower<Fp> field_tower(const FiniteField& e, int d);

}  // namespace td
