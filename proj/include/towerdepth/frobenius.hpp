#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "towerdepth/algebra.hpp"
#include "towerdepth/depth.hpp"
#include "towerdepth/groups.hpp"

namespace td {

/// Frobenius system (E, x_i, y_i) for an extension C -> B:
/// Σ E(a x_i) y_i = a = Σ x_i E(y_i a) for all a ∈ B, with E a C-C-bimodule map.
template <class T>
struct FrobeniusSystem {
  Embedding<T> ext;  // C -> B
  SparseMap<T> e;    // B -> C, dim C × dim B
  std::vector<SparseVec<T>> dual_x, dual_y;

  /// E followed by the embedding back into B.
  SparseVec<T> e_in_b(const SparseVec<T>& b) const { return ext(e.apply(b)); }
};

template <class T>
Audit audit_frobenius(const FrobeniusSystem<T>& fs);

/// E = projection onto F[H], x_i = the least element of each left coset g_i H, y_i = g_i^{-1}.
template <class T>
FrobeniusSystem<T> group_frobenius_system(const AlgebraPtr<T>& fh, const PermGroup& h, const AlgebraPtr<T>& fg,
                                          const PermGroup& g);

/// Basic construction of B | C on B ⊗_C B with (x⊗y)(x'⊗y') = x E(y x') ⊗ y'.
template <class T>
struct BasicConstruction {
  AlgebraPtr<T> m1;
  Embedding<T> b_in_m1;  // b -> Σ b x_i ⊗ y_i
  SparseVec<T> e1;       // 1 ⊗ 1
  FrobeniusSystem<T> next;  // E_1(x⊗y) = xy with dual bases x_i⊗1, 1⊗y_i
  std::shared_ptr<const TensorProduct<T>> tensor;
  /// x⊗y -> λ_x ∘ E ∘ λ_y is an algebra isomorphism onto End(B_C) (when checked).
  std::optional<Audit> end_iso;
};

template <class T>
BasicConstruction<T> basic_construction(const FrobeniusSystem<T>& fs, bool check_end_iso = true);

/// Audits x⊗y -> λ_x ∘ E ∘ λ_y: multiplicative, unital, injective, into End(B_C), dimensions equal.
template <class T>
Audit check_end_isomorphism(const FrobeniusSystem<T>& fs, const BasicConstruction<T>& bc);

/// N = M_{-1} -> M_0 -> M_1 -> ... with Frobenius systems E_k: M_k -> M_{k-1} and e_k ∈ M_k.
template <class T>
struct JonesTower {
  FieldSpec field;
  std::vector<AlgebraPtr<T>> levels;          // levels[k + 1] = M_k
  std::vector<Embedding<T>> incl;             // incl[k] : M_{k-1} -> M_k, k >= 0
  std::vector<FrobeniusSystem<T>> systems;    // systems[k] : E_k : M_k -> M_{k-1}
  std::vector<SparseVec<T>> jones;            // jones[k] = e_k ∈ M_k, k >= 1 (jones[0] unused)
  std::vector<Audit> end_iso;                 // end_iso[k] for M_k, k >= 1
  bool truncated = false;

  int top() const { return static_cast<int>(levels.size()) - 2; }
  const AlgebraPtr<T>& level(int k) const { return levels.at(static_cast<std::size_t>(k + 1)); }
  /// Composite embedding M_from -> M_to, from <= to.
  Embedding<T> embedding(int from, int to) const;
};

/// Iterated basic constructions up to `levels`, stopping early (truncated) when
/// the next level would exceed cap_dim.
template <class T>
JonesTower<T> jones_tower(const PermGroup& g, const PermGroup& h, const FieldSpec& field, int levels,
                          std::size_t cap_dim = 1296, bool check_end_iso = true);

/// Extends an existing tower by one level if within the cap. Returns false when truncated.
template <class T>
bool extend_tower(JonesTower<T>& jt, std::size_t cap_dim, bool check_end_iso = true);

/// e_i e_{i±1} e_i = e_i, e_i y e_i = E_{i-1}(y) e_i, dimension law and E_i(e_i) = 1 at every level.
template <class T>
Audit audit_jones_tower(const JonesTower<T>& jt, std::size_t index);

/// The subtower M_{n-2} | M_{n-3} | M_{-1}.
template <class T>
DepthInstance<T> depth_subtower(const JonesTower<T>& jt, int n);

template <class T>
struct LevelResult {
  int n = 0;
  DepthVerdict<T> right, left;
  bool holds() const { return right.holds() || left.holds(); }
  bool decided() const { return right.status != Status::Inconclusive && left.status != Status::Inconclusive; }
};

template <class T>
struct DepthReport {
  std::optional<int> depth;
  int n_max = 0;
  int tried_up_to = 1;   // largest n whose test was decided
  bool truncated = false;
  std::string truncation_note;
  std::vector<LevelResult<T>> levels;
};

/// Least n in [2, n_max] with M_{n-2} | M_{n-3} | M_{-1} right or left D3.
template <class T>
DepthReport<T> subgroup_depth(JonesTower<T>& jt, int n_max, const Caps& caps = {}, std::size_t cap_dim = 1296);

template <class T>
DepthReport<T> subgroup_depth(const PermGroup& g, const PermGroup& h, const FieldSpec& field, int n_max,
                              const Caps& caps = {}, std::size_t cap_dim = 1296);

struct DerivedTowerReport {
  int n = 0;
  std::size_t dim_prev2 = 0, dim_prev = 0, dim_top = 0, dim_tensor = 0;
  bool dims_agree = false;
  bool bijective = false;
  bool dual_bases_central = false;
  bool dual_identity_derived = false;  // Σ t_i E(s_i m) = m
  bool dual_identity_other = false;    // Σ E(m t_i) s_i = m
  std::string note;
  bool ok() const { return dims_agree && bijective && dual_bases_central && dual_identity_derived; }
};

/// M_n^N ≅ M_{n-1}^N ⊗_{M_{n-2}^N} M_{n-1}^N via x⊗y -> x e_n y, and the dual
/// bases t_i, s_i = Σ_j β_i(x_j) e_{n-1} y_j of E_{n-1} built from a left witness.
template <class T>
DerivedTowerReport derived_tower_check(const JonesTower<T>& jt, int n, const Caps& caps = {});

struct EmbeddingReport {
  std::optional<int> depth;
  bool d2_checked = false;
  bool d2_holds = false;    // N -> M_{n-2} is D2 for n = 2^m + 1
  int d2_level = 0;
  std::vector<std::pair<int, bool>> monotonicity;  // (n, test holds) for levels above the depth
  bool monotone = true;
  std::string note;
};

template <class T>
EmbeddingReport embedding_check(JonesTower<T>& jt, const DepthReport<T>& report, int extra_levels = 1,
                                const Caps& caps = {}, std::size_t cap_dim = 1296);

/// Left quasibases to right ones: γ_j = E(- t_j^1) t_j^2, u_j = Σ_i β_j(x_i) ⊗ y_i.
template <class T>
QuasibaseWitness<T> convert_left_to_right(const DepthInstance<T>& inst, const QuasibaseWitness<T>& left,
                                          const FrobeniusSystem<T>& fs);

}  // namespace td
