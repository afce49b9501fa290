#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "towerdepth/algebra.hpp"
#include "towerdepth/groups.hpp"

namespace td {

enum class Side { Right, Left };
enum class Property { rD2, lD2, rD3, lD3 };
enum class Method { SpanFeasibility, EndoCharacterization, GroupCriterion };
enum class Status { True, False, Inconclusive };

std::string to_string(Side s);
std::string to_string(Property p);
std::string to_string(Method m);
std::string to_string(Status s);

struct Caps {
  /// Upper bound on dim A and on dim A ⊗_B A for the span systems.
  std::size_t max_side = 6000;
};

/// A together with two subalgebras B and C given by embeddings. The tower
/// case has C ⊆ B, but the solvers only use the two embeddings, which lets
/// the same mechanism test H-separability.
template <class T>
struct DepthInstance {
  AlgebraPtr<T> a;
  Embedding<T> b_in_a;
  Embedding<T> c_in_a;
  /// A ⊗_B A as an A-A-bimodule.
  std::shared_ptr<const TensorProduct<T>> x;

  static DepthInstance from_tower(const Tower<T>& t);
  static DepthInstance make(const Embedding<T>& b_in_a, const Embedding<T>& c_in_a);
  const TensorProduct<T>& tensor() const { return *x; }
  const FieldSpec& field() const { return a->field; }
};

template <class T>
std::shared_ptr<const TensorProduct<T>> tensor_square(const Embedding<T>& b_in_a);

/// Right: maps γ_i ∈ End(_B A_C) and u_i ∈ (A⊗_B A)^C with x⊗y = Σ x γ_i(y) u_i.
/// Left: maps β_j ∈ End(_C A_B) and t_j ∈ (A⊗_B A)^C with x⊗y = Σ t_j β_j(x) y.
template <class T>
struct QuasibaseWitness {
  Side side = Side::Right;
  std::vector<SparseMap<T>> maps;
  std::vector<SparseVec<T>> tensors;  // coordinates in the quotient basis of A ⊗_B A
  std::size_t n() const { return maps.size(); }
};

struct SolveStats {
  std::size_t dim_a = 0, dim_x = 0, dim_p = 0, dim_hom = 0, dim_v = 0;
  std::size_t tensor_generators = 0, module_generators = 0;
  std::size_t unknowns = 0, equations = 0;
};

template <class T>
struct DepthVerdict {
  Property property = Property::rD3;
  Status status = Status::Inconclusive;
  Method method = Method::SpanFeasibility;
  std::optional<QuasibaseWitness<T>> witness;
  bool verified = false;
  std::string note;
  SolveStats stats;
  bool holds() const { return status == Status::True; }
};

/// Decides right (x⊗y = Σ x γ_i(y) u_i) or left depth three. The tower is D3
/// iff the identity of A⊗_B A is a sum of composites A⊗_B A -> A -> A⊗_B A of A-C-bimodule maps. The two Hom spaces
/// are identified with End(_B A_C) (or End(_C A_B)) and (A⊗_B A)^C, and the
/// identity is tested on generators only.
template <class T>
DepthVerdict<T> rd3_witness(const DepthInstance<T>& inst, Side side, const Caps& caps = {});
template <class T>
DepthVerdict<T> rd3_witness(const Tower<T>& t, Side side, const Caps& caps = {});

/// Depth two for A | B, through the tower A | B | B.
template <class T>
DepthVerdict<T> rd2_witness(const Embedding<T>& b_in_a, Side side = Side::Right, const Caps& caps = {});

/// Exhaustive check of the quasibase identity on all pairs of basis elements,
/// plus membership of each map and tensor in its stated space.
template <class T>
Audit verify_quasibases(const DepthInstance<T>& inst, const QuasibaseWitness<T>& w);

/// The double-coset witness for K^G ⊆ H: γ_i projects onto H g_i K, u_i = g_i^{-1} ⊗ g_i.
/// The instance must come from group_tower(g, h, k) so that the basis of A is G.
template <class T>
QuasibaseWitness<T> group_quasibases(const DepthInstance<T>& inst, const PermGroup& g, const PermGroup& h,
                                     const PermGroup& k);

/// Whether the normal closure of K in G lies in H.
bool group_criterion(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// A summand witness for Y ⊕ * ≅ A^N: maps g_i: Y -> A and elements y_i of Y
/// with w = Σ g_i(w)·y_i (left) or w = Σ y_i·g_i(w) (right) for all w ∈ Y.
template <class T>
struct SummandWitness {
  Side side = Side::Left;
  std::size_t dim_y = 0;
  std::vector<SparseMap<T>> maps;       // dim A × dim Y
  std::vector<SparseVec<T>> elements;   // coordinates in Y
};

template <class T>
struct EndoVerdict {
  DepthVerdict<T> verdict;
  std::optional<SummandWitness<T>> witness;
};

/// Left: End(A_B) as an A-C-bimodule is a summand of A^N. Right: End(_B A) as a
/// C-A-bimodule is a summand of A^N. An independent decision procedure that
/// computes Hom(End, A) with the generic intertwiner solver.
template <class T>
EndoVerdict<T> endo_characterization(const Tower<T>& t, Side side, const Caps& caps = {});

enum class SeparabilityMode { Separable, HSeparable };

template <class T>
struct SeparabilityResult {
  bool holds = false;
  /// Separable: e ∈ (B ⊗_C B)^B with e^1 e^2 = 1, in quotient coordinates.
  std::optional<SparseVec<T>> element;
  std::shared_ptr<const TensorProduct<T>> tensor;
};

/// Separability of B | C, or H-separability (B ⊗_C B a B-B summand of B^N).
template <class T>
SeparabilityResult<T> separability_element(const Embedding<T>& c_in_b, SeparabilityMode mode,
                                           const Caps& caps = {});

}  // namespace td
