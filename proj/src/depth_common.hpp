#pragma once

// Helpers shared by the span-feasibility solvers.

#include <functional>
#include <vector>

#include "towerdepth/echelon.hpp"
#include "towerdepth/sparse.hpp"

namespace td::detail {

/// Picks candidates in order, keeping those not already in the span of the
/// orbits of earlier picks. `orbit(v)` must return vectors spanning the
/// submodule generated by v. Stops once `target_dim` is reached.
template <class T>
std::vector<SparseVec<T>> greedy_generators(const FieldSpec& f, std::size_t ambient,
                                            const std::vector<SparseVec<T>>& candidates, std::size_t target_dim,
                                            const std::function<std::vector<SparseVec<T>>(const SparseVec<T>&)>& orbit) {
  Echelon<T> ech(f, ambient);
  std::vector<SparseVec<T>> gens;
  for (const auto& cand : candidates) {
    if (ech.rank() >= target_dim) break;
    if (ech.in_span(cand)) continue;
    gens.push_back(cand);
    for (const auto& v : orbit(cand)) ech.insert(v);
  }
  return gens;
}

/// Concatenation of blocks of length `block`.
template <class T>
SparseVec<T> concat_blocks(const std::vector<SparseVec<T>>& parts, std::size_t block) {
  SparseVec<T> out;
  for (std::size_t s = 0; s < parts.size(); ++s)
    for (const auto& [i, v] : parts[s].terms) out.terms.emplace_back(static_cast<Index>(s * block + i), v);
  return out;
}

/// Linear combination Σ_j c_j maps[j] of equally shaped maps.
template <class T>
SparseMap<T> combine_maps(const std::vector<SparseMap<T>>& maps, const std::vector<std::pair<Index, T>>& coeffs,
                          std::size_t rows, std::size_t cols) {
  SparseMap<T> out(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::pair<Index, T>> raw;
    for (const auto& [j, a] : coeffs)
      for (const auto& [r, v] : maps[j].cols[c].terms) raw.emplace_back(r, a * v);
    out.cols[c] = collect(std::move(raw));
  }
  return out;
}

}  // namespace td::detail
