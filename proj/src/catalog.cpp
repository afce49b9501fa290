#include "towerdepth/catalog.hpp"

#include <algorithm>
#include <set>

namespace td {

std::vector<NamedGroup> catalog_groups() {
  return {{"S3", symmetric_group(3)},
          {"S4", symmetric_group(4)},
          {"D4", dihedral_square()},
          {"Q8", quaternion_group()},
          {"A4", alternating_group(4)}};
}

std::string subgroup_name(const PermGroup& h, const PermGroup& g) {
  if (h.order() == 1) return "1";
  if (h == g) return "G";
  std::string s = "<";
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    if (i) s += ", ";
    s += h.generators()[i].cycles();
  }
  return s + ">";
}

std::string GroupTriple::label() const {
  return group_name + " > " + subgroup_name(h, g) + " > " + subgroup_name(k, g);
}

namespace {

std::vector<int> index_set(const PermGroup& s, const PermGroup& g) {
  std::vector<int> k;
  for (const auto& p : s.elements()) k.push_back(static_cast<int>(g.index_of(p)));
  std::sort(k.begin(), k.end());
  return k;
}

// Lexicographically least conjugate of the pair (H, K) as index sets.
std::pair<std::vector<int>, std::vector<int>> canonical_pair(const PermGroup& h, const PermGroup& k, const PermGroup& g) {
  std::pair<std::vector<int>, std::vector<int>> best;
  bool first = true;
  for (const auto& x : g.elements()) {
    Perm xi = x.inverse();
    std::vector<int> hs, ks;
    for (const auto& p : h.elements()) hs.push_back(static_cast<int>(g.index_of(x * p * xi)));
    for (const auto& p : k.elements()) ks.push_back(static_cast<int>(g.index_of(x * p * xi)));
    std::sort(hs.begin(), hs.end());
    std::sort(ks.begin(), ks.end());
    auto cand = std::make_pair(std::move(hs), std::move(ks));
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  }
  return best;
}

}  // namespace

std::vector<GroupTriple> subgroup_triples(const NamedGroup& named) {
  const PermGroup& g = named.group;
  auto subs = all_subgroups(g);
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<GroupTriple> out;
  for (const auto& h : subs) {
    for (const auto& k : subs) {
      if (k.order() > h.order() || h.order() % k.order() != 0 || !k.is_subgroup_of(h)) continue;
      if (seen.insert(canonical_pair(h, k, g)).second) out.push_back({named.name, g, h, k});
    }
  }
  return out;
}

std::vector<GroupTriple> subgroup_pairs(const NamedGroup& named) {
  const PermGroup& g = named.group;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<GroupTriple> out;
  for (const auto& h : all_subgroups(g)) {
    if (seen.insert(canonical_pair(h, h, g)).second) out.push_back({named.name, g, h, h});
  }
  return out;
}

}  // namespace td
