#pragma once

#include <string>
#include <vector>

#include "towerdepth/groups.hpp"

namespace td {

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// S3, S4, D4, Q8, A4.
std::vector<NamedGroup> catalog_groups();

struct GroupTriple {
  std::string group_name;
  PermGroup g, h, k;
  std::string label() const;
};

/// Chains K ⊆ H ⊆ G up to simultaneous conjugation in G.
std::vector<GroupTriple> subgroup_triples(const NamedGroup& g);

/// Pairs H ⊆ G up to conjugation, as triples with K = H.
std::vector<GroupTriple> subgroup_pairs(const NamedGroup& g);

/// A short name for a subgroup, such as "A4" or "<(1 2)>".
std::string subgroup_name(const PermGroup& h, const PermGroup& g);

}  // namespace td
