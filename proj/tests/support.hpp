#pragma once

#include <initializer_list>
#include <vector>

#include "towerdepth/groups.hpp"

namespace td::testing {

inline PermGroup make_group(std::initializer_list<const char*> cycles, int degree) {
  std::vector<Perm> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, degree));
  return group_closure(gens, degree);
}

inline PermGroup s3() { return symmetric_group(3); }
inline PermGroup a3() { return alternating_group(3); }
inline PermGroup z2_in_s3() { return make_group({"(1 2)"}, 3); }
inline PermGroup s4() { return symmetric_group(4); }
inline PermGroup a4() { return alternating_group(4); }
inline PermGroup v4() { return klein_four(); }
inline PermGroup s3_in_s4() { return make_group({"(1 2 3)", "(1 2)"}, 4); }

}  // namespace td::testing
