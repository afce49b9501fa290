#include <algorithm>
#include <set>

#include "doctest.h"
#include "towerdepth/groups.hpp"

using namespace td;

namespace {

using ElemSet = std::set<std::vector<int>>;

// Closure by repeated pairwise products until nothing new appears.
ElemSet brute_closure(const std::vector<Perm>& gens, int degree) {
  ElemSet s{Perm::identity(degree).images};
  for (const auto& g : gens) s.insert(g.images);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        if (s.insert((Perm(a) * Perm(b)).images).second) grew = true;
      }
  }
  return s;
}

ElemSet as_set(const PermGroup& g) {
  ElemSet s;
  for (const auto& p : g.elements()) s.insert(p.images);
  return s;
}

// Closure of k's elements under conjugation by every element of g and products.
ElemSet brute_normal_closure(const PermGroup& k, const PermGroup& g) {
  std::vector<Perm> gens;
  for (const auto& x : g.elements())
    for (const auto& s : k.elements()) gens.push_back(x * s * x.inverse());
  return brute_closure(gens, g.degree());
}

PermGroup gen(std::initializer_list<const char*> cycles, int degree) {
  std::vector<Perm> gs;
  for (const char* c : cycles) gs.push_back(parse_cycles(c, degree));
  return group_closure(gs, degree);
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(group_closure({}, 3).order() == 1);
  auto s3 = group_closure({Perm({1, 2, 0}), Perm({1, 0, 2})}, 3);
  CHECK(s3.order() == 6);
  CHECK(as_set(s3) == brute_closure({Perm({1, 2, 0}), Perm({1, 0, 2})}, 3));
  auto v4 = group_closure({Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})}, 4);
  CHECK(v4.order() == 4);
  CHECK(as_set(v4) == brute_closure({Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})}, 4));
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
  CHECK(s3.element(0).is_identity());
  CHECK_THROWS_AS(group_closure({Perm({1, 0})}, 3), GroupError);
  CHECK_THROWS_AS(group_closure(symmetric_group(5).generators(), 5, 100), GroupError);
}

TEST_CASE("standard groups have the expected orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(3).order() == 3);
  CHECK(dihedral_square().order() == 8);
  CHECK(klein_four().order() == 4);
  auto q8 = quaternion_group();
  CHECK(q8.order() == 8);
  // Q8 has a unique involution and six elements of order 4.
  int involutions = 0;
  for (const auto& p : q8.elements())
    if (!p.is_identity() && (p * p).is_identity()) ++involutions;
  CHECK(involutions == 1);
  CHECK(all_subgroups(q8).size() == 6);
  CHECK(all_subgroups(symmetric_group(3)).size() == 6);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(all_subgroups(alternating_group(4)).size() == 10);
  CHECK(all_subgroups(dihedral_square()).size() == 10);
}

TEST_CASE("cycle notation parses and prints") {
  auto p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p.images == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(p.cycles() == "(1 2 3)(4 5)");
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(parse_cycles("", 3).is_identity());
  // product convention: rightmost cycle acts first
  CHECK(parse_cycles("(1 2)(2 3)", 3) == parse_cycles("(1 2)", 3) * parse_cycles("(2 3)", 3));
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), GroupError);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), GroupError);
}

TEST_CASE("normal closure examples") {
  auto s3 = symmetric_group(3);
  auto a3 = alternating_group(3);
  CHECK(normal_closure(a3, s3) == a3);
  CHECK(normal_closure(gen({"(1 2)"}, 3), s3) == s3);
  auto s4 = symmetric_group(4);
  CHECK(normal_closure(gen({"(1 2)(3 4)"}, 4), s4) == klein_four());
  CHECK_THROWS_AS(normal_closure(s4, klein_four()), GroupError);
}

TEST_CASE("normal closure properties over all subgroups") {
  for (const auto& g : {symmetric_group(3), symmetric_group(4), dihedral_square(), quaternion_group(), alternating_group(4)}) {
    for (const auto& k : all_subgroups(g)) {
      auto nc = normal_closure(k, g);
      CHECK(as_set(nc) == brute_normal_closure(k, g));
      CHECK(is_normal(nc, g));
      CHECK(k.is_subgroup_of(nc));
      CHECK(normal_closure(nc, g) == nc);
      CHECK(is_normal(k, g) == (nc == k));
    }
  }
}

TEST_CASE("is_normal examples") {
  auto s3 = symmetric_group(3);
  CHECK(is_normal(alternating_group(3), s3));
  CHECK_FALSE(is_normal(gen({"(1 2)"}, 3), s3));
  CHECK(is_normal(s3, s3));
  CHECK(is_normal(klein_four(), symmetric_group(4)));
}

TEST_CASE("double coset examples") {
  auto s3 = symmetric_group(3);
  CHECK(double_cosets(s3, s3, s3).size() == 1);
  CHECK(double_cosets(s3, s3, s3)[0].representative.is_identity());
  auto z2 = gen({"(1 2)"}, 3);
  auto cells = double_cosets(s3, z2, z2);
  REQUIRE(cells.size() == 2);
  std::multiset<std::size_t> sizes{cells[0].members.size(), cells[1].members.size()};
  CHECK(sizes == std::multiset<std::size_t>{2, 4});
  auto s4 = symmetric_group(4);
  CHECK(double_cosets(s4, trivial_group(4), trivial_group(4)).size() == 24);
}

TEST_CASE("double coset cells partition the group with the product-formula sizes") {
  auto s4 = symmetric_group(4);
  auto subs = all_subgroups(s4);
  for (std::size_t a = 0; a < subs.size(); a += 3) {
    for (std::size_t b = 0; b < subs.size(); b += 4) {
      const auto& h = subs[a];
      const auto& k = subs[b];
      auto cells = double_cosets(s4, h, k);
      std::size_t total = 0;
      std::set<std::size_t> all;
      for (const auto& c : cells) {
        total += c.members.size();
        all.insert(c.members.begin(), c.members.end());
        CHECK(s4.index_of(c.representative) == c.members.front());
        auto gkg = conjugate(k, c.representative);
        std::size_t inter = 0;
        for (const auto& x : h.elements()) inter += gkg.contains(x);
        CHECK(c.members.size() == h.order() * k.order() / inter);
      }
      CHECK(total == s4.order());
      CHECK(all.size() == s4.order());
    }
  }
}

TEST_CASE("left coset representatives") {
  auto s3 = symmetric_group(3);
  auto reps = left_coset_representatives(s3, gen({"(1 2)"}, 3));
  CHECK(reps.size() == 3);
  CHECK(reps[0].is_identity());
}
