#include "doctest.h"
#include "support.hpp"
#include "towerdepth/catalog.hpp"
#include "towerdepth/frobenius.hpp"
#include "towerdepth/matrix.hpp"

using namespace td;
using namespace td::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
using Q = Rational;

// Dimension of {X : X R_h = R_h X for h in gens(H)} where R_h is right
// multiplication by h on the basis G, computed densely from permutations.
std::size_t commutant_dim(const PermGroup& g, const PermGroup& h) {
  const std::size_t n = g.order();
  std::vector<ExactMatrix<Q>> rs;
  for (const Perm& x : h.generators()) {
    ExactMatrix<Q> r(kQ, n, n);
    for (std::size_t k = 0; k < n; ++k) r(g.index_of(g.element(k) * x), k) = 1;
    rs.push_back(r);
  }
  ExactMatrix<Q> eqs(kQ, n * n * rs.size(), n * n);
  std::size_t row = 0;
  for (const auto& r : rs) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        // (X R)_{ij} - (R X)_{ij}, unknown X_{ab} at a * n + b
        for (std::size_t k = 0; k < n; ++k) {
          eqs(row, i * n + k) += r(k, j);
          eqs(row, k * n + j) -= r(i, k);
        }
      }
  }
  return kernel(eqs).size();
}

// Σ E(a x_i) y_i and Σ x_i E(y_i a) on group elements, straight from the permutations.
bool group_dual_basis_oracle(const PermGroup& g, const PermGroup& h, const std::vector<Perm>& reps) {
  for (const Perm& a : g.elements()) {
    std::vector<int> lhs(g.order(), 0), rhs(g.order(), 0);
    for (const Perm& r : reps) {
      if (h.contains(a * r)) lhs[g.index_of(a * r * r.inverse())] += 1;
      if (h.contains(r.inverse() * a)) rhs[g.index_of(r * r.inverse() * a)] += 1;
    }
    for (std::size_t k = 0; k < g.order(); ++k) {
      int want = g.element(k) == a ? 1 : 0;
      if (lhs[k] != want || rhs[k] != want) return false;
    }
  }
  return true;
}

FrobeniusSystem<Q> system_for(const PermGroup& g, const PermGroup& h) {
  return group_frobenius_system(group_algebra<Q>(h, kQ), h, group_algebra<Q>(g, kQ), g);
}
}  // namespace

TEST_CASE("group Frobenius systems") {
  auto same = system_for(s3(), s3());
  CHECK(same.dual_x.size() == 1);
  CHECK(same.dual_x[0] == same.ext.sup->unit);
  CHECK(same.dual_y[0] == same.ext.sup->unit);
  CHECK(same.e == identity_map(6, Q(1)));

  auto normal = system_for(s3(), a3());
  CHECK(normal.dual_x.size() == 2);
  CHECK(audit_frobenius(normal).ok);
  CHECK(group_dual_basis_oracle(s3(), a3(), left_coset_representatives(s3(), a3())));

  auto z2 = system_for(s3(), z2_in_s3());
  CHECK(z2.dual_x.size() == 3);
  CHECK(audit_frobenius(z2).ok);
  CHECK(group_dual_basis_oracle(s3(), z2_in_s3(), left_coset_representatives(s3(), z2_in_s3())));

  auto broken = z2;
  broken.dual_y.pop_back();
  broken.dual_x.pop_back();
  CHECK_FALSE(audit_frobenius(broken).ok);

  auto outside = make_group({"(1 4)"}, 4);
  CHECK_THROWS_AS(system_for(s3_in_s4(), outside), GroupError);
}

TEST_CASE("basic construction against End(B_C)") {
  SUBCASE("B = C") {
    auto fs = system_for(s3(), s3());
    auto bc = basic_construction(fs);
    CHECK(bc.m1->dim == 6);
    CHECK(bc.e1 == bc.m1->unit);
    REQUIRE(bc.end_iso);
    CHECK(bc.end_iso->ok);
  }
  SUBCASE("S3 over Z2") {
    auto fs = system_for(s3(), z2_in_s3());
    auto bc = basic_construction(fs);
    CHECK(bc.m1->dim == 18);
    CHECK(commutant_dim(s3(), z2_in_s3()) == 18);
    REQUIRE(bc.end_iso);
    CHECK(bc.end_iso->ok);
    // e1 b e1 = E(b) e1
    const auto& M = *bc.m1;
    for (Index b = 0; b < 6; ++b) {
      auto bv = bc.b_in_m1(fs.ext.sup->basis(b));
      auto eb = bc.b_in_m1(fs.e_in_b(fs.ext.sup->basis(b)));
      CHECK(M.mul(M.mul(bc.e1, bv), bc.e1) == M.mul(eb, bc.e1));
    }
    CHECK(bc.next.e.apply(bc.e1) == fs.ext.sup->unit);
  }
  SUBCASE("S4 over A4") {
    auto bc = basic_construction(system_for(s4(), a4()));
    CHECK(bc.m1->dim == 48);
    CHECK(commutant_dim(s4(), a4()) == 48);
    CHECK(bc.end_iso->ok);
  }
}

TEST_CASE("Jones towers") {
  auto jt = jones_tower<Q>(s3(), z2_in_s3(), kQ, 3);
  REQUIRE(jt.top() == 3);
  std::vector<std::size_t> dims;
  for (int k = -1; k <= 3; ++k) dims.push_back(jt.level(k)->dim);
  CHECK(dims == std::vector<std::size_t>{2, 6, 18, 54, 162});
  for (std::size_t k = 0; k <= 3; ++k) {
    auto a = audit_jones_tower(jt, k);
    CHECK_MESSAGE(a.ok, a.detail);
  }
  // e1 e2 e1 = e1 directly in M_2
  const auto& m2 = *jt.level(2);
  auto e1 = jt.incl[2](jt.jones[1]);
  CHECK(m2.mul(m2.mul(e1, jt.jones[2]), e1) == e1);
  CHECK(m2.mul(m2.mul(jt.jones[2], e1), jt.jones[2]) == jt.jones[2]);
  // e_2 squares to the index times e_2
  CHECK(m2.mul(jt.jones[2], jt.jones[2]) == scaled(jt.jones[2], Q(3)));

  auto normal = jones_tower<Q>(s3(), a3(), kQ, 2);
  CHECK(normal.level(1)->dim == 12);
  CHECK(normal.level(2)->dim == 24);

  auto capped = jones_tower<Q>(s3(), z2_in_s3(), kQ, 5, 100);
  CHECK(capped.truncated);
  CHECK(capped.top() == 2);
}

TEST_CASE("subgroup depth") {
  auto d2 = subgroup_depth<Q>(s3(), a3(), kQ, 5);
  REQUIRE(d2.depth);
  CHECK(*d2.depth == 2);
  CHECK(d2.levels.back().right.verified);

  auto d3 = subgroup_depth<Q>(s3(), z2_in_s3(), kQ, 5);
  REQUIRE(d3.depth);
  CHECK(*d3.depth == 3);
  REQUIRE(d3.levels.size() == 2);
  CHECK_FALSE(d3.levels[0].holds());
  CHECK(d3.levels[1].right.verified);
  CHECK(d3.levels[1].left.verified);

  auto same = subgroup_depth<Q>(s3(), s3(), kQ, 5);
  REQUIRE(same.depth);
  CHECK(*same.depth == 2);
  CHECK(same.levels[0].right.witness->n() == 1);

  auto f5 = subgroup_depth<Fp>(s3(), z2_in_s3(), FieldSpec::prime(5), 5);
  REQUIRE(f5.depth);
  CHECK(*f5.depth == 3);

  auto capped = subgroup_depth<Q>(s3(), z2_in_s3(), kQ, 5, {}, 10);
  CHECK_FALSE(capped.depth);
  CHECK(capped.truncated);
}

TEST_CASE("derived tower and embedding theorems") {
  for (auto [g, h, n] : {std::tuple{s3(), a3(), 2}, std::tuple{s3(), z2_in_s3(), 3}, std::tuple{s3(), s3(), 2}}) {
    auto jt = jones_tower<Q>(g, h, kQ, n, 1296, false);
    auto d = derived_tower_check(jt, n);
    CHECK_MESSAGE(d.ok(), d.note);
    CHECK(d.dual_identity_other);
    auto rep = subgroup_depth(jt, 5);
    REQUIRE(rep.depth);
    CHECK(*rep.depth == n);
    auto e = embedding_check(jt, rep, 1);
    CHECK(e.d2_checked);
    CHECK(e.d2_holds);
    CHECK(e.monotone);
    CHECK(e.monotonicity.size() == 1);
  }
  // the trivial pair: centralizers of N are the centres
  auto same = jones_tower<Q>(s3(), s3(), kQ, 2, 1296, false);
  CHECK(derived_tower_check(same, 2).dim_top == 3);

  auto jt = jones_tower<Q>(s3(), z2_in_s3(), kQ, 1);
  CHECK_THROWS_AS(embedding_check(jt, DepthReport<Q>{}), AlgebraError);
  CHECK_THROWS_AS(derived_tower_check(jt, 3), AlgebraError);
}

TEST_CASE("left to right conversion on group towers") {
  for (const auto& named : catalog_groups()) {
    if (named.group.order() > 12) continue;
    for (const auto& t : subgroup_triples(named)) {
      auto tw = group_tower<Q>(t.g, t.h, t.k, kQ);
      auto inst = DepthInstance<Q>::from_tower(tw);
      auto left = rd3_witness(inst, Side::Left);
      auto right = rd3_witness(inst, Side::Right);
      CHECK_MESSAGE(left.status == right.status, t.label());
      if (!left.holds()) continue;
      auto fs = group_frobenius_system(tw.b, t.h, tw.a, t.g);
      auto w = convert_left_to_right(inst, *left.witness, fs);
      auto a = verify_quasibases(inst, w);
      CHECK_MESSAGE(a.ok, std::string(t.label() + ": " + a.detail));
    }
  }
}
