#include <set>

#include "doctest.h"
#include "support.hpp"
#include "towerdepth/algebra.hpp"
#include "towerdepth/matrix.hpp"

using namespace td;
using namespace td::testing;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

using Q = Rational;

SparseVec<Q> e(Index i) { return SparseVec<Q>::unit(i, Q(1)); }

// Number of conjugacy classes by direct enumeration.
std::size_t class_count(const PermGroup& g) {
  std::set<std::set<std::vector<int>>> classes;
  for (const auto& x : g.elements()) {
    std::set<std::vector<int>> cls;
    for (const auto& y : g.elements()) cls.insert((y * x * y.inverse()).images);
    classes.insert(cls);
  }
  return classes.size();
}

// Checks that phi: M -> N intertwines every basis element of both acting algebras.
bool intertwines(const Bimodule<Q>& m, const Bimodule<Q>& n, const SparseMap<Q>& phi) {
  for (Index k = 0; k < m.dim; ++k) {
    for (Index a = 0; a < m.left->dim; ++a) {
      if (phi.apply(m.act_left(m.left->basis(a), e(k))) != n.act_left(n.left->basis(a), phi.cols[k])) return false;
    }
    for (Index a = 0; a < m.right->dim; ++a) {
      if (phi.apply(m.act_right(e(k), m.right->basis(a))) != n.act_right(phi.cols[k], m.right->basis(a))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("group algebras") {
  auto triv = group_algebra<Q>(trivial_group(3), kQ);
  CHECK(triv->dim == 1);
  auto a = group_algebra<Q>(s3(), kQ);
  CHECK(a->dim == 6);
  auto t = s3().index_of(parse_cycles("(1 2)", 3));
  CHECK(a->mul(e(t), e(t)) == a->unit);
  CHECK(audit_algebra(*a).ok);
  const FieldSpec f7 = FieldSpec::prime(7);
  auto z3 = group_algebra<Fp>(cyclic_group(3), f7);
  CHECK(z3->dim == 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(z3->mul(z3->basis(i), z3->basis(j)) == z3->mul(z3->basis(j), z3->basis(i)));
  CHECK_FALSE(a->is_commutative());
}

TEST_CASE("audits reject broken structure constants") {
  auto good = group_algebra<Q>(cyclic_group(3), kQ);
  FinDimAlgebra<Q> bad = *good;
  bad.table[1 * 3 + 1] = e(0);  // g*g = 1 breaks associativity in Z3
  CHECK_FALSE(audit_algebra(bad).ok);
  FinDimAlgebra<Q> no_gens = *good;
  no_gens.generators.clear();
  CHECK_FALSE(audit_algebra(no_gens).ok);
  CHECK_THROWS_AS(make_algebra(bad), AlgebraError);
  auto s3a = group_algebra<Q>(s3(), kQ);
  SparseMap<Q> zero_map(6, 6);
  CHECK_THROWS_AS(make_embedding(s3a, s3a, zero_map), AlgebraError);
}

TEST_CASE("opposite algebra") {
  auto a = group_algebra<Q>(s3(), kQ);
  auto op = opposite(a);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) CHECK(op->mul(e(i), e(j)) == a->mul(e(j), e(i)));
}

TEST_CASE("tensor products over subalgebras") {
  auto tw = group_tower<Q>(s3(), z2_in_s3(), z2_in_s3(), kQ);
  auto a = regular_bimodule(tw.a);
  auto ab = restrict_bimodule(a, identity_embedding(tw.a), tw.incl_ba);
  auto ba = restrict_bimodule(a, tw.incl_ba, identity_embedding(tw.a));
  auto x = tensor_over(ab, ba);
  CHECK(x.dim() == 18);
  CHECK(x.dim() == 36 - x.relation_rank);
  CHECK(audit_bimodule(x.module).ok);

  auto aa = tensor_over(a, a);
  CHECK(aa.dim() == 6);

  auto f = scalar_embedding(tw.a);
  auto af = restrict_bimodule(a, identity_embedding(tw.a), f);
  auto fa = restrict_bimodule(a, f, identity_embedding(tw.a));
  CHECK(tensor_over(af, fa).dim() == 36);

  // dimension law |G|^2/|H| for every subgroup of S4
  auto g4 = group_algebra<Q>(s4(), kQ);
  auto r4 = regular_bimodule(g4);
  for (const auto& h : all_subgroups(s4())) {
    if (h.order() < 3) continue;
    auto emb = subgroup_embedding(group_algebra<Q>(h, kQ), h, g4, s4());
    auto t = tensor_over(restrict_bimodule(r4, identity_embedding(g4), emb), restrict_bimodule(r4, emb, identity_embedding(g4)));
    CHECK(t.dim() == 24 * 24 / h.order());
  }
}

TEST_CASE("tensor classes satisfy the balancing relation") {
  auto tw = group_tower<Q>(s3(), z2_in_s3(), z2_in_s3(), kQ);
  auto a = regular_bimodule(tw.a);
  auto x = tensor_over(restrict_bimodule(a, identity_embedding(tw.a), tw.incl_ba),
                       restrict_bimodule(a, tw.incl_ba, identity_embedding(tw.a)));
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j)
      for (Index b = 0; b < 2; ++b) {
        auto bb = tw.incl_ba.image(b);
        CHECK(x.element(tw.a->mul(e(i), bb), e(j)) == x.element(e(i), tw.a->mul(bb, e(j))));
      }
}

TEST_CASE("centralizers") {
  auto a = group_algebra<Q>(s3(), kQ);
  CHECK(algebra_centralizer(scalar_embedding(a)).dim() == 6);
  auto center = algebra_centralizer(identity_embedding(a));
  CHECK(center.dim() == 3);
  CHECK(center.dim() == class_count(s3()));
  // centre basis really commutes with everything
  for (const auto& z : center.basis)
    for (Index i = 0; i < 6; ++i) CHECK(a->mul(z, e(i)) == a->mul(e(i), z));
  auto g4 = group_algebra<Q>(s4(), kQ);
  CHECK(algebra_centralizer(identity_embedding(g4)).dim() == class_count(s4()));

  // (A ⊗_A A)^A is the centre again
  auto r = regular_bimodule(a);
  auto aa = tensor_over(r, r);
  CHECK(centralizer(aa.module, identity_embedding(a), identity_embedding(a)).dim() == 3);

  // inclusion reversing along trivial ⊆ Z2 ⊆ S3
  auto tw = group_tower<Q>(s3(), z2_in_s3(), trivial_group(3), kQ);
  auto big = algebra_centralizer(tw.incl_ca).dim();
  auto mid = algebra_centralizer(tw.incl_ba).dim();
  CHECK(big >= mid);
  CHECK(mid >= 3);
}

TEST_CASE("bimodule homs") {
  auto tw = group_tower<Q>(s3(), z2_in_s3(), z2_in_s3(), kQ);
  auto id_a = identity_embedding(tw.a);
  auto reg = regular_bimodule(tw.a);
  auto x = tensor_over(restrict_bimodule(reg, id_a, tw.incl_ba), restrict_bimodule(reg, tw.incl_ba, id_a));
  auto x_ac = restrict_bimodule(x.module, id_a, tw.incl_ca);
  auto a_ac = restrict_bimodule(reg, id_a, tw.incl_ca);

  auto ends = bimodule_hom(a_ac, a_ac);
  CHECK(ends.size() == algebra_centralizer(tw.incl_ca).dim());  // End(_A A_C) = A^C op
  Echelon<Q> ech(kQ, 36);
  for (const auto& m : ends) {
    SparseVec<Q> flat;
    for (Index c = 0; c < 6; ++c)
      for (const auto& [r, v] : m.cols[c].terms) flat.terms.emplace_back(c * 6 + r, v);
    ech.insert(flat);
  }
  SparseVec<Q> id_flat;
  for (Index c = 0; c < 6; ++c) id_flat.terms.emplace_back(c * 6 + c, Q(1));
  CHECK(ech.in_span(id_flat));

  auto in = bimodule_hom(a_ac, x_ac);
  auto out = bimodule_hom(x_ac, a_ac);
  auto p = centralizer(x.module, tw.incl_ca, tw.incl_ca);
  CHECK(in.size() == p.dim());
  auto b_ac = restrict_bimodule(reg, tw.incl_ba, tw.incl_ca);
  CHECK(out.size() == bimodule_hom(b_ac, b_ac).size());
  for (const auto& phi : in) CHECK(intertwines(a_ac, x_ac, phi));
  for (const auto& phi : out) CHECK(intertwines(x_ac, a_ac, phi));
  CHECK_THROWS_AS(bimodule_hom(a_ac, x.module), AlgebraError);
}
