#include <functional>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "towerdepth/galois.hpp"

using namespace td;
using namespace td::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
using Q = Rational;

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
  std::size_t classes() {
    std::size_t c = 0;
    for (std::size_t x = 0; x < parent.size(); ++x) c += find(x) == x;
    return c;
  }
};

// Orbits of X x Y on G x G under (g1, g2) -> (x g1 y^-1, x' g2 y'^-1), where the
// two factors act as given by `act`. Invariants of a permutation module have one
// basis vector per orbit, so these count the spaces of the tower directly.
using PairAction = std::function<std::pair<Perm, Perm>(const Perm&, const Perm&)>;

std::size_t pair_orbits(const PermGroup& g, const std::vector<PairAction>& moves) {
  const std::size_t n = g.order();
  Dsu dsu(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& m : moves) {
        auto [a, b] = m(g.element(i), g.element(j));
        dsu.join(i * n + j, g.index_of(a) * n + g.index_of(b));
      }
  return dsu.classes();
}

// (F[G] ⊗_{F[X]} F[G])^Y: generated by h in X: (g1 h, h^-1 g2) and k in Y: (k g1, g2 k^-1)
std::size_t tensor_invariants(const PermGroup& g, const PermGroup& x, const PermGroup& y) {
  std::vector<PairAction> moves;
  for (const Perm& h : x.generators()) moves.push_back([h](const Perm& a, const Perm& b) { return std::pair{a * h, h.inverse() * b}; });
  for (const Perm& k : y.generators()) moves.push_back([k](const Perm& a, const Perm& b) { return std::pair{k * a, b * k.inverse()}; });
  return pair_orbits(g, moves);
}

// End(_X F[G]_Y): matrices invariant under (g1, g2) -> (x g1 y^-1, x g2 y^-1)
std::size_t endo_invariants(const PermGroup& g, const PermGroup& x, const PermGroup& y) {
  std::vector<PairAction> moves;
  for (const Perm& h : x.generators()) moves.push_back([h](const Perm& a, const Perm& b) { return std::pair{h * a, h * b}; });
  for (const Perm& k : y.generators())
    moves.push_back([k](const Perm& a, const Perm& b) { return std::pair{a * k.inverse(), b * k.inverse()}; });
  return pair_orbits(g, moves);
}

// F[G]^X: X-conjugacy classes
std::size_t conj_invariants(const PermGroup& g, const PermGroup& x) {
  Dsu dsu(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (const Perm& h : x.generators()) dsu.join(i, g.index_of(h * g.element(i) * h.inverse()));
  return dsu.classes();
}

struct Case {
  const char* name;
  PermGroup g, h, k;
};

std::vector<Case> towers() {
  auto e = trivial_group(3);
  return {{"S3|A3|A3", s3(), a3(), a3()},
          {"S3|S3|S3", s3(), s3(), s3()},
          {"S3|A3|1", s3(), a3(), e},
          {"S3|Z2|Z2", s3(), z2_in_s3(), z2_in_s3()},
          {"S3|Z2|1", s3(), z2_in_s3(), e}};
}

// Elements of E = F_p^n enumerated as coefficient vectors.
std::vector<SparseVec<Fp>> all_elements(const FiniteField& e) {
  std::vector<SparseVec<Fp>> out;
  std::uint64_t total = 1;
  for (int i = 0; i < e.n; ++i) total *= e.p;
  for (std::uint64_t k = 0; k < total; ++k) {
    SparseVec<Fp> v;
    std::uint64_t r = k;
    for (int i = 0; i < e.n; ++i, r /= e.p) v.push(static_cast<Index>(i), Fp(static_cast<std::int64_t>(r % e.p), e.p));
    out.push_back(std::move(v));
  }
  return out;
}

SparseVec<Fp> pow_by_mul(const FinDimAlgebra<Fp>& a, const SparseVec<Fp>& y, std::uint64_t e) {
  SparseVec<Fp> r = a.unit;
  for (std::uint64_t i = 0; i < e; ++i) r = a.mul(r, y);
  return r;
}
}  // namespace

TEST_CASE("standard bimodules match orbit counts") {
  for (const auto& c : towers()) {
    CAPTURE(c.name);
    auto tw = group_tower<Q>(c.g, c.h, c.k, kQ);
    auto sb = standard_bimodules(tw);
    CHECK(sb.ring_laws.ok);
    CHECK(sb.p.dim() == tensor_invariants(c.g, c.h, c.k));
    CHECK(sb.q.dim() == tensor_invariants(c.g, c.k, c.h));
    CHECK(sb.t.dim() == tensor_invariants(c.g, c.h, c.h));
    CHECK(sb.u.dim() == tensor_invariants(c.g, c.k, c.k));
    CHECK(sb.r.dim() == conj_invariants(c.g, c.h));
    CHECK(sb.v.dim() == conj_invariants(c.g, c.k));
    CHECK(sb.e.dim() == endo_invariants(c.g, c.h, c.k));
    CHECK(sb.j.dim() == endo_invariants(c.g, c.k, c.h));
    CHECK(sb.s.dim() == endo_invariants(c.g, c.k, c.k));
    CHECK(sb.s_cal.dim() == endo_invariants(c.g, c.h, c.h));
    CHECK(sb.dim_v_via_end == sb.v.dim());
    CHECK(sb.dim_p_via_hom == sb.p.dim());
    CHECK(sb.dim_q_via_hom == sb.q.dim());
    CHECK(sb.t_ring->dim == sb.t.dim());
    CHECK(sb.u_ring->dim == sb.u.dim());
  }
}

TEST_CASE("degenerate towers") {
  SUBCASE("B = C") {
    auto sb = standard_bimodules(group_tower<Q>(s3(), z2_in_s3(), z2_in_s3(), kQ));
    CHECK(sb.p.dim() == sb.t.dim());
    CHECK(sb.q.dim() == sb.u.dim());
    CHECK(sb.e.dim() == sb.s_cal.dim());
    CHECK(sb.r.dim() == sb.v.dim());
  }
  SUBCASE("C is the base field") {
    auto sb = standard_bimodules(group_tower<Q>(s3(), a3(), trivial_group(3), kQ));
    CHECK(sb.v.dim() == 6);
    CHECK(sb.p.dim() == sb.xb->dim());
    CHECK(sb.p.dim() == 12);
  }
}

TEST_CASE("Morita context and anchor maps") {
  auto sb = standard_bimodules(group_tower<Q>(s3(), a3(), a3(), kQ));
  auto m = morita_anchor_check(sb);
  CHECK(m.associativity.ok);
  CHECK(m.products.ok);
  CHECK(m.triples == 2 * 8 * 8 * 8);
  CHECK(m.h_separable);
  CHECK(m.anchor_r_bijective);
  CHECK(m.anchor_v_bijective);

  auto sb1 = standard_bimodules(group_tower<Q>(s3(), a3(), trivial_group(3), kQ));
  auto m1 = morita_anchor_check(sb1);
  CHECK(m1.associativity.ok);
  CHECK(m1.products.ok);
  CHECK_FALSE(m1.h_separable);
  CHECK(m1.rank_r <= std::min(m1.dim_r_t_p, sb1.v.dim()));
  CHECK(m1.rank_v <= std::min(m1.dim_v_u_q, sb1.r.dim()));
}

TEST_CASE("coring on P") {
  for (const auto& c : towers()) {
    CAPTURE(c.name);
    auto tw = group_tower<Q>(c.g, c.h, c.k, kQ);
    auto w = rd3_witness(tw, Side::Right);
    if (std::string(c.name) == "S3|Z2|Z2") {
      CHECK_FALSE(w.holds());
      continue;
    }
    REQUIRE(w.holds());
    auto sb = standard_bimodules(tw);
    auto cd = coring_on_p(sb, *w.witness);
    auto r = audit_coring(sb, cd, *w.witness);
    CHECK(r.ok());
    CHECK(r.pairing_rank == sb.e.dim());
    CHECK(r.pairing_rank == sb.p.dim());
    CHECK(r.dim_hom == sb.e.dim());
    CHECK(cd.counit.apply(cd.grouplike) == sb.v.coords_sparse(tw.a->unit));
    CHECK(cd.delta.apply(cd.grouplike) == cd.pp->element(cd.grouplike, cd.grouplike));
    CHECK(cd.triple_c.dim() == cd.pp->dim());
  }
}

TEST_CASE("coring audit catches corrupted data") {
  auto tw = group_tower<Q>(s3(), a3(), a3(), kQ);
  auto w = rd3_witness(tw, Side::Right);
  REQUIRE(w.holds());
  auto sb = standard_bimodules(tw);
  auto cd = coring_on_p(sb, *w.witness);
  SUBCASE("counit") {
    cd.counit.cols[1] = cd.counit.cols[1] + sb.v.coords_sparse(tw.a->unit);
    auto r = audit_coring(sb, cd, *w.witness);
    CHECK_FALSE(r.counit_left.ok);
  }
  SUBCASE("coproduct") {
    cd.delta.cols[2] = cd.delta.cols[2] + cd.delta.cols[0];
    auto r = audit_coring(sb, cd, *w.witness);
    CHECK_FALSE(r.ok());
  }
  SUBCASE("left witness is rejected") {
    auto wl = rd3_witness(tw, Side::Left);
    REQUIRE(wl.holds());
    CHECK_THROWS_AS(coring_on_p(sb, *wl.witness), AlgebraError);
  }
}

TEST_CASE("pre-Galois isomorphism") {
  for (const auto& c : towers()) {
    if (std::string(c.name) == "S3|Z2|Z2") continue;
    CAPTURE(c.name);
    auto tw = group_tower<Q>(c.g, c.h, c.k, kQ);
    auto w = rd3_witness(tw, Side::Right);
    REQUIRE(w.holds());
    auto sb = standard_bimodules(tw);
    auto pg = pre_galois(sb, *w.witness);
    CHECK(pg.ok());
    CHECK(pg.dim_avp == pg.dim_aba);
    CHECK(pg.dim_avp * pg.dim_v == pg.dim_a * pg.dim_p);
    CHECK(pg.delta.size() == pg.dim_a);
  }
  auto tw = group_tower<Q>(s3(), a3(), a3(), kQ);
  auto w = rd3_witness(tw, Side::Right);
  auto sb = standard_bimodules(tw);
  CHECK(pre_galois(sb, *w.witness).dim_aba == 12);
  auto bad = *w.witness;
  bad.maps[0] = combine<Q>({&bad.maps[0]}, {Q(2)}, bad.maps[0].rows, bad.maps[0].ncols());
  CHECK_FALSE(pre_galois(sb, bad).beta_then_inverse.ok);
}

TEST_CASE("smash product and invariants") {
  for (const auto& c : towers()) {
    CAPTURE(c.name);
    auto tw = group_tower<Q>(c.g, c.h, c.k, kQ);
    auto w = rd3_witness(tw, Side::Left);
    if (!w.holds()) continue;
    auto sb = standard_bimodules(tw);
    auto sm = smash_and_invariants(sb, *w.witness);
    CHECK(sm.ok());
    // A_B is free of rank [G:H], so End A_B is a matrix ring of that size over B
    std::size_t index = c.g.order() / c.h.order();
    CHECK(sm.dim_end_ab == index * index * c.h.order());
    CHECK(sm.dim_a_v_j == sm.dim_end_ab);
    CHECK(sm.dim_a_j == sm.dim_end_e_a);
    CHECK(sm.balanced_case == (c.h.order() == c.k.order()));
  }
  auto whole = standard_bimodules(group_tower<Q>(s3(), s3(), s3(), kQ));
  auto ww = rd3_witness(whole.tower, Side::Left);
  auto sm = smash_and_invariants(whole, *ww.witness);
  CHECK(sm.dim_a_j == 6);
  CHECK(sm.invariants.ok);

  auto tw = group_tower<Q>(s3(), a3(), a3(), kQ);
  auto w = rd3_witness(tw, Side::Left);
  auto sb = standard_bimodules(tw);
  auto r = smash_and_invariants(sb, *w.witness);
  CHECK(r.composite_d2);
  CHECK(r.dim_a_j == 3);
  CHECK(r.invariants.ok);
  auto bad = *w.witness;
  bad.maps.pop_back();
  bad.tensors.pop_back();
  CHECK_FALSE(smash_and_invariants(sb, bad).end_iso.ok);
  CHECK_THROWS_AS(smash_and_invariants(sb, *rd3_witness(tw, Side::Right).witness), AlgebraError);
}

TEST_CASE("finite fields") {
  auto e = finite_field(2, 4);
  CHECK(e.modulus == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    auto f = finite_field(p, n);
    const auto& E = *f.algebra;
    auto elems = all_elements(f);
    // a field: every nonzero element has an inverse
    for (const auto& y : elems) {
      if (y.empty()) continue;
      bool inv = std::any_of(elems.begin(), elems.end(), [&](const auto& z) { return E.mul(y, z) == E.unit; });
      CHECK(inv);
    }
    for (const auto& y : elems) CHECK(f.frobenius.apply(y) == pow_by_mul(E, y, p));
  }
  CHECK_THROWS(finite_field(4, 2));
  CHECK_THROWS(finite_field(2, 13));
  CHECK_THROWS(field_tower(e, 3));
}

TEST_CASE("Fix and Gal are inverse correspondences") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 1}, {2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    auto fc = field_fix_gal(p, n, true);
    CHECK(fc.round_trips.ok);
    CHECK(fc.gal_shape.ok);
    CHECK(fc.counts_match);
    REQUIRE(fc.antipode);
    CHECK(fc.antipode->ok);
    int divisors = 0;
    for (int d = 1; d <= n; ++d) divisors += n % d == 0;
    CHECK(fc.fields.size() == static_cast<std::size_t>(divisors));
    const auto& E = *fc.e.algebra;
    auto elems = all_elements(fc.e);
    for (const auto& F : fc.fields) {
      CAPTURE(F.d);
      std::uint64_t q = 1;
      for (int i = 0; i < F.d; ++i) q *= p;
      std::size_t fixed = 0;
      for (const auto& y : elems) {
        bool in = pow_by_mul(E, y, q) == y;
        fixed += in;
        CHECK(F.field.contains(y) == in);
      }
      CHECK(fixed == q);
    }
    // Gal(E) is E acting on itself
    for (const auto& g : fc.fields.back().gal.maps) CHECK(g == E.left_mult(g.apply(E.unit)));
    CHECK(fc.fields.front().gal.dim() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("finite field towers are depth three") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
    auto e = finite_field(p, n);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      CAPTURE(p);
      CAPTURE(n);
      CAPTURE(d);
      auto tw = field_tower(e, d);
      CHECK(tw.b->dim == static_cast<std::size_t>(d));
      CHECK(rd3_witness(tw, Side::Left).holds());
    }
  }
}
