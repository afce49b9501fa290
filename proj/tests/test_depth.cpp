#include "doctest.h"
#include "support.hpp"
#include "towerdepth/depth.hpp"

using namespace td;
using namespace td::testing;

namespace {
const FieldSpec kQ = FieldSpec::rationals();
using Q = Rational;
}  // namespace

TEST_CASE("trivial tower A | A | A") {
  auto tw = group_tower<Q>(s3(), s3(), s3(), kQ);
  for (Side side : {Side::Right, Side::Left}) {
    auto v = rd3_witness(tw, side);
    REQUIRE(v.holds());
    CHECK(v.verified);
    CHECK(v.witness->n() == 1);
  }
  CHECK(rd2_witness(identity_embedding(tw.a)).holds());
}

TEST_CASE("rD3 examples over S3") {
  auto normal = group_tower<Q>(s3(), a3(), a3(), kQ);
  CHECK(rd3_witness(normal, Side::Right).holds());
  CHECK(rd3_witness(normal, Side::Left).holds());
  auto z2 = group_tower<Q>(s3(), z2_in_s3(), z2_in_s3(), kQ);
  auto v = rd3_witness(z2, Side::Right);
  CHECK(v.status == Status::False);
  CHECK_FALSE(v.witness);
  CHECK(rd3_witness(z2, Side::Left).status == Status::False);
}

TEST_CASE("rD2 examples") {
  auto tw = group_tower<Q>(s3(), a3(), a3(), kQ);
  CHECK(rd2_witness(tw.incl_ba).holds());
  auto s4tw = group_tower<Q>(s4(), s3_in_s4(), s3_in_s4(), kQ);
  CHECK(rd2_witness(s4tw.incl_ba).status == Status::False);
}

TEST_CASE("group quasibases") {
  auto check = [](const PermGroup& g, const PermGroup& h, const PermGroup& k, std::size_t n) {
    auto tw = group_tower<Q>(g, h, k, kQ);
    auto inst = DepthInstance<Q>::from_tower(tw);
    auto w = group_quasibases(inst, g, h, k);
    CHECK(w.n() == n);
    CHECK(verify_quasibases(inst, w).ok);
    // zeroing one tensor breaks the identity
    if (w.n() > 1) {
      auto broken = w;
      broken.tensors[0] = {};
      CHECK_FALSE(verify_quasibases(inst, broken).ok);
    }
  };
  check(s3(), s3(), s3(), 1);
  check(s3(), a3(), a3(), 2);
  check(s4(), a4(), v4(), double_cosets(s4(), a4(), v4()).size());
  CHECK_THROWS_AS(group_quasibases(DepthInstance<Q>::from_tower(group_tower<Q>(s3(), z2_in_s3(), z2_in_s3(), kQ)),
                                   s3(), z2_in_s3(), z2_in_s3()),
                  GroupError);
}
