#include "towerdepth/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "towerdepth/catalog.hpp"
#include "towerdepth/depth.hpp"
#include "towerdepth/frobenius.hpp"
#include "towerdepth/galois.hpp"

namespace td {

namespace {

using Q = Rational;
const FieldSpec kQ = FieldSpec::rationals();

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

PermGroup gen(std::initializer_list<const char*> cycles, int degree) {
  std::vector<Perm> g;
  for (const char* c : cycles) g.push_back(parse_cycles(c, degree));
  return group_closure(g, degree);
}

// Group criterion soundness over the whole catalog.
void criterion_1(Outcome& out) {
  std::size_t n = 0;
  for (const auto& named : catalog_groups())
    for (const auto& t : subgroup_triples(named)) {
      if (!group_criterion(t.g, t.h, t.k)) continue;
      ++n;
      auto inst = DepthInstance<Q>::from_tower(group_tower<Q>(t.g, t.h, t.k, kQ));
      auto a = verify_quasibases(inst, group_quasibases(inst, t.g, t.h, t.k));
      if (!a.ok) out.fail(t.label() + ": explicit witness fails: " + a.detail);
      if (!rd3_witness(inst, Side::Right).holds()) out.fail(t.label() + ": solver does not return true");
    }
  if (out.ok) out.detail << n << " triples satisfy the criterion, all verified";
}

// Depth two agrees with normality.
void criterion_2(Outcome& out) {
  std::size_t n = 0, normal = 0;
  for (const auto& named : catalog_groups())
    for (const auto& t : subgroup_pairs(named)) {
      ++n;
      auto tw = group_tower<Q>(t.g, t.h, t.h, kQ);
      auto v = rd2_witness(tw.incl_ba, Side::Right);
      bool is_n = is_normal(t.h, t.g);
      normal += is_n;
      if (v.status == Status::Inconclusive) out.fail(t.label() + ": inconclusive");
      if (v.holds() != is_n) out.fail(t.label() + ": D2 verdict differs from normality");
      if (v.holds() && !v.verified) out.fail(t.label() + ": unverified witness");
    }
  if (out.ok) out.detail << n << " pairs, " << normal << " normal";
}

// Span solver agrees with the End characterization.
void criterion_3(Outcome& out) {
  std::size_t n = 0;
  for (const auto& named : catalog_groups())
    for (const auto& t : subgroup_triples(named)) {
      auto tw = group_tower<Q>(t.g, t.h, t.k, kQ);
      for (Side side : {Side::Right, Side::Left}) {
        auto a = rd3_witness(tw, side);
        auto b = endo_characterization(tw, side);
        if (a.status == Status::Inconclusive || b.verdict.status == Status::Inconclusive) continue;
        ++n;
        if (a.status != b.verdict.status) out.fail(t.label() + " (" + to_string(side) + "): solvers disagree");
      }
    }
  if (out.ok) out.detail << n << " decided instances agree";
}

// Frobenius systems and Jones towers with the End isomorphism checked.
void criterion_4(Outcome& out) {
  struct Run {
    const char* name;
    PermGroup g, h;
    int levels;
  };
  std::vector<Run> runs = {{"S3/Z2", symmetric_group(3), gen({"(1 2)"}, 3), 3},
                           {"S3/A3", symmetric_group(3), alternating_group(3), 2},
                           {"S4/A4", symmetric_group(4), alternating_group(4), 2}};
  for (const auto& r : runs) {
    auto jt = jones_tower<Q>(r.g, r.h, kQ, r.levels, 1296, true);
    if (jt.top() != r.levels) {
      out.fail(std::string(r.name) + ": tower truncated");
      continue;
    }
    std::size_t index = r.g.order() / r.h.order(), expect = r.g.order();
    for (int k = 0; k <= r.levels; ++k, expect *= index) {
      if (jt.level(k)->dim != expect) out.fail(std::string(r.name) + ": dimension law fails");
      auto a = audit_jones_tower(jt, static_cast<std::size_t>(k));
      if (!a.ok) out.fail(std::string(r.name) + " level " + std::to_string(k) + ": " + a.detail);
    }
    for (int k = 1; k <= r.levels; ++k)
      if (!jt.end_iso.at(static_cast<std::size_t>(k)).ok) out.fail(std::string(r.name) + ": End isomorphism fails");
  }
  if (out.ok) out.detail << "3 towers, all identities exact";
}

// depth values and the derived tower statement for S3/Z2.
void criterion_5(Outcome& out) {
  auto check = [&](const char* name, const PermGroup& g, const PermGroup& h, int want) {
    auto jt = jones_tower<Q>(g, h, kQ, want, 1296, false);
    auto rep = subgroup_depth(jt, 5);
    if (!rep.depth || *rep.depth != want) {
      out.fail(std::string(name) + ": wrong depth");
      return jt;
    }
    const auto& top = rep.levels.back();
    auto inst = depth_subtower(jt, want);
    for (const auto* v : {&top.right, &top.left}) {
      if (!v->witness || !v->verified || !verify_quasibases(inst, *v->witness).ok)
        out.fail(std::string(name) + ": witness not verified");
    }
    return jt;
  };
  check("S3/A3", symmetric_group(3), alternating_group(3), 2);
  auto jt = check("S3/Z2", symmetric_group(3), gen({"(1 2)"}, 3), 3);
  auto derived = derived_tower_check(jt, 3);
  if (!derived.ok()) out.fail("derived tower: " + derived.note);
  auto rep = subgroup_depth(jt, 5);
  auto e = embedding_check(jt, rep, 1);
  if (!e.d2_checked || !e.d2_holds) out.fail("M_1 | N is not D2: " + e.note);
  if (out.ok) out.detail << "depths 2 and 3, witnesses verified, derived tower D2";
}

// right and left D3 coincide along Jones towers; left witnesses convert.
void criterion_6(Outcome& out) {
  struct Run {
    const char* name;
    PermGroup g, h;
  };
  std::vector<Run> runs = {{"S3/A3", symmetric_group(3), alternating_group(3)},
                           {"S3/Z2", symmetric_group(3), gen({"(1 2)"}, 3)},
                           {"S3/S3", symmetric_group(3), symmetric_group(3)},
                           {"S4/A4", symmetric_group(4), alternating_group(4)},
                           {"S4/V4", symmetric_group(4), klein_four()},
                           {"S4/S3", symmetric_group(4), gen({"(1 2 3)", "(1 2)"}, 4)}};
  auto d4 = dihedral_square();
  for (const auto& h : all_subgroups(d4))
    if (h.order() == 2 && !is_normal(h, d4)) {
      runs.push_back({"D4/Z2", d4, h});
      break;
    }
  std::size_t levels = 0, converted = 0;
  for (const auto& r : runs) {
    auto jt = jones_tower<Q>(r.g, r.h, kQ, 0, 1296, false);
    auto rep = subgroup_depth(jt, 4);
    for (const auto& l : rep.levels) {
      ++levels;
      if (l.right.status != l.left.status)
        out.fail(std::string(r.name) + " n=" + std::to_string(l.n) + ": right and left differ");
      if (!l.left.holds()) continue;
      auto inst = depth_subtower(jt, l.n);
      auto w = convert_left_to_right(inst, *l.left.witness, jt.systems.at(static_cast<std::size_t>(l.n - 2)));
      auto a = verify_quasibases(inst, w);
      if (!a.ok) out.fail(std::string(r.name) + ": converted witness fails: " + a.detail);
      ++converted;
    }
  }
  if (out.ok) out.detail << levels << " levels agree, " << converted << " left witnesses converted";
}

// Galois structures on S3|A3|A3 and towers with B = C.
void criterion_7(Outcome& out) {
  struct Run {
    const char* name;
    PermGroup g, h, k;
  };
  auto s3 = symmetric_group(3);
  auto z2 = gen({"(1 2)"}, 3);
  std::vector<Run> runs = {{"S3|A3|A3", s3, alternating_group(3), alternating_group(3)},
                           {"S3|S3|S3", s3, s3, s3},
                           {"S3|Z2|Z2", s3, z2, z2},
                           {"S4|A4|A4", symmetric_group(4), alternating_group(4), alternating_group(4)}};
  std::size_t audits = 0;
  for (const auto& r : runs) {
    const std::string name = r.name;
    auto note = [&](const std::string& what, const Audit& a) {
      ++audits;
      if (!a.ok) out.fail(name + " " + what + ": " + a.detail);
    };
    auto tw = group_tower<Q>(r.g, r.h, r.k, kQ);
    auto sb = standard_bimodules(tw);
    note("ring laws", sb.ring_laws);
    auto m = morita_anchor_check(sb);
    note("Morita associativity", m.associativity);
    note("Morita products", m.products);
    bool normal = is_normal(r.h, r.g);
    auto right = rd3_witness(tw, Side::Right);
    auto left = rd3_witness(tw, Side::Left);
    if (right.holds() != normal || left.holds() != normal) out.fail(name + ": unexpected D3 verdict");
    if (right.holds()) {
      auto cd = coring_on_p(sb, *right.witness);
      auto c = audit_coring(sb, cd, *right.witness);
      note("coring identification", c.identification);
      note("coassociativity", c.coassociative);
      note("left counit", c.counit_left);
      note("right counit", c.counit_right);
      note("grouplike", c.grouplike);
      note("pairing", c.pairing);
      note("duality", c.duality);
      if (c.pairing_rank != sb.e.dim()) out.fail(name + ": pairing not of full rank");
      auto pg = pre_galois(sb, *right.witness);
      note("β⁻¹∘β", pg.beta_then_inverse);
      note("β∘β⁻¹", pg.inverse_then_beta);
      note("coaction", pg.coaction_unit);
    }
    if (left.holds()) {
      auto s = smash_and_invariants(sb, *left.witness);
      note("End A_B ≅ A ⊗_V J", s.end_iso);
      note("smash law", s.smash_law);
      note("bicommutator", s.bicommutator);
      if (!s.balanced_case) out.fail(name + ": expected B = C");
      note("A^S = B", s.invariants);
      if (s.composite_d2) {
        note("coideal", s.coideal);
        note("coproduct", s.coproduct_agree);
      }
    }
  }
  if (out.ok) out.detail << runs.size() << " towers, " << audits << " audits pass";
}

const std::vector<std::pair<std::uint32_t, int>> kFieldCases = {{2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}};

void criterion_8(Outcome& out) {
  std::size_t fields = 0;
  for (auto [p, n] : kFieldCases) {
    auto fc = field_fix_gal(p, n);
    const std::string tag = "F" + std::to_string(p) + "^" + std::to_string(n);
    if (!fc.round_trips.ok) out.fail(tag + ": " + fc.round_trips.detail);
    if (!fc.counts_match) out.fail(tag + ": intermediate field count");
    int divisors = 0;
    for (int d = 1; d <= n; ++d) divisors += n % d == 0;
    if (fc.fields.size() != static_cast<std::size_t>(divisors)) out.fail(tag + ": divisor count");
    fields += fc.fields.size();
  }
  if (out.ok) out.detail << fields << " intermediate fields, both round trips hold";
}

void criterion_9(Outcome& out) {
  std::size_t towers = 0;
  for (auto [p, n] : kFieldCases) {
    auto e = finite_field(p, n);
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      ++towers;
      auto v = rd3_witness(field_tower(e, d), Side::Left);
      if (!v.holds() || !v.verified)
        out.fail("F" + std::to_string(p) + " ⊆ F" + std::to_string(p) + "^" + std::to_string(d) + " ⊆ F" +
                 std::to_string(p) + "^" + std::to_string(n) + " is not left D3");
    }
  }
  if (out.ok) out.detail << towers << " field towers left D3";
}

struct Entry {
  const char* name;
  double limit;
  void (*run)(Outcome&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"group criterion soundness over the catalog", 60, criterion_1},
      {"depth two agrees with normality", 60, criterion_2},
      {"span solver agrees with the End characterization", 120, criterion_3},
      {"Frobenius and Jones tower identities", 120, criterion_4},
      {"subgroup depths of S3/A3 and S3/Z2", 180, criterion_5},
      {"right and left D3 agree along Jones towers", 120, criterion_6},
      {"Galois structure audits", 120, criterion_7},
      {"Fix/Gal round trips for finite fields", 30, criterion_8},
      {"finite field towers are left D3", 30, criterion_9},
  };
  return e;
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (std::size_t i = 0; i < entries().size(); ++i) ids.push_back(static_cast<int>(i + 1));
  return ids;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(entries().size())) throw std::out_of_range("no criterion " + std::to_string(id));
  const auto& e = entries()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  r.limit_seconds = e.limit;
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    e.run(out);
  } catch (const std::exception& ex) {
    out.fail(std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.checks_ok = out.ok;
  r.passed = out.ok && r.seconds <= r.limit_seconds;
  r.detail = out.detail.str();
  if (out.ok && !r.passed) r.detail += " (over the time limit)";
  return r;
}

}  // namespace td
