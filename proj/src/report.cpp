#include "towerdepth/report.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "towerdepth/acceptance.hpp"
#include "towerdepth/depth.hpp"
#include "towerdepth/frobenius.hpp"
#include "towerdepth/galois.hpp"

namespace td {

namespace {

// ---- parsing

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::size_t first_col(const std::string& s) { return s.find_first_not_of(" \t") + 1; }

// Lexical check of one generator line; returns the largest point mentioned.
int scan_cycles(const std::string& s, std::size_t line) {
  int largest = 0;
  bool open = false;
  for (std::size_t i = 0; i < s.size();) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '(') {
      if (open) throw InputError(line, i + 1, "nested '('");
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw InputError(line, i + 1, "unmatched ')'");
      open = false;
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!open) throw InputError(line, i + 1, "point outside a cycle");
      std::size_t j = i;
      long v = 0;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
        v = v * 10 + (s[j] - '0');
        if (v > 64) throw InputError(line, i + 1, "point exceeds 64");
        ++j;
      }
      if (v == 0) throw InputError(line, i + 1, "points are 1-based");
      largest = std::max(largest, static_cast<int>(v));
      i = j;
    } else {
      throw InputError(line, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  if (open) throw InputError(line, s.size() + 1, "missing ')'");
  return largest;
}

// ---- serialization

template <class T>
json vec_json(const SparseVec<T>& v) {
  json out = json::array();
  for (const auto& [i, x] : v.terms) out.push_back({i, Scalar<T>::to_string(x)});
  return out;
}

template <class T>
json map_json(const SparseMap<T>& m) {
  json cols = json::array();
  for (const auto& c : m.cols) cols.push_back(vec_json(c));
  return {{"rows", m.rows}, {"cols", cols}};
}

template <class T>
json witness_json(const QuasibaseWitness<T>& w) {
  json maps = json::array(), tensors = json::array();
  for (const auto& m : w.maps) maps.push_back(map_json(m));
  for (const auto& t : w.tensors) tensors.push_back(vec_json(t));
  return {{"side", to_string(w.side)}, {"terms", w.n()}, {"maps", maps}, {"tensors", tensors}};
}

template <class T>
json verdict_json(const DepthVerdict<T>& v) {
  json out = {{"property", to_string(v.property)}, {"status", to_string(v.status)}, {"method", to_string(v.method)},
              {"verified", v.verified},           {"note", v.note}};
  if (v.witness) out["witness"] = witness_json(*v.witness);
  return out;
}

json audit_json(const std::string& name, const Audit& a) { return {{"name", name}, {"ok", a.ok}, {"detail", a.detail}}; }

json group_json(const PermGroup& g, const std::vector<std::string>& gens) {
  return {{"order", g.order()}, {"generators", gens}};
}

json input_json(const GroupInput& in) {
  json out = {{"degree", in.degree}};
  const char* names[] = {"G", "H", "K"};
  for (std::size_t i = 0; i < in.groups.size() && i < 3; ++i) out[names[i]] = group_json(in.groups[i], in.generators[i]);
  return out;
}

json header(const std::string& command, const FieldSpec& f) {
  return {{"schema", kReportSchema}, {"command", command}, {"field", f.name()}};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
json with_field(const FieldSpec& f, F&& body) {
  if (f.is_rational()) return body(Rational{});
  return body(Fp{});
}

bool all_ok(const json& audits) {
  for (const auto& a : audits)
    if (!a["ok"].get<bool>()) return false;
  return true;
}

std::uint32_t random_prime(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1u << 28, 1u << 30);
  std::uint32_t p = dist(rng);
  while (!is_prime(p)) ++p;
  return p;
}

// ---- text

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string verdict_text(const json& v) {
  std::string s = v["status"].get<std::string>();
  if (v.contains("witness")) {
    s += " (" + std::to_string(v["witness"]["terms"].get<std::size_t>()) + " terms";
    s += v["verified"].get<bool>() ? ", verified)" : ", unverified)";
  }
  if (!v["note"].get<std::string>().empty() && v["status"] == "inconclusive") s += " [" + v["note"].get<std::string>() + "]";
  return s;
}

void groups_text(std::ostringstream& os, const json& in) {
  for (const char* name : {"G", "H", "K"}) {
    if (!in.contains(name)) continue;
    os << name << ": order " << in[name]["order"].get<std::size_t>() << ", generated by";
    auto gens = in[name]["generators"];
    if (gens.empty()) os << " ()";
    for (const auto& g : gens) os << " " << g.get<std::string>();
    os << "\n";
  }
}

void audits_text(std::ostringstream& os, const json& audits) {
  for (const auto& a : audits) {
    os << "  " << (a["ok"].get<bool>() ? "pass" : "FAIL") << "  " << a["name"].get<std::string>();
    if (!a["ok"].get<bool>()) os << ": " << a["detail"].get<std::string>();
    os << "\n";
  }
}

}  // namespace

GroupInput parse_group_input(std::string_view text, std::size_t blocks) {
  GroupInput in;
  std::vector<std::string> lines;
  {
    std::string s(text);
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) lines.push_back(strip_comment(line));
  }
  struct Gen {
    std::string text;
    std::size_t line;
  };
  std::vector<std::vector<Gen>> raw;
  bool in_block = false, seen_content = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& l = lines[i];
    const std::size_t ln = i + 1;
    if (blank(l)) {
      in_block = false;
      continue;
    }
    auto colon = l.find(':');
    if (colon != std::string::npos) {
      std::string key = l.substr(0, colon);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      if (key != "field") throw InputError(ln, first_col(l), "unknown header '" + key + "'");
      if (seen_content) throw InputError(ln, first_col(l), "the field header must come first");
      std::string value = l.substr(colon + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      try {
        in.field = FieldSpec::parse(value);
      } catch (const std::exception& e) {
        throw InputError(ln, colon + 2, e.what());
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    in.degree = std::max(in.degree, scan_cycles(l, ln));
    if (!in_block) raw.emplace_back();
    in_block = true;
    std::string g = l;
    g.erase(0, g.find_first_not_of(" \t"));
    g.erase(g.find_last_not_of(" \t\r") + 1);
    raw.back().push_back({g, ln});
  }
  if (raw.size() != blocks)
    throw InputError(lines.size() + 1, 1,
                     "expected " + std::to_string(blocks) + " generator blocks, found " + std::to_string(raw.size()));
  const char* names[] = {"G", "H", "K"};
  for (std::size_t b = 0; b < raw.size(); ++b) {
    std::vector<Perm> gens;
    std::vector<std::string> written;
    for (const auto& g : raw[b]) {
      try {
        gens.push_back(parse_cycles(g.text, in.degree));
      } catch (const std::exception& e) {
        throw InputError(g.line, 1, e.what());
      }
      if (!gens.back().is_identity()) written.push_back(gens.back().cycles());
    }
    try {
      in.groups.push_back(group_closure(gens, in.degree));
    } catch (const std::exception& e) {
      throw InputError(raw[b].front().line, 1, std::string(names[b]) + ": " + e.what());
    }
    in.generators.push_back(written);
    if (b > 0 && !in.groups[b].is_subgroup_of(in.groups[b - 1]))
      throw InputError(raw[b].front().line, 1,
                       std::string(names[b]) + " is not a subgroup of " + names[b - 1]);
  }
  return in;
}

std::string inline_to_text(std::string_view spec) {
  std::string out;
  for (char c : spec) {
    if (c == ',') out += '\n';
    else if (c == ';') out += "\n\n";
    else out += c;
  }
  return out + '\n';
}

json catalog_report(const std::vector<int>& ids) {
  auto t0 = std::chrono::steady_clock::now();
  json out = header("catalog", FieldSpec::rationals());
  json criteria = json::array(), audits = json::array();
  for (int id : ids.empty() ? criterion_ids() : ids) {
    auto r = run_criterion(id);
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed},
                        {"seconds", r.seconds},
                        {"limit_seconds", r.limit_seconds},
                        {"detail", r.detail}});
    Audit a;
    if (!r.passed) a.fail(r.detail);
    audits.push_back(audit_json("criterion " + std::to_string(r.id), a));
  }
  out["criteria"] = criteria;
  out["audits"] = audits;
  out["status"] = "decided";
  out["seconds"] = seconds_since(t0);
  return out;
}

json depth_report(const GroupInput& in, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  return with_field(cfg.field, [&](auto tag) {
    using T = decltype(tag);
    Caps caps{cfg.max_side};
    auto rep = subgroup_depth<T>(in.groups[0], in.groups[1], cfg.field, cfg.n_max, caps, cfg.cap_dim);
    json out = header("depth", cfg.field);
    out["input"] = input_json(in);
    out["n_max"] = cfg.n_max;
    out["cap_dim"] = cfg.cap_dim;
    out["depth"] = rep.depth ? json(*rep.depth) : json(nullptr);
    out["tried_up_to"] = rep.tried_up_to;
    out["truncated"] = rep.truncated;
    out["truncation_note"] = rep.truncation_note;
    json levels = json::array();
    for (const auto& l : rep.levels)
      levels.push_back({{"n", l.n}, {"holds", l.holds()}, {"right", verdict_json(l.right)}, {"left", verdict_json(l.left)}});
    out["levels"] = levels;
    out["status"] = rep.depth ? "decided" : rep.truncated ? "truncated" : "inconclusive";
    out["seconds"] = seconds_since(t0);
    return out;
  });
}

json tower_report(const GroupInput& in, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = in.groups[0];
  const auto& h = in.groups[1];
  const auto& k = in.groups[2];
  json out = with_field(cfg.field, [&](auto tag) {
    using T = decltype(tag);
    Caps caps{cfg.max_side};
    auto tw = group_tower<T>(g, h, k, cfg.field);
    auto inst = DepthInstance<T>::from_tower(tw);
    json out = header("tower", cfg.field);
    out["input"] = input_json(in);
    bool crit = group_criterion(g, h, k);
    out["criterion"] = crit;
    json audits = json::array();
    if (crit) {
      auto w = group_quasibases(inst, g, h, k);
      auto a = verify_quasibases(inst, w);
      out["explicit_witness"] = {{"verified", a.ok}, {"witness", witness_json(w)}};
      audits.push_back(audit_json("double-coset witness satisfies the quasibase identity", a));
    } else {
      out["explicit_witness"] = nullptr;
    }
    auto right = rd3_witness(inst, Side::Right, caps);
    auto left = rd3_witness(inst, Side::Left, caps);
    auto endo_r = endo_characterization(tw, Side::Right, caps);
    auto endo_l = endo_characterization(tw, Side::Left, caps);
    out["solver"] = {{"right", verdict_json(right)}, {"left", verdict_json(left)}};
    out["endo"] = {{"right", verdict_json(endo_r.verdict)}, {"left", verdict_json(endo_l.verdict)}};
    Audit agree;
    if (crit && !right.holds()) agree.fail("criterion holds but the right solver does not find a witness");
    auto decided = [](const auto& v) { return v.status != Status::Inconclusive; };
    if (decided(right) && decided(endo_r.verdict) && right.status != endo_r.verdict.status)
      agree.fail("right solver and End characterization disagree");
    if (decided(left) && decided(endo_l.verdict) && left.status != endo_l.verdict.status)
      agree.fail("left solver and End characterization disagree");
    audits.push_back(audit_json("criterion, solver and End characterization agree", agree));
    out["audits"] = audits;
    bool all_decided = decided(right) && decided(left) && decided(endo_r.verdict) && decided(endo_l.verdict);
    out["status"] = all_decided ? "decided" : "inconclusive";
    return out;
  });
  if (cfg.seed) {
    std::uint32_t p = random_prime(*cfg.seed);
    auto fp = FieldSpec::prime(p);
    auto inst = DepthInstance<Fp>::from_tower(group_tower<Fp>(g, h, k, fp));
    Caps caps{cfg.max_side};
    out["modular_check"] = {{"seed", *cfg.seed},
                            {"prime", p},
                            {"right", to_string(rd3_witness(inst, Side::Right, caps).status)},
                            {"left", to_string(rd3_witness(inst, Side::Left, caps).status)}};
  }
  out["seconds"] = seconds_since(t0);
  return out;
}

json structures_report(const GroupInput& in, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  json out = with_field(cfg.field, [&](auto tag) {
    using T = decltype(tag);
    Caps caps{cfg.max_side};
    auto tw = group_tower<T>(in.groups[0], in.groups[1], in.groups[2], cfg.field);
    auto sb = standard_bimodules(tw, caps);
    json out = header("structures", cfg.field);
    out["input"] = input_json(in);
    out["dims"] = {{"A", tw.a->dim}, {"B", tw.b->dim}, {"C", tw.c->dim}, {"P", sb.p.dim()},
                   {"Q", sb.q.dim()}, {"T", sb.t.dim()}, {"U", sb.u.dim()}, {"R", sb.r.dim()},
                   {"V", sb.v.dim()}, {"E", sb.e.dim()}, {"J", sb.j.dim()}, {"S", sb.s.dim()},
                   {"S_cal", sb.s_cal.dim()}};
    json audits = json::array();
    json notes = json::array();
    audits.push_back(audit_json("closure and ring laws", sb.ring_laws));
    Audit two_ways;
    if (sb.dim_v_via_end != sb.v.dim()) two_ways.fail("dim A^C != dim End(_A A_C)");
    if (sb.dim_p_via_hom != sb.p.dim()) two_ways.fail("dim P != dim Hom(A ⊗_C A, A ⊗_B A)");
    if (sb.dim_q_via_hom != sb.q.dim()) two_ways.fail("dim Q != dim Hom(A ⊗_B A, A ⊗_C A)");
    audits.push_back(audit_json("dimensions computed two ways agree", two_ways));
    auto m = morita_anchor_check(sb, caps);
    audits.push_back(audit_json("Morita associativity", m.associativity));
    audits.push_back(audit_json("Morita products", m.products));
    out["morita"] = {{"triples", m.triples},
                     {"anchor_r_bijective", m.anchor_r_bijective},
                     {"anchor_v_bijective", m.anchor_v_bijective},
                     {"h_separable", m.h_separable}};
    bool partial = false;
    auto right = rd3_witness(tw, Side::Right, caps);
    out["right_d3"] = to_string(right.status);
    if (right.holds()) {
      auto cd = coring_on_p(sb, *right.witness);
      auto c = audit_coring(sb, cd, *right.witness);
      audits.push_back(audit_json("P ⊗_V P identification", c.identification));
      audits.push_back(audit_json("coring coassociativity", c.coassociative));
      audits.push_back(audit_json("left counit law", c.counit_left));
      audits.push_back(audit_json("right counit law", c.counit_right));
      audits.push_back(audit_json("grouplike", c.grouplike));
      audits.push_back(audit_json("pairing nondegenerate", c.pairing));
      audits.push_back(audit_json("convolution dual to composition", c.duality));
      out["pairing_rank"] = c.pairing_rank;
      if (c.dim_p != c.dim_e) notes.push_back("dim P != dim E");
      auto pg = pre_galois(sb, *right.witness);
      audits.push_back(audit_json("β⁻¹∘β = id", pg.beta_then_inverse));
      audits.push_back(audit_json("β∘β⁻¹ = id", pg.inverse_then_beta));
      audits.push_back(audit_json("coaction of 1", pg.coaction_unit));
    } else {
      partial = true;
      notes.push_back("not right D3: coring and pre-Galois stages skipped");
    }
    auto left = rd3_witness(tw, Side::Left, caps);
    out["left_d3"] = to_string(left.status);
    if (left.holds()) {
      auto s = smash_and_invariants(sb, *left.witness, caps);
      audits.push_back(audit_json("End A_B ≅ A ⊗_V J", s.end_iso));
      if (s.composite_d2) {
        audits.push_back(audit_json("J is a right coideal", s.coideal));
        audits.push_back(audit_json("coproduct of S from both sides", s.coproduct_agree));
      }
      audits.push_back(audit_json("smash product law", s.smash_law));
      audits.push_back(audit_json("A^J ≅ End(_E A)", s.bicommutator));
      if (s.balanced_case) audits.push_back(audit_json("A^S = B", s.invariants));
      if (!s.note.empty()) notes.push_back(s.note);
    } else {
      partial = true;
      notes.push_back("not left D3: smash product stage skipped");
    }
    out["audits"] = audits;
    out["notes"] = notes;
    out["status"] = partial ? "partial" : "complete";
    return out;
  });
  out["seconds"] = seconds_since(t0);
  return out;
}

json fixgal_report(std::uint32_t p, int n, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  auto fc = field_fix_gal(p, n, cfg.antipode);
  json out = header("fixgal", FieldSpec::prime(p));
  out["p"] = p;
  out["n"] = n;
  json mod = json::array();
  for (auto c : fc.e.modulus) mod.push_back(c);
  out["modulus"] = mod;
  json rows = json::array();
  for (const auto& f : fc.fields) {
    auto tw = field_tower(fc.e, f.d);
    auto v = rd3_witness(tw, Side::Left, Caps{cfg.max_side});
    rows.push_back({{"d", f.d},
                    {"dim_field", f.field.dim()},
                    {"dim_gal", f.gal.dim()},
                    {"dim_fix_of_gal", f.fix_of_gal.dim()},
                    {"dim_gal_of_fix", f.gal_of_fix.dim()},
                    {"left_d3", to_string(v.status)}});
  }
  out["fields"] = rows;
  json audits = json::array();
  audits.push_back(audit_json("Fix(Gal(F)) = F and Gal(Fix(W)) = W", fc.round_trips));
  audits.push_back(audit_json("λ(E) ⊆ Gal(F) and dim Gal(F) = (n/d)^2 d", fc.gal_shape));
  Audit counts;
  if (!fc.counts_match) counts.fail("intermediate field count differs from the divisor count");
  audits.push_back(audit_json("one intermediate field per divisor of n", counts));
  Audit d3;
  for (const auto& r : rows)
    if (r["left_d3"] != "true") d3.fail("F_p ⊆ F_p^" + std::to_string(r["d"].get<int>()) + " ⊆ E is not left D3");
  audits.push_back(audit_json("every field tower is left D3", d3));
  out["audits"] = audits;
  if (fc.antipode) out["antipode"] = audit_json("trace-form antipode candidate (experimental)", *fc.antipode);
  out["status"] = "decided";
  out["seconds"] = seconds_since(t0);
  return out;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  const std::string cmd = r.at("command").get<std::string>();
  os << "towerdepth " << cmd << " over " << r["field"].get<std::string>() << "\n";
  if (r.contains("input")) groups_text(os, r["input"]);
  if (cmd == "depth") {
    for (const auto& l : r["levels"])
      os << "n = " << l["n"].get<int>() << ": right " << verdict_text(l["right"]) << ", left " << verdict_text(l["left"])
         << "\n";
    if (!r["depth"].is_null()) {
      os << "depth = " << r["depth"].get<int>() << "\n";
    } else {
      os << "depth >= " << r["tried_up_to"].get<int>() + 1;
      if (r["truncated"].get<bool>())
        os << " (truncated: " << r["truncation_note"].get<std::string>() << ")";
      else
        os << " (n_max = " << r["n_max"].get<int>() << " reached)";
      os << "\n";
    }
  } else if (cmd == "tower") {
    os << "criterion: " << (r["criterion"].get<bool>() ? "true" : "false") << "\n";
    if (!r["explicit_witness"].is_null())
      os << "explicit witness: " << (r["explicit_witness"]["verified"].get<bool>() ? "verified" : "FAILED") << "\n";
    os << "solver: right " << verdict_text(r["solver"]["right"]) << ", left " << verdict_text(r["solver"]["left"]) << "\n";
    os << "End characterization: right " << verdict_text(r["endo"]["right"]) << ", left "
       << verdict_text(r["endo"]["left"]) << "\n";
    if (r.contains("modular_check")) {
      const auto& m = r["modular_check"];
      os << "modular check (seed " << m["seed"].get<std::uint64_t>() << ", p = " << m["prime"].get<std::uint32_t>()
         << "): right " << m["right"].get<std::string>() << ", left " << m["left"].get<std::string>() << "\n";
    }
    audits_text(os, r["audits"]);
  } else if (cmd == "structures") {
    os << "dims:";
    for (const char* k : {"A", "B", "C", "P", "Q", "T", "U", "R", "V", "E", "J", "S", "S_cal"})
      os << " " << k << "=" << r["dims"][k].get<std::size_t>();
    os << "\n";
    os << "right D3 " << r["right_d3"].get<std::string>() << ", left D3 " << r["left_d3"].get<std::string>() << "\n";
    const auto& m = r["morita"];
    os << "Morita triples " << m["triples"].get<std::size_t>() << ", anchors "
       << (m["anchor_r_bijective"].get<bool>() ? "bijective" : "not bijective") << "/"
       << (m["anchor_v_bijective"].get<bool>() ? "bijective" : "not bijective") << ", B|C "
       << (m["h_separable"].get<bool>() ? "H-separable" : "not H-separable") << "\n";
    audits_text(os, r["audits"]);
    for (const auto& n : r["notes"]) os << "note: " << n.get<std::string>() << "\n";
  } else if (cmd == "fixgal") {
    os << "E = F" << r["p"].get<std::uint32_t>() << "^" << r["n"].get<int>() << ", modulus";
    for (const auto& c : r["modulus"]) os << " " << c.get<std::uint32_t>();
    os << " (constant term first)\n";
    os << "   d  dim F  dim Gal(F)  dim Fix(Gal)  dim Gal(Fix)  left D3\n";
    for (const auto& f : r["fields"]) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%4d  %5zu  %10zu  %12zu  %12zu  %s\n", f["d"].get<int>(),
                    f["dim_field"].get<std::size_t>(), f["dim_gal"].get<std::size_t>(),
                    f["dim_fix_of_gal"].get<std::size_t>(), f["dim_gal_of_fix"].get<std::size_t>(),
                    f["left_d3"].get<std::string>().c_str());
      os << buf;
    }
    audits_text(os, r["audits"]);
    if (r.contains("antipode")) audits_text(os, json::array({r["antipode"]}));
  } else if (cmd == "catalog") {
    for (const auto& c : r["criteria"])
      os << (c["passed"].get<bool>() ? "PASS" : "FAIL") << "  [" << c["id"].get<int>() << "] "
         << c["name"].get<std::string>() << "  (" << fmt_seconds(c["seconds"].get<double>()) << " s)"
         << (c["detail"].get<std::string>().empty() ? "" : "  " + c["detail"].get<std::string>()) << "\n";
  }
  os << "status: " << r["status"].get<std::string>() << ", " << fmt_seconds(r["seconds"].get<double>()) << " s\n";
  return os.str();
}

int exit_code(const json& r) {
  if (r.contains("audits") && !all_ok(r["audits"])) return 3;
  const std::string s = r.value("status", "");
  return s == "decided" || s == "complete" ? 0 : 2;
}

}  // namespace td
