#include "doctest.h"
#include "towerdepth/report.hpp"

using namespace td;

namespace {
GroupInput parse2(const std::string& s) { return parse_group_input(s, 2); }

std::pair<std::size_t, std::size_t> error_position(const std::string& text, std::size_t blocks) {
  try {
    parse_group_input(text, blocks);
  } catch (const InputError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}
}  // namespace

TEST_CASE("group input format") {
  auto in = parse2("field: F7\n# S3 and a transposition\n(1 2 3)\n(1 2)\n\n(1 2)\n");
  REQUIRE(in.field);
  CHECK(in.field->p == 7);
  CHECK(in.degree == 3);
  CHECK(in.groups[0].order() == 6);
  CHECK(in.groups[1].order() == 2);
  CHECK(in.generators[0] == std::vector<std::string>{"(1 2 3)", "(1 2)"});

  auto trivial = parse_group_input(inline_to_text("(1 2 3);()"), 2);
  CHECK(trivial.groups[1].order() == 1);
  CHECK(trivial.generators[1].empty());
  CHECK_FALSE(trivial.field);

  // several blank lines still separate exactly two blocks
  CHECK(parse2("(1 2)\n\n\n\n(1 2)\n").groups.size() == 2);
}

TEST_CASE("input errors carry positions") {
  CHECK(error_position("(1 2 3)\n(1 2\n\n(1 2)\n", 2) == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(error_position("(1 2 3)\n\n(1 x)\n", 2) == std::pair<std::size_t, std::size_t>{3, 4});
  CHECK(error_position("(1 2 3)\n\n(0 1)\n", 2) == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(error_position("(1 2 3)\n\n(1 4)\n", 2) == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_position("(1 2 3)\n", 2).first == 2);
  CHECK(error_position("(1 2)\nfield: Q\n\n(1 2)\n", 2) == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(error_position("field: F4\n(1 2)\n\n(1 2)\n", 2).first == 1);
  CHECK(error_position("degree: 3\n(1 2)\n\n(1 2)\n", 2).first == 1);
}

TEST_CASE("depth reports") {
  RunConfig cfg;
  auto r = depth_report(parse2(inline_to_text("(1 2 3),(1 2);(1 2)")), cfg);
  CHECK(r["schema"] == kReportSchema);
  CHECK(r["depth"] == 3);
  CHECK(exit_code(r) == 0);
  CHECK(render_text(r).find("depth = 3\n") != std::string::npos);
  // every true verdict carries its verified witness
  for (const auto& l : r["levels"])
    for (const char* side : {"right", "left"})
      if (l[side]["status"] == "true") {
        CHECK(l[side].contains("witness"));
        CHECK(l[side]["verified"] == true);
      }

  CHECK(depth_report(parse2(inline_to_text("(1 2 3),(1 2);(1 2 3)")), cfg)["depth"] == 2);
  CHECK(depth_report(parse2(inline_to_text("(1 2 3),(1 2);(1 2 3),(1 2)")), cfg)["depth"] == 2);

  RunConfig small;
  small.cap_dim = 10;
  auto t = depth_report(parse2(inline_to_text("(1 2 3),(1 2);(1 2)")), small);
  CHECK(t["depth"].is_null());
  CHECK(t["truncated"] == true);
  CHECK(exit_code(t) == 2);
  CHECK(render_text(t).find("truncated") != std::string::npos);

  RunConfig f5;
  f5.field = FieldSpec::prime(5);
  CHECK(depth_report(parse2(inline_to_text("(1 2 3),(1 2);(1 2)")), f5)["field"] == "F5");
}

TEST_CASE("tower reports") {
  RunConfig cfg;
  auto yes = tower_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2 3);(1 2 3)"), 3), cfg);
  CHECK(yes["criterion"] == true);
  CHECK(yes["explicit_witness"]["verified"] == true);
  CHECK(yes["solver"]["right"]["status"] == "true");
  CHECK(exit_code(yes) == 0);

  auto no = tower_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2);(1 2)"), 3), cfg);
  CHECK(no["criterion"] == false);
  CHECK(no["explicit_witness"].is_null());
  CHECK(no["solver"]["right"]["status"] == "false");
  CHECK(exit_code(no) == 0);

  auto s4 = tower_report(parse_group_input(inline_to_text("(1 2 3 4),(1 2);(1 2 3),(1 2 4);(1 2)(3 4),(1 3)(2 4)"), 3), cfg);
  CHECK(s4["criterion"] == true);
  CHECK(s4["explicit_witness"]["verified"] == true);
  CHECK(s4["solver"]["right"]["status"] == "true");

  RunConfig seeded;
  seeded.seed = 11;
  auto a = tower_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2 3);(1 2 3)"), 3), seeded);
  auto b = tower_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2 3);(1 2 3)"), 3), seeded);
  CHECK(a["modular_check"]["prime"] == b["modular_check"]["prime"]);
  CHECK(a["modular_check"]["right"] == "true");
}

TEST_CASE("structures and fixgal reports") {
  RunConfig cfg;
  auto s = structures_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2 3);(1 2 3)"), 3), cfg);
  CHECK(s["status"] == "complete");
  CHECK(s["dims"]["P"] == 8);
  CHECK(exit_code(s) == 0);
  auto whole = structures_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2 3),(1 2);(1 2 3),(1 2)"), 3), cfg);
  CHECK(whole["status"] == "complete");
  CHECK(exit_code(whole) == 0);
  auto partial = structures_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2);(1 2)"), 3), cfg);
  CHECK(partial["status"] == "partial");
  CHECK(exit_code(partial) == 2);

  auto f = fixgal_report(3, 2, cfg);
  CHECK(f["fields"].size() == 2);
  CHECK(f["fields"][0]["dim_gal"] == 4);
  CHECK(f["fields"][1]["dim_gal"] == 2);
  CHECK(exit_code(f) == 0);
}

TEST_CASE("JSON reports regenerate the text form") {
  RunConfig cfg;
  std::vector<json> reports = {
      depth_report(parse2(inline_to_text("(1 2 3),(1 2);(1 2)")), cfg),
      tower_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2);()"), 3), cfg),
      structures_report(parse_group_input(inline_to_text("(1 2 3),(1 2);(1 2 3);()"), 3), cfg),
      fixgal_report(2, 4, cfg),
  };
  for (const auto& r : reports) {
    CAPTURE(r["command"].get<std::string>());
    auto back = json::parse(r.dump(2));
    CHECK(back == r);
    CHECK(render_text(back) == render_text(r));
  }
}
