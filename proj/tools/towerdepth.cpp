#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "towerdepth/report.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const td::json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << td::render_text(report);
  return td::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth of subalgebra towers and the attached Galois structures, in exact arithmetic"};
  app.require_subcommand(1);

  std::string field_text, format = "text", path, spec;
  td::RunConfig cfg;
  std::uint64_t seed = 0;
  std::vector<int> criteria;
  std::uint32_t p = 2;
  int n = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", field_text, "Q or F<p>; overrides the input header");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-side", cfg.max_side, "cap on dim A ⊗_B A for the span systems")->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", path, "group file, or - for stdin");
    sub->add_option("-e,--inline", spec, "inline groups, e.g. \"(1 2 3),(1 2);(1 2)\"");
  };

  auto* depth = app.add_subcommand("depth", "subgroup depth of H in G through the Jones tower");
  add_common(depth);
  add_input(depth);
  depth->add_option("--nmax", cfg.n_max, "largest depth tested")->check(CLI::Range(2, 64));
  depth->add_option("--cap-dim", cfg.cap_dim, "largest tower level built")->check(CLI::PositiveNumber);

  auto* tower = app.add_subcommand("tower", "depth three of K ⊆ H ⊆ G: criterion, explicit witness and solvers");
  add_common(tower);
  add_input(tower);
  auto* seed_opt = tower->add_option("--seed", seed, "seed for the prime of an extra modular check");

  auto* structures = app.add_subcommand("structures", "bimodules, Morita context, coring, pre-Galois and smash audits");
  add_common(structures);
  add_input(structures);

  auto* fixgal = app.add_subcommand("fixgal", "Fix/Gal correspondence for F_p^n over F_p");
  fixgal->add_option("p", p, "prime")->required();
  fixgal->add_option("n", n, "degree")->required()->check(CLI::PositiveNumber);
  fixgal->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  fixgal->add_flag("--antipode", cfg.antipode, "also test the experimental trace-form antipode");

  auto* catalog = app.add_subcommand("catalog", "run the end-to-end criteria");
  catalog->add_option("--criteria", criteria, "criterion numbers (default: all)");
  catalog->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* render = app.add_subcommand("render", "print the text form of a JSON report");
  render->add_option("report", path, "JSON report, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto load = [&](std::size_t blocks) {
      if (path.empty() == spec.empty()) throw std::invalid_argument("give exactly one of a file or --inline");
      auto in = td::parse_group_input(spec.empty() ? read_input(path) : td::inline_to_text(spec), blocks);
      if (!field_text.empty())
        cfg.field = td::FieldSpec::parse(field_text);
      else if (in.field)
        cfg.field = *in.field;
      return in;
    };
    if (*depth) return emit(td::depth_report(load(2), cfg), format);
    if (*tower) {
      if (*seed_opt) cfg.seed = seed;
      return emit(td::tower_report(load(3), cfg), format);
    }
    if (*structures) return emit(td::structures_report(load(3), cfg), format);
    if (*fixgal) {
      if (!td::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
      return emit(td::fixgal_report(p, n, cfg), format);
    }
    if (*catalog) return emit(td::catalog_report(criteria), format);
    if (*render) {
      std::cout << td::render_text(td::json::parse(read_input(path)));
      return 0;
    }
  } catch (const td::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const td::json::exception& e) {
    std::cerr << "error: bad report: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    // size caps inside the library
    std::cerr << "stopped: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
