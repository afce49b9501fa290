#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "towerdepth/field.hpp"
#include "towerdepth/groups.hpp"

namespace td {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "towerdepth-report/1";

/// Malformed input, reported with a 1-based line and column.
class InputError : public std::invalid_argument {
 public:
  InputError(std::size_t line, std::size_t column, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Group file: optional `field: Q | F<p>` header, then blocks of generators in
/// 1-based cycle notation (one per line, `()` for the identity) separated by
/// blank lines. `#` starts a comment. Blocks are G, H, K in that order.
struct GroupInput {
  std::optional<FieldSpec> field;
  int degree = 1;
  std::vector<PermGroup> groups;
  std::vector<std::vector<std::string>> generators;  // as written
};

/// Parses and checks that each block is a subgroup of the previous one.
GroupInput parse_group_input(std::string_view text, std::size_t blocks);

/// Inline form: generators separated by ',' and blocks by ';', e.g. "(1 2 3),(1 2);(1 2)".
std::string inline_to_text(std::string_view spec);

struct RunConfig {
  FieldSpec field = FieldSpec::rationals();
  int n_max = 6;
  std::size_t cap_dim = 1296;
  std::size_t max_side = 6000;
  std::optional<std::uint64_t> seed;
  bool antipode = false;
};

json depth_report(const GroupInput& in, const RunConfig& cfg);
json tower_report(const GroupInput& in, const RunConfig& cfg);
json structures_report(const GroupInput& in, const RunConfig& cfg);
json fixgal_report(std::uint32_t p, int n, const RunConfig& cfg);
/// Runs the end-to-end criteria (all when `ids` is empty).
json catalog_report(const std::vector<int>& ids);

/// Human-readable form of any report. A pure function of the JSON.
std::string render_text(const json& report);

/// 0 decided, 2 truncated or inconclusive, 3 an audit failed.
int exit_code(const json& report);

}  // namespace td
