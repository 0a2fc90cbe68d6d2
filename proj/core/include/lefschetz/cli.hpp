#pragma once

// Scenario files and the plain-text reports of the command-line runner.
//
// A scenario file is a list of `key = value` lines; `#` starts a comment.
//
//   space    = affine_line | open_elliptic | proper_elliptic
//   p        = 5
//   q_degree = 1                 (default 1)
//   alpha    = 1                 affine line only
//   beta     = 1                 affine line only
//   curve    = c2 c1 c0          y^2 = x^3 + c2 x^2 + c1 x + c0
//   point_P  = O | x y           translation point, F_q-rational
//   sign     = 1 | -1            (default 1)
//   k        = 1                 (default 1)
//   sheaf_rank = 1, sheaf_n = 1  (defaults)
//   u        = 1 0; 0 1          rows separated by ';' (default identity)
//   m_range  = 1..3 | 1,2,3
//
// Field elements are integers: negative values are read mod p, others as
// the index whose base-p digits are the coordinates in the polynomial basis.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/trace_formula.hpp"

namespace lefschetz {

/// Throws ParseError naming the line and key.
Scenario parse_scenario(const std::string& text, const std::string& name = {});
Scenario load_scenario(const std::string& path);

/// "1..3" or "1,2,3".
std::vector<int> parse_m_range(const std::string& text);

struct RunOptions {
  std::uint64_t seed = 20240517;
  OracleBudget budget;
  std::optional<std::vector<int>> m_override;
  std::vector<std::uint64_t> q_values;  // zp-demo; defaults to {2, 9}
  int per_config = 200;                 // lemma5
  int threads = 0;
  std::int64_t rhs_u_scale = 1;         // fault injection, verify only
};

enum class Command { Verify, WoodsHole, FixCount, HasseWitt, PropertySuite, ZpDemo };

std::optional<Command> parse_command(const std::string& name);

/// Runs the command on the scenario files and writes the report to `out`,
/// diagnostics to `err`. Returns the process exit status: 0 iff every
/// verdict is OK, 1 on a failed verdict, 2 on unusable input.
int run(Command command, const std::vector<std::string>& paths, const RunOptions& options, std::ostream& out,
        std::ostream& err);

/// `m | lhs | rhs | fix_count | verdict` table and the `OK k/k` line.
std::string format_report(const VerificationReport& report);
std::string format_zp_table(std::uint64_t q, const std::vector<ZpRow>& rows);

}  // namespace lefschetz
