#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace etheta {

// Parsed command line for the etheta tool. The command runners write
// human tables or json-lines to the given streams and return the process
// exit code: 0 ok, 1 usage or parse failure, 2 core-tier refutation,
// 3 budget exceeded.
struct RunConfig {
  std::string command;               // analyze | axioms | map | verify | enumerate
  std::vector<std::string> inputs;   // positional file arguments
  bool set_given = false;
  std::string set_arg;               // comma-joined labels, no braces
  std::string op_arg;                // operator selector
  std::string families_arg;          // family selector list or "all"
  std::string map_arg;               // label association "a:c,b:c"
  std::string claim_arg;             // claim id
  bool list_claims = false;
  int points = 0;                    // enumerate carrier size
  bool t0_only = false;
  int max_points = 4;
  int max_map_points = 0;            // 0 = min(3, max_points)
  int workers = 0;                   // 0 = ETHETA_WORKERS or hardware
  std::uint64_t budget = 0;          // 0 = unlimited
  std::string resume_path;
  std::string format = "table";      // table | json-lines
};

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace etheta
