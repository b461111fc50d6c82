#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgezeta {

// One parsed command-line request. `run` validates the combination, so a
// Command can also be built directly (the tests do).
struct Command {
  std::string subcommand;   // "orbits", "luo", "zeta", or "verify"
  std::string family_text;  // family letter, optionally with the rank
                            // attached: "A", "C", "E8"
  int rank = 0;             // 0 means "take the rank from family_text"
  std::string orbit_text;   // "r,s" restricts output to the orbit through
                            // (r, s); empty means all orbits
  int q = 0;                // verify only: field size
  int max_len = 0;          // verify only: walk lengths 1..max_len
  std::string format = "text";  // "text" or "json"
  std::string output_path;      // write output here instead of `out`
};

// Executes one command, writing results to `out` (or cmd.output_path) and
// diagnostics to `err`. Returns the process exit code:
//   0  success (for verify: every length agreed),
//   1  verify found a mismatch between enumerated and predicted walk counts,
//   2  usage error or out-of-scope request (unknown flags, missing rank,
//      family without a closed product formula, building size or walk length
//      beyond the enumeration limits).
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Parses `args` (everything after the program name) and dispatches to `run`.
// Parse failures exit with code 2; --help prints usage and exits 0.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace edgezeta
