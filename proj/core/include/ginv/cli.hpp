#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ginv {

// Full command-line driver, callable in-process. `args` excludes the program
// name. JSON results go to `out` (or the --out file); diagnostics go to
// `err`. Returns the process exit code:
//   0  computed and the verdict (if any) is true
//   1  computed but the verdict is false, or a domain refusal
//      (singular matrix, no group inverse, hypothesis violation)
//   2  usage, I/O, or malformed input
//   3  numerical failure (no convergence, generation budget exhausted)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ginv
