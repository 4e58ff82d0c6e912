#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dspc::cli {

enum ExitCode : int {
  kFeasible = 0,    // feasible / verified
  kInfeasible = 1,  // infeasible / refuted
  kUsageError = 2,  // bad arguments or input
};

// args[0] is the program name. Subcommands: solve, verify, gen, oracle, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dspc::cli
