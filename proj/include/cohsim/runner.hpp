// Executes one configured scenario and writes its CSV outputs.
#pragma once

#include <iosfwd>
#include <string>

#include "cohsim/config.hpp"

namespace cohsim {

// Numeric CSV formatting: 6 significant digits.
std::string format_sig6(double v);

// Returns 0 on success, 3 on a runtime or convergence failure.
// Output files land in cfg.out_dir; progress goes to `log`.
int run_scenario(const RunConfig& cfg, std::ostream& log);

}  // namespace cohsim
