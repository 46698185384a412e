#pragma once

// The verification pipeline behind each `voa` subcommand. Commands validate
// their arguments (std::invalid_argument on bad input) and never measure time;
// the CLI fills in timing_ms when asked to.

#include <optional>
#include <string>

#include "voa/report.hpp"

namespace voa {

Report cmd_verify_singular(int l);
Report cmd_zhu(int l);
Report cmd_polynomials(int l);
Report cmd_classify(int l);
/// subset: comma-separated support such as "1,3"; all 2^l subsets when absent.
Report cmd_admissible(int l, int max_m, const std::optional<std::string>& subset);
Report cmd_all(int l, int max_m);

}  // namespace voa
