#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triadic::cli {

/// Runs one command. `args` excludes the program name. Returns the exit status:
/// 0 on success, 1 when a verification fails or input is invalid, and the
/// argument parser's code for usage errors.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace triadic::cli
