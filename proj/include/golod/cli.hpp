#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace golod::cli {

/// Runs one command. `in` backs the document when the positional file is
/// absent or "-". Returns the process exit code: 0 success / property true,
/// 1 property false (or unstabilized), 2 error. Reports go to `out` and are
/// byte-identical for fixed arguments; timing goes to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace golod::cli
