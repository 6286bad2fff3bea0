#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "framedual/error.hpp"

namespace framedual::cli {

// 0 ok, 1 internal, 2 input/usage, 3 size limit, 4 no tight dual,
// 5 bound infeasible, 6 bad spectrum target, 7 invalid tetris spectrum.
int exit_code(ErrorCode code);

/// Runs the command line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framedual::cli
