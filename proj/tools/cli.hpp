#pragma once

#include <ostream>

namespace jacobi {

/// Runs the `jacobi` command line. Returns 0 on success, 1 for usage and
/// validation errors, 2 for numerical failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jacobi
