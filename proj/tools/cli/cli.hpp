#pragma once

#include <ostream>

namespace paracat::cli {

// Runs one command line. Exit codes: 0 verified, 1 violation found, 2 input
// invalid, 3 resource bound exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paracat::cli
