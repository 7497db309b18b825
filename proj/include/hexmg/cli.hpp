#pragma once

#include <ostream>

namespace hexmg {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hexmg
