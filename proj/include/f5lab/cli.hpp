#pragma once

#include <iosfwd>

namespace f5lab::cli {

/// Entry point. Exit codes: 0 all requested checks pass, 1 some check fails, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace f5lab::cli
