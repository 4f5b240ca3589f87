// cli.hpp - Command-line front end, factored out of main() so tests can
// drive it with injected streams. Exit codes: 0 success / verified,
// 1 check failure, 2 usage or input error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rproj {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rproj
