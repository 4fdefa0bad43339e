// cli_app.hpp
//
// The command-line front end, callable in-process so the golden tests can
// pin its output. Exit codes: 0 = success and every checked pattern
// reducible; 1 = all patterns processed, at least one not reducible;
// 2 = no input could be loaded (or usage error); 3 = some inputs failed
// to load while others were processed.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace redcheck {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redcheck
