// builtins.hpp
//
// The six built-in reducible patterns, constructed in code with their
// symmetry groups. Each is also shipped as a pattern file under
// patterns/; the two forms are asserted equal by the test suite.

#pragma once

#include <string>
#include <vector>

#include "redcheck/pattern.hpp"

namespace redcheck {

// Catalog order: P22, P232, P323, P23322, P32332, P7.
const std::vector<std::string>& builtin_names();

bool is_builtin(const std::string& name);

// Returns a validated deep value; throws std::invalid_argument listing
// the available names when the name is unknown.
Pattern builtin(const std::string& name);

std::vector<Pattern> all_builtins();

}  // namespace redcheck
