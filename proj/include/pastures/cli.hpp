#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pastures::cli {

// Runs one invocation. args excludes the program name. Reports are written
// to out, error messages to err. Exit codes: 0 success, 1 domain error,
// 2 resource cap or inconclusive bounded search, 3 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace pastures::cli
