#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttk::cli {

// Exit codes: 0 success or true, 1 a check came out false, 2 bad input/usage.
// stdout always receives one JSON document; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ttk::cli
