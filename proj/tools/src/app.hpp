#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dunklkit {

/// Runs one command. Exit 0 on success, 2 on invalid input or a failed
/// hypothesis, 1 on an internal numerical failure. The report always goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dunklkit
