#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dieu::cli {

// Runs the command line tool. Exit codes: 0 success, 1 domain error or failed
// verification (with a JSON error object on `out`), 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dieu::cli
