#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pr::cli {

/// Dispatches one command line. Exit code 0 on success, 1 on
/// NotFound/Unknown/budget outcomes, 2 on usage errors, 3 on internal bug
/// certificates.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pr::cli
