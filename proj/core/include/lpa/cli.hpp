#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa {

// Command-line dispatcher. Returns 0 on success, 1 on domain errors (with a
// machine-readable {"error": ...} payload), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lpa
