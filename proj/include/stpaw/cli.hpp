#pragma once

// Command-line driver. Subcommands: init, check, classify, obligations,
// ucas, report, fmt. Exit codes: 0 clean, 1 findings of error severity
// (or any finding under --strict), 2 usage or file errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace stpaw {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace stpaw
