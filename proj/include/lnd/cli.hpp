#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lnd::cli {

// Runs one command line (without the program name). Returns the exit status:
// 0 on success, 1 on domain errors, 2 on usage or parse errors. Failures are
// reported on `err` as a single "ERROR <code>: <message>" line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lnd::cli
