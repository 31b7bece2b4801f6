#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ltf::cli {

enum ExitCode : int { ok = 0, validation = 2, consistency = 3 };

// Runs one command line. `out` receives data for `--out -`, `err` receives diagnostics
// and "phase,name,seconds" timing lines.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ltf::cli
