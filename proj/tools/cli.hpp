#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdua::cli {

/// Runs the command line given by args (without the program name), writing
/// normal output to out and diagnostics to err. Returns the process exit
/// code: 0 success, 1 usage/parse/verification failure, 2 unsupported
/// scalar domain (UnsupportedScalarForm, RootsNotRepresentable).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gdua::cli
