#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bchlie::cli {

/// Process exit codes.
enum ExitCode : int
{
	ok = 0,
	input_error = 2,
	numerical_error = 3,
};

/// Runs the command-line tool; argv[0] is the program name. Results go to
/// `out` as JSON, diagnostics to `err`.
int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

/// Same, with the arguments after the program name.
int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err);

} // namespace bchlie::cli
