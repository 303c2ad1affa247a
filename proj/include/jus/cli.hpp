#ifndef JUS_CLI_HPP
#define JUS_CLI_HPP

#include <iosfwd>

namespace jus {

// Exit codes: 0 affirmative, 1 negative or violation, 2 input error.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitInput = 2 };

// The `jus` command line. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jus

#endif  // JUS_CLI_HPP
