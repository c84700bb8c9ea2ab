#ifndef HILBERT_CLI_HPP
#define HILBERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hilbert {

/// Dispatches one CLI invocation (args excludes the program name).
/// Exit codes: 0 affirmative, 1 definite negative (not Hilbert), 2
/// usage or input error. The global flag --json switches stdout to a
/// single JSON object.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbert

#endif
