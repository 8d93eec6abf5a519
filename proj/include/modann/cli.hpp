#pragma once

#include "modann/module.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace modann::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kViolation = 3 };

/// Run one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV `module,element,colon_gen,essential` over every element of each
/// module, followed by `#`-prefixed summary lines.
std::string colonTableCsv(const std::vector<Module>& modules);

} // namespace modann::cli
