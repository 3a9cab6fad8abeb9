#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace legch {

// Runs one `legch` invocation.  `args` excludes the program name.
// Exit codes: 0 success, 1 usage or input error, 2 flooding failure.
// Color is used for text rendering only when allowed and LEGCH_COLOR != "0".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool allow_color = false);

} // namespace legch
