#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sforge {

/*
 * Runs one CLI invocation.  Returns 0 on success, 1 on validation or data
 * failure, 2 on usage errors.  Machine output (--format json) is stable:
 * sorted keys, floats rounded to 12 significant digits.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
