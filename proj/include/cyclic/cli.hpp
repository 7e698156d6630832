#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclic {

/* Runs one csieve invocation.  args is argv without the program name.
   Exit codes: 0 success (a "does not sieve" verdict is still success),
   1 a verification criterion failed, 2 usage or input error. */
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cyclic
