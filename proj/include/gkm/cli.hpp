#ifndef GKM_CLI_HPP
#define GKM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm {

// Dispatches the command line. Machine-readable output goes to `out`,
// progress and diagnostics to `err`. Returns 0 on success or verification
// pass, 1 on verification failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gkm

#endif
