#ifndef LEL_CLI_HPP
#define LEL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lel {
namespace cli {

// Dispatches one invocation (argv without the program name).
// Exit codes: 0 success, 1 domain error, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace lel

#endif
