#ifndef ARITHLINK_CLI_HPP_
#define ARITHLINK_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace arithlink {

/* Runs one command line (without the program name). JSON goes to out,
 * help text and --verbose renderings to err. Returns the exit code:
 * 0 success, 1 domain error, 2 usage error. */
int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace arithlink

#endif /* ARITHLINK_CLI_HPP_ */
