#ifndef CATMAT_TOOLS_COMMANDS_HPP_
#define CATMAT_TOOLS_COMMANDS_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace catmat::cli {

  // Process exit codes.
  enum ExitStatus : int {
    ok           = 0,  // realizable / verified / agree / found
    negative     = 1,  // not realizable / verification failed / disagree / exhausted
    inconclusive = 2,
    usage        = 3,  // usage or parse error
  };

  // Runs the command line (without the program name). Results go to out,
  // diagnostics to err.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace catmat::cli

#endif  // CATMAT_TOOLS_COMMANDS_HPP_
