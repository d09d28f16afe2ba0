#ifndef ARTIN_CLI_HPP_
#define ARTIN_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace artin::cli {

  // Exit codes.  0 affirmative, 1 negative, 2 inconclusive; 3 and above are
  // errors.
  enum Exit : int {
    ok           = 0,
    negative     = 1,
    inconclusive = 2,
    usage_error  = 3,
    input_error  = 4,
    domain_error = 5,
  };

  // Runs one command; `args` excludes the program name.  JSON goes to `out`,
  // diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli

#endif  // ARTIN_CLI_HPP_
