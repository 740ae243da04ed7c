// Command-line front end.  Exit codes: 0 true/success, 1 false/failed
// check, 2 usage or input error, 3 cap exceeded, 4 internal error.

#ifndef FREG_TOOLS_CLI_HPP_
#define FREG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace freg::cli {

  enum Exit : int {
    ok       = 0,
    negative = 1,
    usage    = 2,
    cap      = 3,
    internal = 4,
  };

  //! `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace freg::cli

#endif  // FREG_TOOLS_CLI_HPP_
