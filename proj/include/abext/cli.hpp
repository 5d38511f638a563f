#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abext::cli {

  //! Exit codes shared by every subcommand.
  enum ExitCode : int {
    ok             = 0,
    failed         = 1,
    vacuous        = 2,
    resource_limit = 3,
    usage          = 64
  };

  inline constexpr char const* version = "abext 1.0.0";

  //! Runs one command line (without the program name) and returns the exit
  //! code. Normal output goes to `out` unless --out names a file; messages
  //! go to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace abext::cli
