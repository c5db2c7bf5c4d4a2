#ifndef INDSAT_CLI_HH
#define INDSAT_CLI_HH

#include <ostream>
#include <string>
#include <vector>

namespace indsat
{
    inline constexpr int exit_success = 0;
    inline constexpr int exit_verification_failed = 1;
    inline constexpr int exit_usage = 2;

    /// Runs the indsat-lab command line. args excludes the program name.
    /// Machine-readable lines start with RESULT, FAIL, CERT or ROW; diagnostics
    /// and timing go to err.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
