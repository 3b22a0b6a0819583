#ifndef BQALG_CLI_HPP_
#define BQALG_CLI_HPP_

#include <ostream>
#include <string_view>

#include "bqalg/module_spec.hpp"
#include "bqalg/quiver.hpp"

namespace bqalg {

  // Exit codes of the command-line tool.
  enum ExitCode : int {
    exit_ok       = 0,  // success, or a positive decision
    exit_negative = 1,  // negative decision, unachievable target, failed check
    exit_input    = 2   // unreadable or invalid input
  };

  // S:i, P:i, Delta:i, Gamma:i, Gamma:i:m, M:i:a,b,...
  // Throws InvalidInput on malformed text.
  [[nodiscard]] ModuleSpec parse_module_spec(Quiver const& q, std::string_view text);

  // Entry point of the `bqalg` tool, with its output streams injected.
  int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bqalg

#endif  // BQALG_CLI_HPP_
