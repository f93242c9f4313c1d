// Command implementations behind the CLI: pure functions from an invocation
// to output text, so identical invocations give byte-identical output.
#pragma once

#include "rootobs/obstruction.hpp"
#include "rootobs/selftest.hpp"

#include <optional>

namespace rootobs {

struct Invocation {
  enum class Command { describe, psi, obstruct, table, selftest };
  enum class Format { text, json };

  Command command = Command::describe;
  std::string group_expr;           // --group
  std::string datum_file;           // --datum (path to a JSON document)
  std::optional<std::vector<Int>> d_lift;  // --d
  std::optional<long> genus;        // --genus
  std::string characteristic = "any";      // --char
  int rank_bound = 0;               // --rank-bound (table)
  Format format = Format::text;
  bool inject_snf_fault = false;    // hidden selftest hook
};

struct CommandResult {
  int exit_code = 0;  // 0 ok, 2 input error, 3 internal integrity violation
  std::string output;
};

// Runs one command; never throws. Input problems exit 2, internal
// inconsistencies exit 3.
CommandResult run_invocation(const Invocation& inv);

// The datum named by --group or --datum.
RootDatum resolve_datum(const Invocation& inv);

}  // namespace rootobs
