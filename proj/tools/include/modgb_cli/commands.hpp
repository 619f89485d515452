#ifndef MODGB_CLI_COMMANDS_HPP
#define MODGB_CLI_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modgb_cli/corpus.hpp"
#include "modgb_cli/problem.hpp"
#include "modgb_cli/verify.hpp"
#include "json.hpp"

namespace modgb::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2, kLimitExceeded = 3 };

struct CommandOptions {
  bool json = false;
  std::optional<Degree> zmax;
  std::uint64_t seed = 1;
};

// Each command returns its structured record; text goes to `out` unless
// options.json is set, in which case the record is printed instead.
Json cmd_gb(const Problem& p, const CommandOptions& options, std::ostream& out);
Json cmd_decompose(const Problem& p, const CommandOptions& options, std::ostream& out);
Json cmd_macaulay(const Problem& p, const CommandOptions& options, std::ostream& out);
Json cmd_hilbert(const Problem& p, const CommandOptions& options, std::ostream& out);
Json cmd_fitting(const Problem& p, const CommandOptions& options, std::ostream& out);
Json cmd_bounds(const Problem& p, const CommandOptions& options, std::ostream& out);

/// Runs the verify pipeline on each problem; returns the exit code.
int cmd_verify(const std::vector<Problem>& problems, const CommandOptions& options,
               std::ostream& out);

Json to_json(const VerifyRecord& r);
Json to_json(const BoundReport& r);

}  // namespace modgb::cli

#endif  // MODGB_CLI_COMMANDS_HPP
