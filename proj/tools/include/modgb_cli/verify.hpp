#ifndef MODGB_CLI_VERIFY_HPP
#define MODGB_CLI_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modgb/bounds.hpp"
#include "modgb/decomposition.hpp"
#include "modgb/structure.hpp"
#include "modgb_cli/problem.hpp"

namespace modgb::cli {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  /// Caps every enumeration check at this degree.
  std::optional<Degree> zmax;
  std::uint64_t seed = 1;
  bool regular_sequence = true;
  RegularSequenceOptions regular_sequence_options;
};

struct VerifyRecord {
  std::string name;
  bool graded = true;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  Degree D = 0;
  Degree l = 0;
  std::optional<Degree> gb_degree;
  std::size_t gb_size = 0;
  /// deg(Q) of the normal-form decomposition (of the homogenized module when
  /// the input is not graded).
  std::optional<Degree> q_degree;
  std::optional<MacaulayConstants> constants;
  std::vector<Degree> fitting_degrees;
  std::optional<BoundReport> bounds;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  const Check* find(const std::string& name) const;
};

/// Runs every applicable check on one module. Throws ImproperSubmodule when M = F.
VerifyRecord verify_problem(const Problem& p, const VerifyOptions& options);

}  // namespace modgb::cli

#endif  // MODGB_CLI_VERIFY_HPP
