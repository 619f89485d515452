#ifndef MODGB_CLI_PROBLEM_HPP
#define MODGB_CLI_PROBLEM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modgb/errors.hpp"
#include "modgb/module_element.hpp"

namespace modgb::cli {

/// A free module with an order and a list of generators.
struct Problem {
  std::string name;
  FreeModule::Ptr ambient;
  std::vector<ModuleElement> gens;
};

/// Syntax or name error, with a 1-based position.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the line-oriented problem format. With `field_override` set, the
/// file's field header is ignored and coefficients are mapped into that field.
Problem parse_problem(std::string_view text, std::optional<Field> field_override = std::nullopt);

Problem read_problem_file(const std::string& path,
                          std::optional<Field> field_override = std::nullopt);

/// Canonical text form; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const Problem& p);

/// "QQ", "GF 32003" (also "GF(32003)").
Field parse_field(std::string_view text);

}  // namespace modgb::cli

#endif  // MODGB_CLI_PROBLEM_HPP
