#include <iostream>

#include "CLI11.hpp"
#include "modgb/errors.hpp"
#include "modgb_cli/commands.hpp"

using namespace modgb;
using namespace modgb::cli;

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, cone decompositions and degree bounds for graded modules"};
  app.require_subcommand(1);

  CommandOptions options;
  std::string field_text;
  std::string file;
  std::vector<std::string> files;
  CorpusOptions corpus;
  std::size_t count = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", options.json, "print the structured record as JSON");
    sub->add_option("--zmax", options.zmax, "cap on enumeration degrees");
    sub->add_option("--field", field_text, "override the field (QQ or GF p)");
  };

  using Command = Json (*)(const Problem&, const CommandOptions&, std::ostream&);
  const std::pair<const char*, Command> single[] = {
      {"gb", cmd_gb},           {"decompose", cmd_decompose}, {"macaulay", cmd_macaulay},
      {"hilbert", cmd_hilbert}, {"fitting", cmd_fitting},     {"bounds", cmd_bounds},
  };
  const char* descriptions[] = {
      "reduced Groebner basis",
      "normal-form cone decomposition and its exact form",
      "Macaulay constants by the exact and pure-power routes",
      "Hilbert series, polynomial and regularity",
      "generators of the 0th Fitting ideal",
      "all degree bounds next to the actual degree",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(single); ++i) {
    CLI::App* sub = app.add_subcommand(single[i].first, descriptions[i]);
    sub->add_option("file", file, "problem file")->required();
    add_common(sub);
    subs.push_back(sub);
  }

  CLI::App* verify = app.add_subcommand("verify", "check every bound and identity end to end");
  verify->add_option("files", files, "problem files; without files a random corpus is used");
  verify->add_option("--seed", options.seed, "corpus seed");
  verify->add_option("--count", count, "corpus size");
  verify->add_option("--nmax", corpus.nmax, "maximum number of variables");
  verify->add_option("--mmax", corpus.mmax, "maximum rank");
  verify->add_option("--dmax", corpus.dmax, "maximum generator degree");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<Field> field;
    if (!field_text.empty()) field = parse_field(field_text);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      Json j = single[i].second(read_problem_file(file, field), options, std::cout);
      if (std::string(single[i].first) == "bounds" && !j["report"]["violations"].empty()) {
        return kViolation;
      }
      return kPass;
    }
    std::vector<Problem> problems;
    for (const auto& f : files) problems.push_back(read_problem_file(f, field));
    if (files.empty() || count > 0) {
      corpus.seed = options.seed;
      corpus.count = count > 0 ? count : corpus.count;
      if (field) corpus.field = *field;
      for (auto& p : generate_corpus(corpus)) problems.push_back(std::move(p));
    }
    return cmd_verify(problems, options, std::cout);
  } catch (const ImproperSubmodule& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
