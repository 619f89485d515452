#ifndef MODGB_CLI_CORPUS_HPP
#define MODGB_CLI_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "modgb/random.hpp"
#include "modgb_cli/problem.hpp"

namespace modgb::cli {

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t count = 25;
  std::size_t nmax = 3;
  std::size_t mmax = 2;
  Degree dmax = 3;
  Field field = Field::prime(32003);
  RingOrder ring_order = RingOrder::grevlex;
  PositionStrategy position = PositionStrategy::position_over_term;
};

/// One random module: 1..3 sparse generators with 2..4 terms, degrees <= dmax,
/// homogeneous when `graded`. Basis degrees start at 0 and D >= l holds.
Problem random_problem(Rng& rng, const CorpusOptions& options, bool graded);

/// `count` proper submodules, graded and non-graded drawn alternately at
/// random; instance i uses a seed derived from (seed, i).
std::vector<Problem> generate_corpus(const CorpusOptions& options);

}  // namespace modgb::cli

#endif  // MODGB_CLI_CORPUS_HPP
