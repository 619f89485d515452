#ifndef MODGB_TESTS_FIXTURES_HPP
#define MODGB_TESTS_FIXTURES_HPP

#include <compare>
#include <string>
#include <vector>

#include "modgb/modgb.hpp"
#include "modgb_cli/problem.hpp"

namespace fx {

using namespace modgb;

/// Builds a problem from header fields, e.g.
/// problem("x, y", "e1=0", "grevlex, pot", {"x^2*e1"}).
inline cli::Problem problem(const std::string& ring, const std::string& basis,
                            const std::string& order, const std::vector<std::string>& gens,
                            const std::string& field = "QQ") {
  std::string text = "ring: " + ring + "\nfield: " + field + "\nbasis: " + basis +
                     "\norder: " + order + "\n";
  for (const auto& g : gens) text += "gen: " + g + "\n";
  return cli::parse_problem(text);
}

/// Parses one element in the given (non-homogenized) ambient.
/// Polynomial-ring ambients (one unnamed basis element) take plain polynomials.
inline ModuleElement el(const FreeModule::Ptr& F, const std::string& text) {
  const auto& spec = F->spec();
  if (spec.rank() == 1 && spec.basis_names[0].empty()) {
    std::string tagged;
    for (char c : text) {
      if ((c == '+' || c == '-') && !tagged.empty() && tagged.find_last_not_of(' ') != std::string::npos) {
        tagged.insert(tagged.find_last_not_of(' ') + 1, "*r_");
      }
      tagged += c;
    }
    tagged += "*r_";
    std::string ring;
    for (std::size_t i = 0; i < spec.num_vars(); ++i) ring += (i ? ", " : "") + spec.variables[i];
    auto p = problem(ring, "r_=0", "grevlex, pot", {tagged}, spec.field.to_string());
    std::vector<Term> terms(p.gens.at(0).terms().begin(), p.gens.at(0).terms().end());
    return ModuleElement::from_terms(F, std::move(terms));
  }
  std::string ring;
  for (std::size_t i = 0; i < spec.num_vars(); ++i) ring += (i ? ", " : "") + spec.variables[i];
  std::string basis;
  for (std::size_t j = 0; j < spec.rank(); ++j) {
    basis += (j ? ", " : "") + spec.basis_names[j] + "=" + std::to_string(spec.basis_degrees[j]);
  }
  const auto& o = F->order();
  auto p = problem(ring, basis, to_string(o.ring) + ", " + to_string(o.position), {text},
                   spec.field.to_string());
  return p.gens.at(0).in_ambient(F);
}

inline FreeModule::Ptr module(std::size_t n, std::vector<Degree> degs,
                              RingOrder ring = RingOrder::grevlex,
                              PositionStrategy pos = PositionStrategy::position_over_term,
                              Field field = Field::rationals()) {
  MonomialOrder o;
  o.ring = ring;
  o.position = pos;
  return FreeModule::make(make_spec(n, std::move(degs), field), o);
}

inline int cmp(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

inline ModuleMonomial mm(std::initializer_list<Exponent> e, std::uint32_t pos = 0) {
  return ModuleMonomial{Monomial(e), pos};
}

}  // namespace fx

#endif  // MODGB_TESTS_FIXTURES_HPP
