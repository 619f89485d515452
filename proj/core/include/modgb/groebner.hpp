#ifndef MODGB_GROEBNER_HPP
#define MODGB_GROEBNER_HPP

#include <optional>
#include <span>
#include <vector>

#include "modgb/module_element.hpp"

namespace modgb {

struct GroebnerBasis {
  FreeModule::Ptr ambient;
  std::vector<ModuleElement> elements;
  bool reduced = false;

  /// Max element degree; nullopt for the basis of the zero module.
  std::optional<Degree> degree() const;
};

/// A monomial submodule given by per-position minimal generators:
/// the module is the direct sum of <gens[j]> e_j.
struct MonomialSubmodule {
  std::size_t num_vars = 0;
  std::vector<std::vector<Monomial>> gens;

  static MonomialSubmodule zero(std::size_t num_vars, std::size_t rank);
  /// Minimalizes the given per-position generator lists.
  static MonomialSubmodule from_generators(std::size_t num_vars,
                                           std::vector<std::vector<Monomial>> gens);

  std::size_t rank() const { return gens.size(); }
  bool contains(const ModuleMonomial& m) const;
  /// Does position j contain 1, i.e. the whole of S e_j?
  bool is_full_at(std::uint32_t position) const;
  /// Is this the whole free module?
  bool is_full() const;
  /// Largest module degree of a minimal generator; nullopt when there are none.
  std::optional<Degree> max_generator_degree(std::span<const Degree> basis_degrees) const;

  friend bool operator==(const MonomialSubmodule&, const MonomialSubmodule&) = default;
};

/// Full reduction of f by G. The result has no term divisible by a leading
/// monomial of G, and f - result lies in the span of G.
ModuleElement normal_form(const ModuleElement& f, std::span<const ModuleElement> G);

/// S-polynomial of f and g. Zero when their leading positions differ.
ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g);

/// Buchberger's algorithm. Zero generators are ignored; an empty or all-zero
/// input yields the empty basis of the zero module.
GroebnerBasis buchberger(const FreeModule::Ptr& ambient, std::span<const ModuleElement> gens);

/// The reduced Groebner basis of the module generated by G.
GroebnerBasis reduce(const GroebnerBasis& G);

/// buchberger followed by reduce.
GroebnerBasis reduced_groebner_basis(const FreeModule::Ptr& ambient,
                                     std::span<const ModuleElement> gens);

/// Checks that every S-polynomial of G reduces to zero.
bool is_groebner_basis(std::span<const ModuleElement> G);

MonomialSubmodule initial_module(const GroebnerBasis& G);

/// Minimal generators of <B> : x^a.
std::vector<Monomial> monomial_colon(std::span<const Monomial> B, const Monomial& a);

}  // namespace modgb

#endif  // MODGB_GROEBNER_HPP
