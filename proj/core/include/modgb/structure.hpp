#ifndef MODGB_STRUCTURE_HPP
#define MODGB_STRUCTURE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "modgb/groebner.hpp"
#include "modgb/module_element.hpp"
#include "modgb/random.hpp"

namespace modgb {

/// m x s matrix with f_i = sum_j a_{ji} e_j; entries live in `ring`.
struct PresentationMatrix {
  FreeModule::Ptr ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Row-major.
  std::vector<ModuleElement> entries;

  const ModuleElement& at(std::size_t j, std::size_t i) const { return entries[j * cols + i]; }
  /// Rebuilds generator i inside `ambient`.
  ModuleElement column(std::size_t i, const FreeModule::Ptr& ambient) const;
};

PresentationMatrix presentation(const FreeModule::Ptr& ambient,
                                std::span<const ModuleElement> gens);

/// Determinant of a square matrix of polynomials (fraction-free elimination).
ModuleElement determinant(const FreeModule::Ptr& ring,
                          std::vector<std::vector<ModuleElement>> matrix);

/// Generators of Fitt_0: the nonzero maximal minors, made monic and deduplicated.
/// With `minimalize`, generators lying in the ideal of the others are dropped.
std::vector<ModuleElement> fitting0(const PresentationMatrix& P, bool minimalize = false);

struct RegularSequenceCertificate {
  std::vector<ModuleElement> elements;
  /// dim S/(g_1, ..., g_i) for i = 0 .. k.
  std::vector<std::size_t> prefix_dimensions;
};

struct RegularSequenceOptions {
  std::int64_t coefficient_bound = 100;
  int attempts = 20;
};

/// Krull dimension of S/(gens); the ring is the ambient of the generators.
std::size_t quotient_dimension(const FreeModule::Ptr& ring, std::span<const ModuleElement> gens);

/// Finds homogeneous g_1, ..., g_k in the ideal with dim S/(g_1..g_i) = n - i,
/// where deg g_i is the (k - i + 1)-th largest generator degree.
/// Throws SearchExhausted when the retry budget runs out.
RegularSequenceCertificate find_regular_sequence(std::span<const ModuleElement> ideal_gens,
                                                 std::size_t target_len, Rng& rng,
                                                 const RegularSequenceOptions& options = {});

/// f^h in ambient->homogenized(). Throws InvalidInput for f = 0.
ModuleElement homogenize(const ModuleElement& f, const FreeModule::Ptr& homogenized);

/// Substitutes t = 1, landing in the base ambient.
ModuleElement dehomogenize(const ModuleElement& f);

/// Element-wise dehomogenization; zeros dropped, results made monic.
std::vector<ModuleElement> dehomogenize(std::span<const ModuleElement> G);

}  // namespace modgb

#endif  // MODGB_STRUCTURE_HPP
