#ifndef MODGB_MODULE_ELEMENT_HPP
#define MODGB_MODULE_ELEMENT_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modgb/free_module.hpp"
#include "modgb/monomial.hpp"
#include "modgb/scalar.hpp"

namespace modgb {

struct Term {
  Scalar coeff;
  ModuleMonomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A finite sum of terms, kept sorted strictly descending under the ambient
/// order with no zero coefficients. The zero element has no terms.
class ModuleElement {
 public:
  explicit ModuleElement(FreeModule::Ptr ambient);

  /// Sorts, merges equal monomials and drops zeros.
  static ModuleElement from_terms(FreeModule::Ptr ambient, std::vector<Term> terms);
  static ModuleElement monomial(FreeModule::Ptr ambient, Scalar coeff, ModuleMonomial m);
  /// The basis vector e_j (zero-based position).
  static ModuleElement basis(FreeModule::Ptr ambient, std::uint32_t position);

  const FreeModule::Ptr& ambient() const { return ambient_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Requires a nonzero element.
  const Term& leading_term() const { return terms_.front(); }
  const ModuleMonomial& leading_monomial() const { return terms_.front().monomial; }
  const Scalar& leading_coefficient() const { return terms_.front().coeff; }
  /// Everything but the leading term.
  ModuleElement tail() const;

  /// Maximum term degree; nullopt for zero.
  std::optional<Degree> degree() const;
  bool is_homogeneous() const;

  ModuleElement operator-() const;
  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement operator*(const Scalar& c, const ModuleElement& f);
  /// Multiplies every term by x^a.
  ModuleElement mono_mul(const Monomial& a) const;
  /// c x^a * this.
  ModuleElement term_mul(const Scalar& c, const Monomial& a) const;

  /// Leading coefficient scaled to one.
  ModuleElement monic() const;
  /// Over the rationals: integer coefficients with unit content and positive
  /// leading coefficient. Over GF(p): same as monic().
  ModuleElement primitive() const;

  /// The same element re-expressed in another ambient with identical
  /// variables, basis and field (e.g. under a different order).
  ModuleElement in_ambient(FreeModule::Ptr other) const;

  std::string to_string() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b);

 private:
  ModuleElement(FreeModule::Ptr ambient, std::vector<Term> sorted_terms);

  FreeModule::Ptr ambient_;
  std::vector<Term> terms_;
};

/// Homogeneous components of f, sorted by degree ascending.
std::vector<std::pair<Degree, ModuleElement>> homogeneous_components(const ModuleElement& f);

/// Product of a polynomial (an element of a rank-one ambient over the same
/// variables and field) with a module element.
ModuleElement multiply(const ModuleElement& poly, const ModuleElement& f);

/// poly * e_j inside `target`.
ModuleElement embed(const ModuleElement& poly, const FreeModule::Ptr& target,
                    std::uint32_t position);

/// The coordinate of f at basis position j as a polynomial in `ring`.
ModuleElement component(const ModuleElement& f, const FreeModule::Ptr& ring,
                        std::uint32_t position);

/// Exact polynomial division; throws InvalidInput when `divisor` does not divide `dividend`.
ModuleElement divide_exact(const ModuleElement& dividend, const ModuleElement& divisor);

}  // namespace modgb

#endif  // MODGB_MODULE_ELEMENT_HPP
