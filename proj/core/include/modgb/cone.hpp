#ifndef MODGB_CONE_HPP
#define MODGB_CONE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modgb/free_module.hpp"
#include "modgb/monomial.hpp"

namespace modgb {

/// C(h, u) = h K[u] for a module monomial pivot h.
struct Cone {
  ModuleMonomial pivot;
  VarSet vars = 0;
  /// Degree of the pivot, basis shift included.
  Degree degree = 0;

  static Cone make(ModuleMonomial pivot, VarSet vars, std::span<const Degree> basis_degrees);

  std::size_t dimension() const;
  bool contains(const ModuleMonomial& m) const;
  std::string to_string(const FreeModuleSpec& spec) const;

  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Canonical order: degree, dimension, pivot position, pivot exponents, variables.
bool cone_less(const Cone& a, const Cone& b);
void sort_cones(std::vector<Cone>& cones);

/// A finite set of cones with its standardness parameter q
/// (stored as 0 when there are no positive-dimensional cones).
struct ConeDecomposition {
  std::vector<Cone> cones;
  Degree q = 0;

  bool has_positive_part() const;
  /// Max cone degree; nullopt when empty.
  std::optional<Degree> degree() const;
  /// Max degree over positive-dimensional cones; nullopt when there are none.
  std::optional<Degree> positive_degree() const;
  std::vector<Cone> positive_part() const;

  friend bool operator==(const ConeDecomposition&, const ConeDecomposition&) = default;
};

/// {C(h, {})} together with C(x_{j_i} h, {x_{j_1}, ..., x_{j_i}}) for the
/// variables of C in ascending index order.
std::vector<Cone> fan(const Cone& C);

bool is_q_standard(std::span<const Cone> cones, Degree q);
/// q-standard with pairwise distinct degrees among positive-dimensional cones.
bool is_q_exact(std::span<const Cone> cones, Degree q);

}  // namespace modgb

#endif  // MODGB_CONE_HPP
