#ifndef MODGB_DECOMPOSITION_HPP
#define MODGB_DECOMPOSITION_HPP

#include <span>
#include <vector>

#include "modgb/cone.hpp"
#include "modgb/groebner.hpp"
#include "modgb/hilbert.hpp"

namespace modgb {

/// How SPLIT builds its maximal variable set s and picks the branching variable.
enum class SplitPolicy {
  /// s grows by ascending index; branch on the least index outside s.
  ascending,
  /// s grows by descending index; branch on the greatest index outside s.
  descending,
};

struct SplitResult {
  /// Cones inside M.
  std::vector<Cone> P;
  /// Cones meeting M only in 0.
  std::vector<Cone> Q;
};

/// Splits h K[u] relative to the monomial module M, where B generates M : h.
SplitResult split(const ModuleMonomial& h, VarSet u, std::span<const Monomial> B,
                  std::span<const Degree> basis_degrees,
                  SplitPolicy policy = SplitPolicy::ascending);

/// Refines a q-standard decomposition to a d-standard one by fanning the
/// lowest degree slice d - q times. Throws InvalidInput when d < q.
ConeDecomposition lift_to_d_standard(const ConeDecomposition& P, Degree d);

/// The complements Q_j from splitting S e_j against I_j e_j, one per position
/// (empty where I_j = S). Q_j is deg(e_j)-standard.
std::vector<std::vector<Cone>> split_positions(const MonomialSubmodule& M,
                                               std::span<const Degree> basis_degrees,
                                               SplitPolicy policy = SplitPolicy::ascending);

/// An l-standard decomposition of N_M, l the largest basis degree.
/// Throws ImproperSubmodule when M is the whole free module.
ConeDecomposition decompose_normal_forms(const MonomialSubmodule& M,
                                         std::span<const Degree> basis_degrees,
                                         SplitPolicy policy = SplitPolicy::ascending);

/// Refines a q-standard decomposition (q = Q.q) into a q-exact one.
ConeDecomposition exact(const ConeDecomposition& Q);

struct MacaulayConstants {
  /// b[0] .. b[n + 1].
  std::vector<Degree> b;
  Degree q = 0;

  friend bool operator==(const MacaulayConstants&, const MacaulayConstants&) = default;
};

/// b_k = max({q} and 1 + deg(C) for cones of dimension >= k). Throws
/// InvalidInput unless P is P.q-exact.
MacaulayConstants macaulay_constants(const ConeDecomposition& P, std::size_t num_vars);

/// C(z - b_{n+1} + n, n) - 1 - sum_{i=1..n} C(z - b_i + i - 1, i) as a polynomial.
HilbertPolynomial hp_from_constants(const MacaulayConstants& c, std::size_t num_vars);

/// The same expression evaluated at z with C(a, i) = 0 for a < 0.
mpz_class constants_formula_clamped(const MacaulayConstants& c, std::size_t num_vars,
                                    Degree z);

}  // namespace modgb

#endif  // MODGB_DECOMPOSITION_HPP
