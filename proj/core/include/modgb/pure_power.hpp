#ifndef MODGB_PURE_POWER_HPP
#define MODGB_PURE_POWER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "modgb/decomposition.hpp"

namespace modgb {

struct PurePowerResult {
  /// All positive-dimensional cones, plus the point cones when materialized.
  ConeDecomposition decomposition;
  MacaulayConstants constants;
  /// dim T_k for k = r, r - 1, ..., 0.
  std::vector<std::uint64_t> layer_sizes;
  bool points_materialized = false;
};

/// Layer-by-layer D-exact decomposition of N_{JF} for
/// J = (x_1^{d_1}, ..., x_{n-r}^{d_{n-r}}) with r = n - |d|.
///
/// The final point cones are only stored when there are at most
/// `point_limit` of them. Intermediate layers above `layer_limit` raise LimitExceeded.
/// Throws InvalidInput when D < max(2, l) or some d_i < 1.
PurePowerResult pure_power_decomposition(std::span<const Degree> d, const FreeModuleSpec& spec,
                                         Degree D, std::uint64_t point_limit = 1u << 21,
                                         std::uint64_t layer_limit = 1u << 22);

}  // namespace modgb

#endif  // MODGB_PURE_POWER_HPP
