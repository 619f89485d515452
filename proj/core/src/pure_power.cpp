#include "modgb/pure_power.hpp"

#include <algorithm>

#include "modgb/errors.hpp"

namespace modgb {

namespace {

std::vector<ModuleMonomial> base_layer(std::span<const Degree> d, std::size_t n, std::size_t m) {
  std::vector<ModuleMonomial> out;
  std::vector<Exponent> alpha(n, 0);
  for (std::uint32_t j = 0; j < m; ++j) {
    std::fill(alpha.begin(), alpha.end(), 0);
    while (true) {
      out.push_back({Monomial(alpha), j});
      std::size_t i = 0;
      for (; i < d.size(); ++i) {
        if (static_cast<Degree>(++alpha[i]) < d[i]) break;
        alpha[i] = 0;
      }
      if (i == d.size()) break;
    }
  }
  return out;
}

}  // namespace

PurePowerResult pure_power_decomposition(std::span<const Degree> d, const FreeModuleSpec& spec,
                                         Degree D, std::uint64_t point_limit,
                                         std::uint64_t layer_limit) {
  const std::size_t n = spec.num_vars();
  const std::size_t m = spec.rank();
  const Degree l = spec.max_basis_degree();
  if (d.size() > n) throw InvalidInput("more pure powers than variables");
  for (Degree di : d) {
    if (di < 1) throw InvalidInput("pure power exponents must be positive");
  }
  if (D < std::max<Degree>(2, l)) throw InvalidInput("D must be at least max(2, l)");
  const std::size_t r = n - d.size();
  const auto& bdeg = spec.basis_degrees;

  auto by_degree = [&](std::vector<ModuleMonomial>& T) {
    std::sort(T.begin(), T.end(), [&](const ModuleMonomial& a, const ModuleMonomial& b) {
      Degree da = a.mono.degree() + bdeg[a.position];
      Degree db = b.mono.degree() + bdeg[b.position];
      if (da != db) return da < db;
      return a < b;
    });
  };

  PurePowerResult res;
  res.constants.q = D;
  res.constants.b.assign(n + 2, D);
  res.decomposition.q = D;
  auto& b = res.constants.b;

  std::uint64_t base_size = m;
  for (Degree di : d) {
    if (base_size > layer_limit / static_cast<std::uint64_t>(di)) {
      throw LimitExceeded("pure-power base layer exceeds " + std::to_string(layer_limit) +
                          " monomials");
    }
    base_size *= static_cast<std::uint64_t>(di);
  }
  std::vector<ModuleMonomial> T = base_layer(d, n, m);
  res.layer_sizes.push_back(T.size());
  // b_{k+1} for the current k; starts at b_{r+1} = D.
  for (std::size_t k = r; k >= 1; --k) {
    by_degree(T);
    const std::size_t var = n - k;
    const VarSet u = all_variables(n) & ~all_variables(var);
    const Degree next_b = b[k + 1];
    std::uint64_t next_size = 0;
    for (std::size_t i = 1; i <= T.size(); ++i) {
      const Degree deg_h = T[i - 1].mono.degree() + bdeg[T[i - 1].position];
      const Degree e = next_b + static_cast<Degree>(i) - deg_h - 1;
      if (e < 0) throw StructuralError("negative exponent in layer construction");
      next_size += static_cast<std::uint64_t>(e);
    }
    const bool last = k == 1;
    if (!last && next_size > layer_limit) {
      throw LimitExceeded("pure-power layer exceeds " + std::to_string(layer_limit) +
                          " monomials");
    }
    const bool keep = !last || next_size <= point_limit;
    std::vector<ModuleMonomial> next;
    if (keep) next.reserve(next_size);
    Degree max_point = -1;
    for (std::size_t i = 1; i <= T.size(); ++i) {
      const ModuleMonomial& h = T[i - 1];
      const Degree deg_h = h.mono.degree() + bdeg[h.position];
      const Degree e = next_b + static_cast<Degree>(i) - deg_h - 1;
      ModuleMonomial pivot{h.mono.times_variable(var, static_cast<Exponent>(e)), h.position};
      res.decomposition.cones.push_back(Cone{std::move(pivot), u, deg_h + e});
      if (e > 0) max_point = std::max(max_point, deg_h + e - 1);
      if (keep) {
        for (Degree c = 0; c < e; ++c) {
          next.push_back({h.mono.times_variable(var, static_cast<Exponent>(c)), h.position});
        }
      }
    }
    b[k] = next_b + static_cast<Degree>(T.size());
    res.layer_sizes.push_back(next_size);
    if (last) {
      b[0] = std::max(b[1], max_point + 1);
      res.points_materialized = keep;
    }
    T = std::move(next);
  }
  if (r == 0) {
    // N_{JF} is finite dimensional: T_0 itself.
    Degree max_point = -1;
    for (const auto& h : T) max_point = std::max(max_point, h.mono.degree() + bdeg[h.position]);
    b[0] = std::max(D, max_point + 1);
    res.points_materialized = T.size() <= point_limit;
    if (!res.points_materialized) T.clear();
  }
  for (auto& h : T) {
    Cone c = Cone::make(std::move(h), 0, bdeg);
    res.decomposition.cones.push_back(std::move(c));
  }
  sort_cones(res.decomposition.cones);
  return res;
}

}  // namespace modgb
