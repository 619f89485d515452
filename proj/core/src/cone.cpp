#include "modgb/cone.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace modgb {

Cone Cone::make(ModuleMonomial pivot, VarSet vars, std::span<const Degree> basis_degrees) {
  Degree d = pivot.mono.degree() + basis_degrees[pivot.position];
  return Cone{std::move(pivot), vars, d};
}

std::size_t Cone::dimension() const { return static_cast<std::size_t>(std::popcount(vars)); }

bool Cone::contains(const ModuleMonomial& m) const {
  if (m.position != pivot.position || !pivot.mono.divides(m.mono)) return false;
  for (std::size_t i = 0; i < m.mono.num_vars(); ++i) {
    if (m.mono[i] != pivot.mono[i] && !(vars & (VarSet{1} << i))) return false;
  }
  return true;
}

std::string Cone::to_string(const FreeModuleSpec& spec) const {
  std::string s;
  for (std::size_t i = 0; i < pivot.mono.num_vars(); ++i) {
    const Exponent e = pivot.mono[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += spec.variables[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  const std::string& basis = spec.basis_names[pivot.position];
  if (!basis.empty()) s += (s.empty() ? "" : "*") + basis;
  if (s.empty()) s = "1";
  s += " K[";
  bool first = true;
  for (std::size_t i = 0; i < spec.num_vars(); ++i) {
    if (!(vars & (VarSet{1} << i))) continue;
    s += (first ? "" : ", ") + spec.variables[i];
    first = false;
  }
  return s + "]";
}

bool cone_less(const Cone& a, const Cone& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  if (auto c = a.pivot <=> b.pivot; c != 0) return c < 0;
  return a.vars < b.vars;
}

void sort_cones(std::vector<Cone>& cones) { std::sort(cones.begin(), cones.end(), cone_less); }

bool ConeDecomposition::has_positive_part() const {
  return std::any_of(cones.begin(), cones.end(), [](const Cone& c) { return c.vars != 0; });
}

std::optional<Degree> ConeDecomposition::degree() const {
  std::optional<Degree> d;
  for (const auto& c : cones) {
    if (!d || c.degree > *d) d = c.degree;
  }
  return d;
}

std::optional<Degree> ConeDecomposition::positive_degree() const {
  std::optional<Degree> d;
  for (const auto& c : cones) {
    if (c.vars != 0 && (!d || c.degree > *d)) d = c.degree;
  }
  return d;
}

std::vector<Cone> ConeDecomposition::positive_part() const {
  std::vector<Cone> out;
  std::copy_if(cones.begin(), cones.end(), std::back_inserter(out),
               [](const Cone& c) { return c.vars != 0; });
  return out;
}

std::vector<Cone> fan(const Cone& C) {
  std::vector<Cone> out;
  out.push_back(Cone{C.pivot, 0, C.degree});
  VarSet prefix = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const VarSet bit = VarSet{1} << i;
    if (!(C.vars & bit)) continue;
    prefix |= bit;
    out.push_back(Cone{{C.pivot.mono.times_variable(i), C.pivot.position}, prefix, C.degree + 1});
  }
  return out;
}

bool is_q_standard(std::span<const Cone> cones, Degree q) {
  // Largest dimension seen at each degree.
  std::map<Degree, std::size_t> best;
  for (const auto& c : cones) {
    if (c.vars == 0) continue;
    if (c.degree < q) return false;
    auto& b = best[c.degree];
    b = std::max(b, c.dimension());
  }
  for (const auto& c : cones) {
    if (c.vars == 0) continue;
    for (Degree d = q; d <= c.degree; ++d) {
      auto it = best.find(d);
      if (it == best.end() || it->second < c.dimension()) return false;
    }
  }
  return true;
}

bool is_q_exact(std::span<const Cone> cones, Degree q) {
  std::set<Degree> seen;
  for (const auto& c : cones) {
    if (c.vars != 0 && !seen.insert(c.degree).second) return false;
  }
  return is_q_standard(cones, q);
}

}  // namespace modgb
