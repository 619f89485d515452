#include "modgb/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "modgb/errors.hpp"

namespace modgb {

namespace {

bool has_one(std::span<const Monomial> B) {
  return std::any_of(B.begin(), B.end(), [](const Monomial& b) { return b.is_one(); });
}

/// Is some element of B supported inside s?
bool meets(std::span<const Monomial> B, VarSet s) {
  return std::any_of(B.begin(), B.end(), [&](const Monomial& b) { return (b.support() & ~s) == 0; });
}

/// Smallest H within u meeting the support of every element of B supported in u.
/// u minus H is then a largest subset of u carrying no element of B. Branches follow
/// `vars`, so the first optimum found is deterministic.
VarSet min_hitting_set(std::span<const Monomial> B, VarSet u, const std::vector<std::size_t>& vars) {
  std::vector<VarSet> supports;
  for (const auto& b : B) {
    const VarSet sb = b.support();
    if ((sb & ~u) == 0) supports.push_back(sb);
  }
  VarSet best = u;
  int best_size = std::popcount(u);
  auto search = [&](auto&& self, VarSet chosen, int size) -> void {
    if (size >= best_size) return;
    const VarSet* unhit = nullptr;
    for (const auto& sb : supports) {
      if ((sb & chosen) == 0 && (!unhit || std::popcount(sb) < std::popcount(*unhit))) unhit = &sb;
    }
    if (!unhit) {
      best = chosen;
      best_size = size;
      return;
    }
    const VarSet target = *unhit;
    for (std::size_t v : vars) {
      if (target & (VarSet{1} << v)) self(self, chosen | (VarSet{1} << v), size + 1);
    }
  };
  search(search, 0, 0);
  return best;
}

struct Splitter {
  std::span<const Degree> basis_degrees;
  SplitPolicy policy;
  std::size_t num_vars;
  SplitResult out;

  std::vector<std::size_t> order_of(VarSet u) const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (u & (VarSet{1} << i)) v.push_back(i);
    }
    if (policy == SplitPolicy::descending) std::reverse(v.begin(), v.end());
    return v;
  }

  void run(const ModuleMonomial& h, VarSet u, std::vector<Monomial> B) {
    if (has_one(B)) {
      out.P.push_back(Cone::make(h, u, basis_degrees));
      return;
    }
    if (!meets(B, u)) {
      out.Q.push_back(Cone::make(h, u, basis_degrees));
      return;
    }
    const auto vars = order_of(u);
    const VarSet s = u & ~min_hitting_set(B, u, vars);
    std::size_t xi = 0;
    for (std::size_t v : vars) {
      if (!(s & (VarSet{1} << v))) {
        xi = v;
        break;
      }
    }
    run(h, u & ~(VarSet{1} << xi), B);
    Monomial x(num_vars);
    x = x.times_variable(xi);
    std::vector<Monomial> colon = monomial_colon(B, x);
    run({h.mono.times_variable(xi), h.position}, u, std::move(colon));
  }
};

}  // namespace

SplitResult split(const ModuleMonomial& h, VarSet u, std::span<const Monomial> B,
                  std::span<const Degree> basis_degrees, SplitPolicy policy) {
  if (h.position >= basis_degrees.size()) throw StructuralError("pivot position out of range");
  const std::size_t n = h.mono.num_vars();
  if ((u & ~all_variables(n)) != 0) throw InvalidInput("cone variables out of range");
  for (const auto& b : B) {
    if (b.num_vars() != n) throw StructuralError("monomial has wrong arity");
  }
  Splitter s{basis_degrees, policy, n, {}};
  s.run(h, u, std::vector<Monomial>(B.begin(), B.end()));
  sort_cones(s.out.P);
  sort_cones(s.out.Q);
  return std::move(s.out);
}

ConeDecomposition lift_to_d_standard(const ConeDecomposition& P, Degree d) {
  if (!P.has_positive_part()) return P;
  if (d < P.q) throw InvalidInput("cannot lift to a degree below q");
  std::vector<Cone> cones = P.cones;
  for (Degree q = P.q; q < d; ++q) {
    std::vector<Cone> next;
    for (const auto& c : cones) {
      if (c.degree == q) {
        auto f = fan(c);
        next.insert(next.end(), f.begin(), f.end());
      } else {
        next.push_back(c);
      }
    }
    cones = std::move(next);
  }
  sort_cones(cones);
  return ConeDecomposition{std::move(cones), d};
}

std::vector<std::vector<Cone>> split_positions(const MonomialSubmodule& M,
                                               std::span<const Degree> basis_degrees,
                                               SplitPolicy policy) {
  if (basis_degrees.size() != M.rank()) throw StructuralError("rank mismatch");
  std::vector<std::vector<Cone>> out(M.rank());
  for (std::uint32_t j = 0; j < M.rank(); ++j) {
    if (M.is_full_at(j)) continue;
    out[j] = split({Monomial(M.num_vars), j}, all_variables(M.num_vars), M.gens[j],
                   basis_degrees, policy)
                 .Q;
  }
  return out;
}

ConeDecomposition decompose_normal_forms(const MonomialSubmodule& M,
                                         std::span<const Degree> basis_degrees,
                                         SplitPolicy policy) {
  if (M.is_full()) throw ImproperSubmodule();
  Degree l = 0;
  for (Degree e : basis_degrees) l = std::max(l, e);
  auto parts = split_positions(M, basis_degrees, policy);
  ConeDecomposition out;
  for (std::uint32_t j = 0; j < parts.size(); ++j) {
    ConeDecomposition Qj{std::move(parts[j]), basis_degrees[j]};
    if (!Qj.has_positive_part()) Qj.q = 0;
    ConeDecomposition lifted = lift_to_d_standard(Qj, l);
    out.cones.insert(out.cones.end(), lifted.cones.begin(), lifted.cones.end());
  }
  sort_cones(out.cones);
  out.q = out.has_positive_part() ? l : 0;
  return out;
}

ConeDecomposition exact(const ConeDecomposition& Q) {
  if (!Q.has_positive_part()) return Q;
  if (!is_q_standard(Q.cones, Q.q)) throw InvalidInput("decomposition is not q-standard");
  std::vector<Cone> points;
  std::map<Degree, std::vector<Cone>> positive;
  for (const auto& c : Q.cones) {
    if (c.vars == 0) points.push_back(c);
    else positive[c.degree].push_back(c);
  }
  for (Degree d = Q.q; !positive.empty() && d <= positive.rbegin()->first; ++d) {
    auto it = positive.find(d);
    if (it == positive.end()) continue;
    // fanning only adds cones of degree d + 1, so the picks at d follow one sort
    auto& S = it->second;
    if (S.size() < 2) continue;
    std::sort(S.begin(), S.end(), [](const Cone& a, const Cone& b) {
      if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
      return a.pivot < b.pivot;
    });
    std::vector<Cone> up;
    for (std::size_t i = 0; i + 1 < S.size(); ++i) {
      for (auto& f : fan(S[i])) {
        if (f.vars == 0) points.push_back(std::move(f));
        else up.push_back(std::move(f));
      }
    }
    S.erase(S.begin(), S.end() - 1);
    auto& next = positive[d + 1];
    next.insert(next.end(), std::make_move_iterator(up.begin()), std::make_move_iterator(up.end()));
  }
  ConeDecomposition out{std::move(points), Q.q};
  for (auto& [d, cs] : positive) out.cones.insert(out.cones.end(), cs.begin(), cs.end());
  sort_cones(out.cones);
  return out;
}

MacaulayConstants macaulay_constants(const ConeDecomposition& P, std::size_t num_vars) {
  if (P.has_positive_part() && !is_q_exact(P.cones, P.q)) {
    throw InvalidInput("decomposition is not q-exact");
  }
  MacaulayConstants c;
  c.q = P.q;
  c.b.assign(num_vars + 2, P.q);
  for (const auto& cone : P.cones) {
    for (std::size_t k = 0; k <= cone.dimension() && k <= num_vars + 1; ++k) {
      c.b[k] = std::max(c.b[k], cone.degree + 1);
    }
  }
  return c;
}

namespace {

mpz_class constants_formula(const MacaulayConstants& c, std::size_t n, const mpz_class& z,
                            mpz_class (*binom)(const mpz_class&, std::size_t)) {
  mpz_class v = binom(z - c.b[n + 1] + static_cast<unsigned long>(n), n) - 1;
  for (std::size_t i = 1; i <= n; ++i) {
    v -= binom(z - c.b[i] + static_cast<unsigned long>(i) - 1, i);
  }
  return v;
}

void check_constants(const MacaulayConstants& c, std::size_t n) {
  if (c.b.size() != n + 2) throw InvalidInput("Macaulay constants must have n + 2 entries");
}

}  // namespace

HilbertPolynomial hp_from_constants(const MacaulayConstants& c, std::size_t num_vars) {
  check_constants(c, num_vars);
  return HilbertPolynomial::interpolate(num_vars, [&](const mpz_class& z) {
    return constants_formula(c, num_vars, z, &binomial);
  });
}

mpz_class constants_formula_clamped(const MacaulayConstants& c, std::size_t num_vars, Degree z) {
  check_constants(c, num_vars);
  return constants_formula(c, num_vars, mpz_class(z), &binomial_clamped);
}

}  // namespace modgb
