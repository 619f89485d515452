#include "modgb/groebner.hpp"

#include <algorithm>
#include <set>

#include "modgb/errors.hpp"

namespace modgb {

std::optional<Degree> GroebnerBasis::degree() const {
  std::optional<Degree> d;
  for (const auto& g : elements) {
    auto dg = g.degree();
    if (dg && (!d || *dg > *d)) d = dg;
  }
  return d;
}

MonomialSubmodule MonomialSubmodule::zero(std::size_t num_vars, std::size_t rank) {
  MonomialSubmodule m;
  m.num_vars = num_vars;
  m.gens.resize(rank);
  return m;
}

MonomialSubmodule MonomialSubmodule::from_generators(std::size_t num_vars,
                                                     std::vector<std::vector<Monomial>> gens) {
  MonomialSubmodule m;
  m.num_vars = num_vars;
  for (auto& g : gens) {
    for (const auto& x : g) {
      if (x.num_vars() != num_vars) throw StructuralError("monomial has wrong arity");
    }
    m.gens.push_back(minimalize(std::move(g)));
  }
  return m;
}

bool MonomialSubmodule::contains(const ModuleMonomial& m) const {
  return m.position < gens.size() && any_divides(gens[m.position], m.mono);
}

bool MonomialSubmodule::is_full_at(std::uint32_t position) const {
  const auto& g = gens[position];
  return std::any_of(g.begin(), g.end(), [](const Monomial& x) { return x.is_one(); });
}

bool MonomialSubmodule::is_full() const {
  for (std::uint32_t j = 0; j < gens.size(); ++j) {
    if (!is_full_at(j)) return false;
  }
  return true;
}

std::optional<Degree> MonomialSubmodule::max_generator_degree(
    std::span<const Degree> basis_degrees) const {
  std::optional<Degree> d;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (const auto& x : gens[j]) {
      Degree v = x.degree() + basis_degrees[j];
      if (!d || v > *d) d = v;
    }
  }
  return d;
}

namespace {

const ModuleElement* find_reducer(const ModuleMonomial& m, std::span<const ModuleElement> G) {
  for (const auto& g : G) {
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

}  // namespace

ModuleElement normal_form(const ModuleElement& f, std::span<const ModuleElement> G) {
  for (const auto& g : G) require_same_ambient(*f.ambient(), *g.ambient());
  std::vector<Term> kept;
  ModuleElement rest = f;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (const ModuleElement* g = find_reducer(lt.monomial, G)) {
      Monomial q = g->leading_monomial().mono.quotient_of(lt.monomial.mono);
      Scalar c = lt.coeff / g->leading_coefficient();
      rest = rest - g->term_mul(c, q);
    } else {
      kept.push_back(lt);
      rest = rest.tail();
    }
  }
  return ModuleElement::from_terms(f.ambient(), std::move(kept));
}

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g) {
  require_same_ambient(*f.ambient(), *g.ambient());
  if (f.is_zero() || g.is_zero()) return ModuleElement(f.ambient());
  const auto& a = f.leading_monomial();
  const auto& b = g.leading_monomial();
  if (a.position != b.position) return ModuleElement(f.ambient());
  Monomial l = a.mono.lcm(b.mono);
  const Scalar one = Scalar::one(f.ambient()->field());
  return f.term_mul(one / f.leading_coefficient(), a.mono.quotient_of(l)) -
         g.term_mul(one / g.leading_coefficient(), b.mono.quotient_of(l));
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t position;
  Degree degree;
};

class PairQueue {
 public:
  explicit PairQueue(const FreeModule& F) : F_(F) {}

  bool empty() const { return pairs_.empty(); }
  bool pending(std::size_t i, std::size_t j) const {
    return keys_.count({std::min(i, j), std::max(i, j)}) > 0;
  }
  void push(Pair p) {
    keys_.insert({p.i, p.j});
    pairs_.push_back(std::move(p));
  }

  /// Normal strategy: smallest lcm degree, then smallest lcm in the order.
  Pair pop() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (before(pairs_[k], pairs_[best])) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    keys_.erase({p.i, p.j});
    return p;
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = F_.compare({a.lcm, a.position}, {b.lcm, b.position});
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  const FreeModule& F_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> keys_;
};

ModuleElement normalize(const ModuleElement& f) { return f.primitive(); }

}  // namespace

GroebnerBasis buchberger(const FreeModule::Ptr& ambient, std::span<const ModuleElement> gens) {
  const FreeModule& F = *ambient;
  std::vector<ModuleElement> G;
  for (const auto& g : gens) {
    require_same_ambient(F, *g.ambient());
    if (!g.is_zero()) G.push_back(normalize(g));
  }
  PairQueue queue(F);
  const bool product_criterion = F.rank() == 1;

  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = G[i].leading_monomial();
      const auto& b = G[j].leading_monomial();
      if (a.position != b.position) continue;
      Monomial l = a.mono.lcm(b.mono);
      Degree d = F.degree({l, a.position});
      queue.push(Pair{i, j, std::move(l), a.position, d});
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    Pair p = queue.pop();
    const auto& a = G[p.i].leading_monomial().mono;
    const auto& b = G[p.j].leading_monomial().mono;
    if (product_criterion && a.gcd(b).is_one()) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const auto& c = G[k].leading_monomial();
      if (c.position != p.position || !c.mono.divides(p.lcm)) continue;
      chain = !queue.pending(p.i, k) && !queue.pending(p.j, k);
    }
    if (chain) continue;
    ModuleElement r = normal_form(s_polynomial(G[p.i], G[p.j]), G);
    if (r.is_zero()) continue;
    G.push_back(normalize(r));
    add_pairs(G.size() - 1);
  }
  return GroebnerBasis{ambient, std::move(G), false};
}

GroebnerBasis reduce(const GroebnerBasis& G) {
  const FreeModule& F = *G.ambient;
  std::vector<ModuleElement> elems;
  for (const auto& g : G.elements) {
    if (!g.is_zero()) elems.push_back(g);
  }
  // Keep elements whose lead is not divisible by another lead; among equal
  // leads keep the first.
  std::vector<ModuleElement> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& li = elems[i].leading_monomial();
    bool redundant = false;
    for (std::size_t k = 0; k < elems.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& lk = elems[k].leading_monomial();
      if (!lk.divides(li)) continue;
      redundant = !(lk == li) || k < i;
    }
    if (!redundant) minimal.push_back(elems[i]);
  }
  std::vector<ModuleElement> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    const ModuleElement& g = minimal[i];
    ModuleElement t = normal_form(g.tail(), others);
    out.push_back((ModuleElement::monomial(G.ambient, g.leading_coefficient(),
                                           g.leading_monomial()) + t).monic());
  }
  std::sort(out.begin(), out.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    return F.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis{G.ambient, std::move(out), true};
}

GroebnerBasis reduced_groebner_basis(const FreeModule::Ptr& ambient,
                                     std::span<const ModuleElement> gens) {
  return reduce(buchberger(ambient, gens));
}

bool is_groebner_basis(std::span<const ModuleElement> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) return false;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[i].leading_monomial().position != G[j].leading_monomial().position) continue;
      if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

MonomialSubmodule initial_module(const GroebnerBasis& G) {
  std::vector<std::vector<Monomial>> gens(G.ambient->rank());
  for (const auto& g : G.elements) {
    if (g.is_zero()) continue;
    gens[g.leading_monomial().position].push_back(g.leading_monomial().mono);
  }
  return MonomialSubmodule::from_generators(G.ambient->num_vars(), std::move(gens));
}

std::vector<Monomial> monomial_colon(std::span<const Monomial> B, const Monomial& a) {
  std::vector<Monomial> out;
  out.reserve(B.size());
  for (const auto& b : B) out.push_back(b.colon(a));
  return minimalize(std::move(out));
}

}  // namespace modgb
