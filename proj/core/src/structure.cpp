#include "modgb/structure.hpp"

#include <algorithm>
#include <map>

#include "modgb/errors.hpp"
#include "modgb/hilbert.hpp"

namespace modgb {

ModuleElement PresentationMatrix::column(std::size_t i, const FreeModule::Ptr& ambient) const {
  ModuleElement f(ambient);
  for (std::size_t j = 0; j < rows; ++j) {
    f = f + embed(at(j, i), ambient, static_cast<std::uint32_t>(j));
  }
  return f;
}

PresentationMatrix presentation(const FreeModule::Ptr& ambient,
                                std::span<const ModuleElement> gens) {
  PresentationMatrix P;
  P.ring = ambient->ring();
  P.rows = ambient->rank();
  P.cols = gens.size();
  P.entries.assign(P.rows * P.cols, ModuleElement(P.ring));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_ambient(*ambient, *gens[i].ambient());
    for (std::size_t j = 0; j < P.rows; ++j) {
      P.entries[j * P.cols + i] = component(gens[i], P.ring, static_cast<std::uint32_t>(j));
    }
  }
  return P;
}

ModuleElement determinant(const FreeModule::Ptr& ring,
                          std::vector<std::vector<ModuleElement>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  }
  ModuleElement one = ModuleElement::basis(ring, 0);
  if (n == 0) return one;
  bool negate = false;
  ModuleElement prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return ModuleElement(ring);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ModuleElement num = multiply(a[k][k], a[i][j]) - multiply(a[i][k], a[k][j]);
        a[i][j] = divide_exact(num, prev);
      }
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::vector<ModuleElement> fitting0(const PresentationMatrix& P, bool minimalize) {
  std::vector<ModuleElement> out;
  const std::size_t m = P.rows;
  const std::size_t s = P.cols;
  if (m == 0) {
    out.push_back(ModuleElement::basis(P.ring, 0));
    return out;
  }
  if (s < m) return out;
  std::vector<bool> chosen(s, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(m), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < s; ++i) {
      if (chosen[i]) cols.push_back(i);
    }
    std::vector<std::vector<ModuleElement>> sub(m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t c : cols) sub[j].push_back(P.at(j, c));
    }
    ModuleElement d = determinant(P.ring, std::move(sub));
    if (d.is_zero()) continue;
    d = d.monic();
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  if (minimalize && out.size() > 1) {
    for (std::size_t i = out.size(); i-- > 0;) {
      std::vector<ModuleElement> others;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (k != i) others.push_back(out[k]);
      }
      GroebnerBasis G = reduced_groebner_basis(P.ring, others);
      if (normal_form(out[i], G.elements).is_zero()) out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return out;
}

std::size_t quotient_dimension(const FreeModule::Ptr& ring, std::span<const ModuleElement> gens) {
  GroebnerBasis G = reduced_groebner_basis(ring, gens);
  MonomialSubmodule in = initial_module(G);
  return dimension(hilbert_series(in, ring->spec().basis_degrees));
}

namespace {

ModuleElement random_linear_form(const FreeModule::Ptr& ring, Rng& rng, std::int64_t bound) {
  std::vector<Term> terms;
  const std::size_t n = ring->num_vars();
  for (std::size_t i = 0; i < n; ++i) {
    Scalar c = Scalar::from_int(ring->field(), static_cast<long>(rng.uniform(-bound, bound)));
    terms.push_back(Term{c, {Monomial(n).times_variable(i), 0}});
  }
  return ModuleElement::from_terms(ring, std::move(terms));
}

ModuleElement power(const ModuleElement& f, Degree e) {
  ModuleElement r = ModuleElement::basis(f.ambient(), 0);
  for (Degree i = 0; i < e; ++i) r = multiply(f, r);
  return r;
}

}  // namespace

RegularSequenceCertificate find_regular_sequence(std::span<const ModuleElement> ideal_gens,
                                                 std::size_t target_len, Rng& rng,
                                                 const RegularSequenceOptions& options) {
  RegularSequenceCertificate cert;
  std::vector<ModuleElement> gens;
  for (const auto& p : ideal_gens) {
    if (!p.is_zero()) gens.push_back(p);
  }
  if (target_len == 0) {
    if (!ideal_gens.empty()) cert.prefix_dimensions.push_back(ideal_gens.front().ambient()->num_vars());
    return cert;
  }
  if (gens.empty()) throw InvalidInput("regular sequence requested from the zero ideal");
  const FreeModule::Ptr& ring = gens.front().ambient();
  const std::size_t n = ring->num_vars();
  if (target_len > n) throw InvalidInput("a regular sequence has at most n elements");
  for (const auto& p : gens) {
    require_same_ambient(*ring, *p.ambient());
    if (ring->rank() != 1) throw StructuralError("regular sequences live in the polynomial ring");
    if (!p.is_homogeneous()) throw InvalidInput("regular sequence search needs homogeneous input");
  }
  std::vector<Degree> degs;
  for (const auto& p : gens) degs.push_back(*p.degree());
  std::sort(degs.begin(), degs.end(), std::greater<>());
  if (degs.size() < target_len) {
    throw InvalidInput("fewer generators than the requested sequence length");
  }
  cert.prefix_dimensions.push_back(n);
  for (std::size_t k = 1; k <= target_len; ++k) {
    const Degree delta = degs[target_len - k];
    bool found = false;
    for (int attempt = 0; attempt < options.attempts && !found; ++attempt) {
      ModuleElement g(ring);
      for (const auto& p : gens) {
        const Degree dp = *p.degree();
        if (dp > delta) continue;
        Scalar c = Scalar::from_int(
            ring->field(),
            static_cast<long>(rng.uniform(-options.coefficient_bound, options.coefficient_bound)));
        if (c.is_zero()) continue;
        ModuleElement pad = power(random_linear_form(ring, rng, options.coefficient_bound), delta - dp);
        g = g + c * multiply(pad, p);
      }
      if (g.is_zero() || *g.degree() != delta) continue;
      std::vector<ModuleElement> prefix = cert.elements;
      prefix.push_back(g);
      const std::size_t dim = quotient_dimension(ring, prefix);
      if (dim == n - k) {
        cert.elements.push_back(g.monic());
        cert.prefix_dimensions.push_back(dim);
        found = true;
      }
    }
    if (!found) {
      throw SearchExhausted("no regular element of degree " + std::to_string(delta) +
                            " found after " + std::to_string(options.attempts) +
                            " attempts; the field may be too small or the ideal's dimension "
                            "larger than n - " + std::to_string(target_len));
    }
  }
  return cert;
}

ModuleElement homogenize(const ModuleElement& f, const FreeModule::Ptr& homogenized) {
  if (f.is_zero()) throw InvalidInput("cannot homogenize the zero element");
  if (!homogenized->base() || !homogenized->base()->same_as(*f.ambient())) {
    throw StructuralError("target is not the homogenization of the element's ambient");
  }
  const Degree top = *f.degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(t.monomial.mono.exponents().begin(), t.monomial.mono.exponents().end());
    e.push_back(static_cast<Exponent>(top - f.ambient()->degree(t.monomial)));
    terms.push_back(Term{t.coeff, {Monomial(std::move(e)), t.monomial.position}});
  }
  return ModuleElement::from_terms(homogenized, std::move(terms));
}

ModuleElement dehomogenize(const ModuleElement& f) {
  const FreeModule::Ptr& base = f.ambient()->base();
  if (!base) throw StructuralError("element does not live in a homogenized module");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto ex = t.monomial.mono.exponents();
    std::vector<Exponent> e(ex.begin(), ex.end() - 1);
    terms.push_back(Term{t.coeff, {Monomial(std::move(e)), t.monomial.position}});
  }
  return ModuleElement::from_terms(base, std::move(terms));
}

std::vector<ModuleElement> dehomogenize(std::span<const ModuleElement> G) {
  std::vector<ModuleElement> out;
  for (const auto& g : G) {
    ModuleElement d = dehomogenize(g);
    if (!d.is_zero()) out.push_back(d.monic());
  }
  return out;
}

}  // namespace modgb
