#include "modgb_cli/corpus.hpp"

#include <algorithm>

#include "modgb/groebner.hpp"

namespace modgb::cli {

namespace {

Monomial random_monomial(Rng& rng, std::size_t n, Degree degree) {
  std::vector<Exponent> e(n, 0);
  for (Degree k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1))];
  return Monomial(std::move(e));
}

Scalar random_coefficient(Rng& rng, Field K) {
  while (true) {
    Scalar s = Scalar::from_int(K, static_cast<long>(rng.uniform(-9, 9)));
    if (!s.is_zero()) return s;
  }
}

}  // namespace

Problem random_problem(Rng& rng, const CorpusOptions& opt, bool graded) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(opt.nmax)));
  const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(opt.mmax)));
  std::vector<Degree> bdeg(m, 0);
  for (std::size_t j = 1; j < m; ++j) bdeg[j] = rng.uniform(0, std::max<Degree>(0, opt.dmax / 2));
  const Degree l = *std::max_element(bdeg.begin(), bdeg.end());
  MonomialOrder order;
  order.ring = opt.ring_order;
  order.position = opt.position;
  Problem p;
  p.ambient = FreeModule::make(make_spec(n, bdeg, opt.field), order);

  const auto s = static_cast<std::size_t>(rng.uniform(1, 3));
  for (std::size_t i = 0; i < s; ++i) {
    // The first generator reaches degree >= l so that D >= l.
    const Degree lo = i == 0 ? std::max<Degree>(l, 1) : 1;
    const Degree top = rng.uniform(std::min(lo, opt.dmax), std::max(lo, opt.dmax));
    const auto terms = static_cast<std::size_t>(rng.uniform(2, 4));
    std::vector<Term> ts;
    for (std::size_t t = 0; t < terms; ++t) {
      Degree deg = graded || t == 0 ? top : rng.uniform(0, top);
      // Positions whose shift fits under the term degree.
      std::vector<std::uint32_t> fits;
      for (std::uint32_t j = 0; j < m; ++j) {
        if (bdeg[j] <= deg) fits.push_back(j);
      }
      const std::uint32_t j = fits[static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(fits.size()) - 1))];
      ts.push_back(Term{random_coefficient(rng, opt.field),
                        {random_monomial(rng, n, deg - bdeg[j]), j}});
    }
    ModuleElement g = ModuleElement::from_terms(p.ambient, std::move(ts));
    if (!g.is_zero()) p.gens.push_back(std::move(g));
  }
  return p;
}

std::vector<Problem> generate_corpus(const CorpusOptions& opt) {
  std::vector<Problem> out;
  for (std::size_t i = 0; i < opt.count; ++i) {
    Rng rng(derive_seed(opt.seed, i));
    const bool graded = rng.coin();
    while (true) {
      Problem p = random_problem(rng, opt, graded);
      if (p.gens.empty()) continue;
      Degree D = 0;
      for (const auto& g : p.gens) D = std::max(D, *g.degree());
      if (D < p.ambient->spec().max_basis_degree()) continue;
      if (initial_module(reduced_groebner_basis(p.ambient, p.gens)).is_full()) continue;
      p.name = "corpus-" + std::to_string(opt.seed) + "-" + std::to_string(i);
      out.push_back(std::move(p));
      break;
    }
  }
  return out;
}

}  // namespace modgb::cli
