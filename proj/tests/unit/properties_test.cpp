#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace modgb;

namespace {

constexpr int kTrials = 200;

struct Setup {
  RingOrder ring;
  PositionStrategy pos;
};

const Setup kOrders[] = {
    {RingOrder::lex, PositionStrategy::position_over_term},
    {RingOrder::grlex, PositionStrategy::position_over_term},
    {RingOrder::grevlex, PositionStrategy::position_over_term},
    {RingOrder::lex, PositionStrategy::term_over_position},
    {RingOrder::grlex, PositionStrategy::term_over_position},
    {RingOrder::grevlex, PositionStrategy::term_over_position},
};

ModuleMonomial random_mm(Rng& rng, std::size_t n, std::uint32_t m) {
  std::vector<Exponent> e(n);
  for (auto& x : e) x = static_cast<Exponent>(rng.uniform(0, 3));
  return ModuleMonomial{Monomial(e), static_cast<std::uint32_t>(rng.uniform(0, m - 1))};
}

TEST(OrderProperties, TotalAntisymmetricTransitive) {
  Rng rng(100);
  for (const auto& s : kOrders) {
    auto F = fx::module(3, {0, 1}, s.ring, s.pos);
    auto H = F->homogenized();
    for (auto* G : {F.get(), H.get()}) {
      const std::size_t n = G->num_vars();
      for (int t = 0; t < kTrials; ++t) {
        auto a = random_mm(rng, n, 2), b = random_mm(rng, n, 2), c = random_mm(rng, n, 2);
        const auto ab = fx::cmp(G->compare(a, b));
        EXPECT_EQ(ab == 0, a == b);
        EXPECT_EQ(ab, -fx::cmp(G->compare(b, a)));
        if (ab < 0 && fx::cmp(G->compare(b, c)) < 0) EXPECT_LT(fx::cmp(G->compare(a, c)), 0);
      }
    }
  }
}

TEST(OrderProperties, MultiplicativelyCompatible) {
  Rng rng(101);
  for (const auto& s : kOrders) {
    auto F = fx::module(3, {0, 2}, s.ring, s.pos);
    for (int t = 0; t < kTrials; ++t) {
      auto u = random_mm(rng, 3, 2), v = random_mm(rng, 3, 2);
      auto w = random_mm(rng, 3, 1).mono;
      if (fx::cmp(F->compare(u, v)) >= 0) std::swap(u, v);
      if (u == v) continue;
      EXPECT_LT(fx::cmp(F->compare(ModuleMonomial{u.mono * w, u.position}, ModuleMonomial{v.mono * w, v.position})), 0);
      // one is the least monomial at each position
      EXPECT_LE(fx::cmp(F->compare(ModuleMonomial{Monomial(3), u.position}, u)), 0);
    }
  }
}

TEST(ElementProperties, CanonicalFormAndDegree) {
  Rng rng(102);
  auto F = fx::module(3, {0, 1});
  for (int t = 0; t < kTrials; ++t) {
    auto f = oracle::random_element(rng, F, 3, 4);
    std::vector<Term> shuffled(f.terms().begin(), f.terms().end());
    std::reverse(shuffled.begin(), shuffled.end());
    EXPECT_EQ(ModuleElement::from_terms(F, shuffled), f);
    if (f.is_zero()) continue;
    auto a = random_mm(rng, 3, 1).mono;
    EXPECT_EQ(f.mono_mul(a).degree(), a.degree() + *f.degree());
    EXPECT_EQ((f - f).size(), 0u);
  }
}

// Random graded modules: library basis against the plain oracle basis, and
// the Hilbert function of in(M) against linear algebra on F/M.
TEST(GroebnerProperties, GradedAgainstOracles) {
  Rng rng(103);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 2);
    std::vector<Degree> bd(m, 0);
    for (std::size_t j = 1; j < m; ++j) bd[j] = rng.uniform(0, 1);
    const auto& s = kOrders[rng.uniform(0, 5)];
    auto F = fx::module(n, bd, s.ring, s.pos, Field::prime(32003));
    std::vector<ModuleElement> gens;
    for (int i = 0; i < rng.uniform(1, 3); ++i) {
      auto g = oracle::random_homogeneous(rng, F, rng.uniform(1, 3), 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    auto G = reduced_groebner_basis(F, gens);
    ASSERT_EQ(G.elements, oracle::naive_reduced_gb(F, gens)) << "trial " << t;
    auto in = initial_module(G);
    if (in.is_full()) continue;
    for (Degree z = 0; z <= 5; ++z) {
      EXPECT_EQ(hf_enumerate(in, bd, z), oracle::graded_quotient_dimension(F, gens, z));
    }
  }
}

TEST(GroebnerProperties, NongradedAgainstOracle) {
  Rng rng(104);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = rng.uniform(1, 3);
    const auto& s = kOrders[rng.uniform(0, 5)];
    auto F = fx::module(n, {0, 0}, s.ring, s.pos, Field::prime(32003));
    std::vector<ModuleElement> gens;
    for (int i = 0; i < rng.uniform(1, 3); ++i) gens.push_back(oracle::random_element(rng, F, 2, 3));
    auto G = reduced_groebner_basis(F, gens);
    EXPECT_EQ(G.elements, oracle::naive_reduced_gb(F, gens)) << "trial " << t;
    EXPECT_TRUE(is_groebner_basis(G.elements));
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G.elements).is_zero());
    EXPECT_EQ(reduce(G).elements, G.elements);
  }
}

TEST(GroebnerProperties, NormalFormIgnoresBasisOrder) {
  Rng rng(105);
  for (int t = 0; t < 40; ++t) {
    auto F = fx::module(3, {0}, RingOrder::grevlex, PositionStrategy::position_over_term,
                        Field::prime(32003));
    std::vector<ModuleElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracle::random_element(rng, F, 2, 3));
    auto G = buchberger(F, gens).elements;
    auto f = oracle::random_element(rng, F, 3, 5);
    auto a = normal_form(f, G);
    std::reverse(G.begin(), G.end());
    EXPECT_EQ(normal_form(f, G), a);
    EXPECT_EQ(oracle::long_division(f, G), a);
  }
}

TEST(StructureProperties, FittingIdealBoundAndAnnihilation) {
  Rng rng(106);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 2);
    std::vector<Degree> bd(m, 0);
    for (std::size_t j = 1; j < m; ++j) bd[j] = rng.uniform(0, 1);
    auto F = fx::module(n, bd, RingOrder::grevlex, PositionStrategy::position_over_term,
                        Field::prime(32003));
    std::vector<ModuleElement> gens;
    std::vector<Degree> degs;
    for (int i = 0; i < rng.uniform(1, 3); ++i) {
      auto g = oracle::random_homogeneous(rng, F, rng.uniform(1, 3), 3);
      if (g.is_zero()) continue;
      gens.push_back(g);
      degs.push_back(*g.degree());
    }
    std::sort(degs.begin(), degs.end(), std::greater<>());
    auto fitt = fitting0(presentation(F, gens));
    if (degs.size() < m) {
      EXPECT_TRUE(fitt.empty());
      continue;
    }
    Degree cap = 0, D = degs.front();
    for (std::size_t i = 0; i < m; ++i) cap += degs[i];
    for (Degree e : bd) cap -= e;
    auto G = reduced_groebner_basis(F, gens);
    for (const auto& f : fitt) {
      EXPECT_TRUE(f.is_homogeneous());
      EXPECT_LE(*f.degree(), cap);
      EXPECT_LE(cap, D * static_cast<Degree>(m));
      for (std::uint32_t j = 0; j < m; ++j) {
        EXPECT_TRUE(normal_form(embed(f, F, j), G.elements).is_zero());
      }
    }
  }
}

TEST(StructureProperties, HomogenizeRoundTripAndLeadingTerms) {
  Rng rng(107);
  for (const auto& s : kOrders) {
    auto F = fx::module(2, {0, 1}, s.ring, s.pos, Field::prime(32003));
    auto Fh = F->homogenized();
    for (int t = 0; t < 80; ++t) {
      auto f = oracle::random_element(rng, F, 3, 4);
      if (f.is_zero()) continue;
      auto fh = homogenize(f, Fh);
      EXPECT_TRUE(fh.is_homogeneous());
      EXPECT_EQ(dehomogenize(fh), f);
      // leading terms commute with dehomogenization when the order is degree-compatible
      auto g = oracle::random_homogeneous(rng, Fh, rng.uniform(1, 4), 4);
      if (g.is_zero()) continue;
      auto gd = dehomogenize(g);
      if (gd.is_zero()) continue;
      auto e = g.leading_monomial().mono.exponents();
      Monomial stripped(std::vector<Exponent>(e.begin(), e.end() - 1));
      EXPECT_EQ(gd.leading_monomial(), (ModuleMonomial{stripped, g.leading_monomial().position}));
    }
  }
}

}  // namespace
