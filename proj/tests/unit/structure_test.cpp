#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace modgb;

namespace {

TEST(Presentation, Examples) {
  auto F = fx::module(2, {0, 0});
  auto S = F->ring();
  auto diag = presentation(F, std::vector{fx::el(F, "x1*e1"), fx::el(F, "x2*e2")});
  ASSERT_EQ(diag.rows, 2u);
  ASSERT_EQ(diag.cols, 2u);
  EXPECT_EQ(diag.at(0, 0), fx::el(S, "x1"));
  EXPECT_TRUE(diag.at(1, 0).is_zero());
  EXPECT_TRUE(diag.at(0, 1).is_zero());
  EXPECT_EQ(diag.at(1, 1), fx::el(S, "x2"));

  auto col = presentation(F, std::vector{fx::el(F, "x1*e1 + x2*e2")});
  EXPECT_EQ(col.cols, 1u);
  EXPECT_EQ(col.at(0, 0), fx::el(S, "x1"));
  EXPECT_EQ(col.at(1, 0), fx::el(S, "x2"));
  EXPECT_EQ(col.column(0, F), fx::el(F, "x1*e1 + x2*e2"));

  auto empty = presentation(F, std::vector<ModuleElement>{});
  EXPECT_EQ(empty.cols, 0u);
  EXPECT_TRUE(fitting0(empty).empty());
}

TEST(Fitting0, Examples) {
  auto F = fx::module(2, {0, 0});
  auto S = F->ring();
  auto a = fitting0(presentation(F, std::vector{fx::el(F, "x1*e1"), fx::el(F, "x2*e2")}));
  EXPECT_EQ(a, std::vector{fx::el(S, "x1*x2")});
  auto b = fitting0(presentation(F, std::vector{fx::el(F, "x1*e1 + x2*e2"),
                                                fx::el(F, "x2*e1 + x1*e2")}));
  EXPECT_EQ(b, std::vector{fx::el(S, "x1^2 - x2^2")});

  auto R = fx::module(3, {0});
  auto I = fitting0(presentation(R, std::vector{fx::el(R, "x1*x2*e1"), fx::el(R, "x3^2*e1")}));
  EXPECT_EQ(I.size(), 2u);
}

TEST(Fitting0, MinimalizeDropsRedundantMinors) {
  auto F = fx::module(2, {0});
  auto P = presentation(F, std::vector{fx::el(F, "x1*e1"), fx::el(F, "x1*x2*e1")});
  EXPECT_EQ(fitting0(P).size(), 2u);
  EXPECT_EQ(fitting0(P, true).size(), 1u);
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(5);
  auto S = fx::module(3, {0})->ring();
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = rng.uniform(1, 4);
    std::vector<std::vector<ModuleElement>> M(k);
    for (auto& row : M) {
      for (std::size_t c = 0; c < k; ++c) row.push_back(oracle::random_element(rng, S, 2, 2));
    }
    EXPECT_EQ(determinant(S, M), oracle::laplace_determinant(S, M));
  }
}

TEST(RegularSequence, MonomialCompleteIntersection) {
  auto S = fx::module(2, {0})->ring();
  Rng rng(1);
  std::vector gens{fx::el(S, "x1^2"), fx::el(S, "x2^2")};
  auto cert = find_regular_sequence(gens, 2, rng);
  ASSERT_EQ(cert.elements.size(), 2u);
  EXPECT_EQ(cert.prefix_dimensions, (std::vector<std::size_t>{2, 1, 0}));
  for (const auto& g : cert.elements) EXPECT_EQ(g.degree(), 2);
}

TEST(RegularSequence, RandomCombinations) {
  auto S = fx::module(3, {0})->ring();
  Rng rng(2024);
  std::vector gens{fx::el(S, "x1*x2"), fx::el(S, "x1*x3"), fx::el(S, "x2*x3")};
  auto cert = find_regular_sequence(gens, 2, rng);
  ASSERT_EQ(cert.elements.size(), 2u);
  EXPECT_EQ(quotient_dimension(S, std::vector{cert.elements[0]}), 2u);
  EXPECT_EQ(quotient_dimension(S, cert.elements), 1u);
  // Each g_k lies in the ideal.
  auto G = reduced_groebner_basis(S, gens);
  for (const auto& g : cert.elements) EXPECT_TRUE(normal_form(g, G.elements).is_zero());
}

TEST(RegularSequence, EmptyTarget) {
  auto S = fx::module(2, {0})->ring();
  Rng rng(3);
  auto cert = find_regular_sequence(std::vector{fx::el(S, "x1")}, 0, rng);
  EXPECT_TRUE(cert.elements.empty());
}

TEST(RegularSequence, ImpossibleTargetReportsExhaustion) {
  auto S = fx::module(2, {0}, RingOrder::grevlex, PositionStrategy::position_over_term,
                      Field::prime(2))->ring();
  Rng rng(4);
  // (x^2, xy) has dimension 1, so no two of its elements form a regular sequence.
  std::vector gens{fx::el(S, "x1^2"), fx::el(S, "x1*x2")};
  EXPECT_THROW(find_regular_sequence(gens, 2, rng), SearchExhausted);
  RegularSequenceOptions none;
  none.attempts = 0;
  EXPECT_THROW(find_regular_sequence(gens, 1, rng, none), SearchExhausted);
}

TEST(Homogenize, Examples) {
  auto F = fx::module(1, {0});
  auto Fh = F->homogenized();
  auto f = fx::el(F, "x1^2*e1 + x1*e1");
  auto fh = homogenize(f, Fh);
  EXPECT_TRUE(fh.is_homogeneous());
  EXPECT_EQ(fh.degree(), 2);
  EXPECT_EQ(fh.size(), 2u);
  EXPECT_EQ(dehomogenize(fh), f);

  auto g = fx::el(F, "x1^3*e1");
  EXPECT_EQ(dehomogenize(homogenize(g, Fh)), g);
  EXPECT_EQ(homogenize(g, Fh).terms()[0].monomial.mono, Monomial({3, 0}));

  auto G = fx::module(2, {0, 1});
  auto Gh = G->homogenized();
  auto k = fx::el(G, "x1*e1 + e2");
  auto kh = homogenize(k, Gh);
  for (const auto& t : kh.terms()) EXPECT_EQ(t.monomial.mono[2], 0u);
}

TEST(Dehomogenize, RoundTripOfGroebnerBasis) {
  auto F = fx::module(1, {0});
  auto Fh = F->homogenized();
  std::vector gens{homogenize(fx::el(F, "x1*e1 + e1"), Fh)};
  auto G = reduced_groebner_basis(Fh, gens);
  auto D = dehomogenize(G.elements);
  EXPECT_TRUE(is_groebner_basis(D));
  EXPECT_EQ(D, std::vector{fx::el(F, "x1*e1 + e1")});
}

}  // namespace
