// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "modgb_cli/corpus.hpp"
#include "modgb_cli/verify.hpp"
#include "oracles.hpp"

using namespace modgb;
using namespace modgb::cli;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Random monomial submodules shared by the split, structure, Hilbert and
// policy criteria.
struct SplitInstance {
  MonomialSubmodule M;
  std::vector<Degree> basis_degrees;
};

std::vector<SplitInstance> split_suite() {
  std::vector<SplitInstance> out;
  Rng rng(20240601);
  while (out.size() < 60) {
    const std::size_t n = rng.uniform(1, 4), m = rng.uniform(1, 3);
    SplitInstance s{oracle::random_monomial_module(rng, n, m, 4), std::vector<Degree>(m, 0)};
    for (std::size_t j = 1; j < m; ++j) s.basis_degrees[j] = rng.uniform(0, 2);
    if (s.M.is_full()) continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::string where(std::size_t i, const std::string& what) {
  return "instance " + std::to_string(i) + ": " + what;
}

Outcome anchor() {
  Outcome o;
  const auto t0 = Clock::now();
  auto p = fx::problem("x, y", "e1=0", "grevlex, pot", {"x^2*e1"});
  auto G = reduced_groebner_basis(p.ambient, p.gens);
  o.require(G.degree() == 2, "reduced GB degree is not 2");
  auto pp = pure_power_decomposition(std::vector<Degree>{2}, p.ambient->spec(), 2);
  o.require(pp.constants.b == std::vector<Degree>{4, 4, 2, 2}, "pure-power constants differ from (4,4,2,2)");
  BoundInputs in;
  in.n = 2;
  in.m = 1;
  in.r = 1;
  in.generator_degrees = {2};
  in.basis_degrees = {0};
  in.fitting_degrees = std::vector<Degree>{2};
  o.require(bound_graded_fitting(in) == 4, "Fitting-degree graded bound is not 4");
  o.require(bound_graded_dimfree(in) == 8, "dimension-free graded bound is not 8");
  auto reg = hs_regular_sequence(std::vector<Degree>{2}, std::vector<Degree>{0}, 2);
  o.require(reg.regularity == 1, "regular-sequence regularity is not 1");
  auto hd = hp_and_regularity(hilbert_series(initial_module(G), std::vector<Degree>{0}));
  o.require(hd.regularity == 1, "series regularity is not 1");
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "deg(G)=2, b=(4,4,2,2), bounds 4 and 8, regularity 1";
  return o;
}

Outcome split_correctness(const std::vector<SplitInstance>& suite) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t monomials = 0;
  for (std::size_t i = 0; i < suite.size() && o.ok; ++i) {
    const auto& [M, bd] = suite[i];
    const std::size_t n = M.num_vars;
    for (std::uint32_t j = 0; j < M.rank(); ++j) {
      auto r = split(ModuleMonomial{Monomial(n), j}, all_variables(n), M.gens[j], bd);
      std::vector<Cone> all = r.P;
      all.insert(all.end(), r.Q.begin(), r.Q.end());
      Degree top = bd[j];
      for (const auto& c : all) top = std::max(top, c.degree);
      top += 3;
      for (Degree z = bd[j]; z <= top; ++z) {
        for (const auto& e : oracle::compositions(n, z - bd[j])) {
          ModuleMonomial u{Monomial(e), j};
          bool in_M = false;
          for (const auto& b : M.gens[j]) in_M = in_M || b.divides(u.mono);
          ++monomials;
          const std::size_t inP = oracle::cones_containing(r.P, u);
          const std::size_t inQ = oracle::cones_containing(r.Q, u);
          o.require(inP + inQ == 1, where(i, "monomial covered " + std::to_string(inP + inQ) + " times"));
          o.require(inP == 0 || in_M, where(i, "P-cone monomial outside M"));
          o.require(inQ == 0 || !in_M, where(i, "Q-cone monomial inside M"));
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (o.ok) {
    o.detail = std::to_string(suite.size()) + " modules, " + std::to_string(monomials) +
               " monomials checked";
  }
  return o;
}

Outcome standard_exact(const std::vector<SplitInstance>& suite) {
  Outcome o;
  for (std::size_t i = 0; i < suite.size() && o.ok; ++i) {
    const auto& [M, bd] = suite[i];
    const std::size_t n = M.num_vars;
    for (std::uint32_t j = 0; j < M.rank(); ++j) {
      auto r = split(ModuleMonomial{Monomial(n), j}, all_variables(n), M.gens[j], bd);
      o.require(is_q_standard(r.Q, bd[j]), where(i, "SPLIT Q is not deg(h)-standard"));
    }
    auto Q = decompose_normal_forms(M, bd);
    auto P = exact(Q);
    o.require(!P.has_positive_part() || is_q_exact(P.cones, P.q), where(i, "EXACT output not q-exact"));
    auto c = macaulay_constants(P, n);
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t count = 0;
      for (const auto& cone : P.cones) count += cone.dimension() == k ? 1 : 0;
      o.require(c.b[k] == c.b[k + 1] + static_cast<Degree>(count), where(i, "accounting fails at i=" + std::to_string(k)));
      for (Degree d = c.b[k + 1]; d < c.b[k]; ++d) {
        std::size_t at = 0;
        bool right_dim = true;
        for (const auto& cone : P.cones) {
          if (cone.vars != 0 && cone.degree == d) {
            ++at;
            right_dim = right_dim && cone.dimension() == k;
          }
        }
        o.require(at == 1 && right_dim, where(i, "degree " + std::to_string(d) + " lacks a unique dim-" + std::to_string(k) + " cone"));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(suite.size()) + " modules";
  return o;
}

Outcome hilbert_consistency(const std::vector<SplitInstance>& suite) {
  Outcome o;
  for (std::size_t i = 0; i < suite.size() && o.ok; ++i) {
    const auto& [M, bd] = suite[i];
    const std::size_t n = M.num_vars;
    auto hf = [&](Degree z) { return mpz_class(oracle::count_standard(n, M.gens, bd, z)); };
    auto Q = decompose_normal_forms(M, bd);
    auto hs = hs_from_cones(Q.cones, n);
    const Degree top = Q.degree().value_or(0) + 5;
    for (Degree z = 0; z <= top; ++z) o.require(hs.coefficient(z) == hf(z), where(i, "series coefficient " + std::to_string(z)));
    auto P = exact(Q);
    auto c = macaulay_constants(P, n);
    auto hp = hp_from_constants(c, n);
    for (Degree z = c.b[0]; z <= c.b[0] + 10; ++z) {
      o.require(hp(mpz_class(z)) == hf(z), where(i, "HP formula at z=" + std::to_string(z)));
    }
    for (Degree z = c.b[1]; z < c.b[0]; ++z) {
      long points = 0;
      for (const auto& cone : P.cones) points += cone.vars == 0 && cone.degree == z ? 1 : 0;
      o.require(hf(z) == hp(mpz_class(z)) + points, where(i, "point correction at z=" + std::to_string(z)));
    }
  }
  if (o.ok) o.detail = std::to_string(suite.size()) + " modules";
  return o;
}

Outcome constants_uniqueness(const std::vector<SplitInstance>& suite) {
  Outcome o;
  for (std::size_t i = 0; i < suite.size() && o.ok; ++i) {
    const auto& [M, bd] = suite[i];
    auto a = macaulay_constants(exact(decompose_normal_forms(M, bd, SplitPolicy::ascending)), M.num_vars);
    auto b = macaulay_constants(exact(decompose_normal_forms(M, bd, SplitPolicy::descending)), M.num_vars);
    o.require(std::equal(a.b.begin() + 1, a.b.end(), b.b.begin() + 1, b.b.end()),
              where(i, "b_1..b_{n+1} depend on the split policy"));
  }
  if (o.ok) o.detail = std::to_string(suite.size()) + " modules, two policies";
  return o;
}

void multisets(std::size_t len, Degree hi, std::vector<Degree>& cur,
               const std::function<void(const std::vector<Degree>&)>& f) {
  if (cur.size() == len) {
    f(cur);
    return;
  }
  for (Degree v = cur.empty() ? hi : std::min(hi, cur.back()); v >= 1; --v) {
    cur.push_back(v);
    multisets(len, hi, cur, f);
    cur.pop_back();
  }
}

// Every check runs on the whole grid; the report names each failing check with
// its count and first offending point.
Outcome pure_power_formulas() {
  struct Tally {
    std::string name;
    std::size_t failures = 0;
    std::string first;
  };
  std::vector<Tally> tallies = {{"b_k = D above r"},
                                {"b_r = d_1...d_{n-r} m + D"},
                                {"b_{k-1} <= b_k^2 / 2"},
                                {"b_{k-1} <= (b_k^2 - b_{k+1}^2 + b_k + b_{k+1}) / 2"},
                                {"closed-form constant bound"},
                                {"agreement with the generic pipeline"},
                                {"finite-dimensional b_0 and point count"}};
  std::size_t runs = 0;
  std::string tag;
  auto require = [&](std::size_t which, bool cond) {
    if (cond) return;
    if (tallies[which].failures++ == 0) tallies[which].first = tag;
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<Degree> bd(m, 0);
      for (std::size_t j = 1; j < m; ++j) bd[j] = static_cast<Degree>(j % 2);
      auto spec = make_spec(n, bd, Field::rationals());
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Degree> cur;
        multisets(n - r, 3, cur, [&](const std::vector<Degree>& d) {
          for (Degree D = 2; D <= 4; ++D) {
            ++runs;
            tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " r=" + std::to_string(r) +
                  " D=" + std::to_string(D) + " d=(";
            for (std::size_t i = 0; i < d.size(); ++i) tag += (i ? "," : "") + std::to_string(d[i]);
            tag += ")";
            auto res = pure_power_decomposition(d, spec, D);
            const auto& b = res.constants.b;
            for (std::size_t k = r + 1; k <= n + 1; ++k) require(0, b[k] == D);
            Degree prod = static_cast<Degree>(m);
            for (Degree x : d) prod *= x;
            if (r >= 1) {
              require(1, b[r] == prod + D);
              for (std::size_t k = 2; k <= r; ++k) {
                tag += " k=" + std::to_string(k);
                require(2, 2 * b[k - 1] <= b[k] * b[k]);
                require(3, 2 * b[k - 1] <= b[k] * b[k] - b[k + 1] * b[k + 1] + b[k] + b[k + 1]);
              }
              for (std::size_t k = 1; k <= r; ++k) {
                require(4, pure_power_constant_bound(d, m, D, r, k) >= b[k]);
              }
              // Same constants from the generic pipeline on J F.
              std::vector<std::vector<Monomial>> B(m);
              for (std::size_t i = 0; i < d.size(); ++i) {
                std::vector<Exponent> e(n, 0);
                e[i] = static_cast<Exponent>(d[i]);
                for (auto& Bj : B) Bj.emplace_back(e);
              }
              auto JF = MonomialSubmodule::from_generators(n, B);
              auto Q = lift_to_d_standard(decompose_normal_forms(JF, bd), D);
              auto c = macaulay_constants(exact(Q), n);
              require(5, std::equal(c.b.begin() + 1, c.b.end(), b.begin() + 1, b.end()));
            } else {
              Degree top = 0;
              for (Degree x : d) top += x - 1;
              top += *std::max_element(bd.begin(), bd.end());
              require(6, b[0] == std::max(D, top + 1) &&
                             res.decomposition.cones.size() == static_cast<std::size_t>(prod));
            }
          }
        });
      }
    }
  }
  Outcome o;
  o.detail = std::to_string(runs) + " grid points";
  for (const auto& t : tallies) {
    if (t.failures == 0) continue;
    o.ok = false;
    o.detail += "; " + t.name + " fails at " + std::to_string(t.failures) + " (first " + t.first + ")";
  }
  return o;
}

std::vector<VerifyRecord> run_corpus(Field field, std::size_t count, std::uint64_t seed) {
  CorpusOptions opt;
  opt.seed = seed;
  opt.count = count;
  opt.field = field;
  std::vector<VerifyRecord> out;
  for (const auto& p : generate_corpus(opt)) out.push_back(verify_problem(p, VerifyOptions{}));
  return out;
}

const Check* check(const VerifyRecord& r, const std::string& name) { return r.find(name); }

Outcome soundness(const std::vector<VerifyRecord>& corpus, double secs) {
  Outcome o;
  std::size_t graded = 0;
  for (const auto& r : corpus) {
    graded += r.graded ? 1 : 0;
    const std::string gb_check =
        r.graded ? "gb_degree_within_cone_degree" : "homogenized.gb_degree_within_cone_degree";
    const Check* c = check(r, gb_check);
    o.require(c && c->status == CheckStatus::pass, r.name + ": " + gb_check);
    const Check* b = check(r, "bounds");
    o.require(b && b->status == CheckStatus::pass, r.name + ": bounds " + (b ? b->detail : "missing"));
    o.require(r.bounds.has_value(), r.name + ": no bound report");
    if (r.bounds) {
      for (const char* name : {"nongraded", "nongraded_dimfree"}) {
        o.require(r.bounds->find(name)->value.has_value(), r.name + ": " + name + " not evaluated");
      }
      if (r.graded) {
        for (const char* name : {"graded", "graded_dimfree", "graded_fitting"}) {
          o.require(r.bounds->find(name)->value.has_value(), r.name + ": " + name + " not evaluated");
        }
      }
    }
    for (const auto& ch : r.checks) {
      o.require(ch.status != CheckStatus::fail, r.name + ": " + ch.name + " failed " + ch.detail);
    }
  }
  o.require(graded > 0 && graded < corpus.size(), "corpus lacks graded or non-graded instances");
  o.require(secs < 300.0, "took " + std::to_string(secs) + " s");
  if (o.ok) {
    o.detail = std::to_string(corpus.size()) + " modules (" + std::to_string(graded) +
               " graded), zero violations";
  }
  return o;
}

Outcome fitting_regular(const std::vector<VerifyRecord>& corpus) {
  Outcome o;
  std::size_t certified = 0, skipped = 0;
  for (const auto& r : corpus) {
    const Check* ann = check(r, "fitting_annihilates");
    o.require(ann && ann->status == CheckStatus::pass, r.name + ": Fitting ideal does not annihilate");
    if (!r.graded) continue;
    const Check* deg = check(r, "fitting_degree_bound");
    o.require(deg && deg->status == CheckStatus::pass, r.name + ": Fitting degree bound");
    const Check* rs = check(r, "regular_sequence");
    o.require(rs && rs->status != CheckStatus::fail, r.name + ": regular sequence certificate");
    if (rs && rs->status == CheckStatus::pass) ++certified;
    if (rs && rs->status == CheckStatus::skip) ++skipped;
  }
  // A search that cannot succeed must surface as a skip with a reason.
  auto p = fx::problem("x, y", "e1=0", "grevlex, pot", {"x^2*e1", "y^2*e1"}, "GF 2");
  VerifyOptions starved;
  starved.regular_sequence_options.attempts = 0;
  auto rec = verify_problem(p, starved);
  const Check* rs = rec.find("regular_sequence");
  o.require(rs && rs->status == CheckStatus::skip && !rs->detail.empty(),
            "exhausted search was not reported as a skip");
  o.require(rec.count(CheckStatus::fail) == 0, "exhausted search caused a failure");
  // Over GF(2) the search may fail; it must never fail silently.
  for (const auto& r : run_corpus(Field::prime(2), 40, 3)) {
    const Check* c = r.find("regular_sequence");
    o.require(!c || c->status != CheckStatus::fail, r.name + " over GF(2): regular sequence failed");
    if (c && c->status == CheckStatus::skip) {
      ++skipped;
      o.require(!c->detail.empty(), r.name + ": skip without reason");
    }
  }
  if (o.ok) {
    o.detail = std::to_string(certified) + " certificates verified, " + std::to_string(skipped) +
               " reported skips";
  }
  return o;
}

Outcome homogenization(const std::vector<VerifyRecord>& corpus) {
  Outcome o;
  std::size_t nongraded = 0;
  for (const auto& r : corpus) {
    if (r.graded) continue;
    ++nongraded;
    const Check* c = check(r, "dehomogenized_groebner_basis");
    o.require(c && c->status == CheckStatus::pass, r.name + ": dehomogenized basis");
  }
  Rng rng(777);
  const RingOrder rings[] = {RingOrder::lex, RingOrder::grlex, RingOrder::grevlex};
  const PositionStrategy positions[] = {PositionStrategy::position_over_term,
                                        PositionStrategy::term_over_position};
  std::size_t elements = 0;
  while (elements < 500 && o.ok) {
    const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 2);
    std::vector<Degree> bd(m, 0);
    for (std::size_t j = 1; j < m; ++j) bd[j] = rng.uniform(0, 2);
    auto F = fx::module(n, bd, rings[rng.uniform(0, 2)], positions[rng.uniform(0, 1)],
                        Field::prime(32003));
    auto Fh = F->homogenized();
    auto f = oracle::random_homogeneous(rng, Fh, rng.uniform(2, 4), 4);
    if (f.is_zero()) continue;
    ++elements;
    auto e = f.leading_monomial().mono.exponents();
    ModuleMonomial want{Monomial(std::vector<Exponent>(e.begin(), e.end() - 1)),
                        f.leading_monomial().position};
    auto d = dehomogenize(f);
    o.require(!d.is_zero() && d.leading_monomial() == want,
              "leading monomial changes under dehomogenization: " + f.to_string());
  }
  if (o.ok) {
    o.detail = std::to_string(nongraded) + " non-graded round trips, " + std::to_string(elements) +
               " leading-term checks";
  }
  return o;
}

}  // namespace

int main() {
  const auto suite = split_suite();
  const auto t0 = Clock::now();
  const auto corpus = run_corpus(Field::prime(32003), 100, 1);
  const double corpus_secs = seconds_since(t0);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"anchor instance", [] { return anchor(); }},
      {"split correctness", [&] { return split_correctness(suite); }},
      {"standard and exact structure", [&] { return standard_exact(suite); }},
      {"Hilbert consistency", [&] { return hilbert_consistency(suite); }},
      {"constants uniqueness", [&] { return constants_uniqueness(suite); }},
      {"pure-power formulas", [] { return pure_power_formulas(); }},
      {"degree bound soundness corpus", [&] { return soundness(corpus, corpus_secs); }},
      {"Fitting ideal and regular sequences", [&] { return fitting_regular(corpus); }},
      {"homogenization round trip", [&] { return homogenization(corpus); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.ok ? 0 : 1;
    std::printf("[%s] %zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
