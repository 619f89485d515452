#include "modgb_cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "modgb/errors.hpp"
#include "modgb/groebner.hpp"
#include "modgb/hilbert.hpp"
#include "modgb/pure_power.hpp"
#include "modgb/structure.hpp"

namespace modgb::cli {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

bool VerifyRecord::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t VerifyRecord::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

const Check* VerifyRecord::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string fmt_degree(std::optional<Degree> d) { return d ? std::to_string(*d) : "-inf"; }

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out, std::string prefix = "")
      : out_(out), prefix_(std::move(prefix)) {}

  void add(const std::string& name, bool ok, std::string detail) {
    out_.push_back(Check{prefix_ + name, ok ? CheckStatus::pass : CheckStatus::fail,
                         std::move(detail)});
  }
  void skip(const std::string& name, std::string why) {
    out_.push_back(Check{prefix_ + name, CheckStatus::skip, std::move(why)});
  }

 private:
  std::vector<Check>& out_;
  std::string prefix_;
};

struct Structure {
  ConeDecomposition Q;
  std::optional<MacaulayConstants> constants;
};

/// Checks on the normal-form decomposition of a monomial module: cover,
/// Hilbert series, splitting degrees, EXACT structure and constants.
Structure structural_checks(const MonomialSubmodule& in, std::span<const Degree> bdeg,
                            const VerifyOptions& opt, Recorder& rec) {
  const std::size_t n = in.num_vars;
  Structure out;
  out.Q = decompose_normal_forms(in, bdeg);
  const auto& Q = out.Q;
  const Degree qdeg = Q.degree().value_or(0);

  auto capped = [&](Degree z) { return opt.zmax ? std::min(z, *opt.zmax) : z; };

  // Every module monomial of small degree lies in exactly one cone or in M.
  {
    const Degree top = capped(qdeg + 3);
    bool ok = true;
    std::string bad;
    for (std::uint32_t j = 0; j < in.rank() && ok; ++j) {
      for (Degree d = 0; d + bdeg[j] <= top && ok; ++d) {
        for (const auto& mono : monomials_of_degree(n, d)) {
          ModuleMonomial u{mono, j};
          std::size_t hits = 0;
          for (const auto& c : Q.cones) hits += c.contains(u) ? 1 : 0;
          const std::size_t want = in.contains(u) ? 0 : 1;
          if (hits != want) {
            ok = false;
            bad = "degree " + std::to_string(d + bdeg[j]) + " monomial covered " +
                  std::to_string(hits) + " times";
            break;
          }
        }
      }
    }
    rec.add("decomposition_cover", ok, ok ? "checked up to degree " + std::to_string(top) : bad);
  }

  // Series from cones against the independent numerator and enumeration.
  {
    HilbertSeries hs = hilbert_series(in, bdeg);
    HilbertSeries hc = hs_from_cones(Q.cones, n);
    bool ok = hs == hc;
    const Degree top = capped(qdeg + 5);
    for (Degree z = 0; z <= top && ok; ++z) ok = hc.coefficient(z) == hf_enumerate(in, bdeg, z);
    rec.add("hilbert_series", ok, "HS = " + hs.reduced().to_string());
  }

  // Splitting degree controls the initial-module generators per position.
  {
    auto parts = split_positions(in, bdeg);
    bool ok = true;
    for (std::uint32_t j = 0; j < in.rank(); ++j) {
      if (in.is_full_at(j)) continue;
      ConeDecomposition Qj{parts[j], 0};
      const Degree cap = std::max(1 + Qj.degree().value_or(-1), bdeg[j]);
      for (const auto& g : in.gens[j]) ok = ok && g.degree() + bdeg[j] <= cap;
    }
    rec.add("initial_generators_within_split_degree", ok, "");
  }

  // SPLIT output is standard; EXACT output is exact with consistent constants.
  rec.add("standard", !Q.has_positive_part() || is_q_standard(Q.cones, Q.q),
          "q = " + std::to_string(Q.q));
  ConeDecomposition P = exact(Q);
  const bool is_exact = !P.has_positive_part() || is_q_exact(P.cones, P.q);
  rec.add("exact", is_exact, "q = " + std::to_string(P.q));
  if (!is_exact) return out;
  MacaulayConstants c = macaulay_constants(P, n);
  out.constants = c;
  {
    bool ok = true;
    for (std::size_t i = 1; i <= n; ++i) {
      Degree cnt = 0;
      for (const auto& cone : P.cones) cnt += cone.dimension() == i ? 1 : 0;
      ok = ok && c.b[i] == c.b[i + 1] + cnt;
    }
    rec.add("constant_accounting", ok, "");
  }
  {
    HilbertPolynomial hp = hp_from_constants(c, n);
    HilbertData hd = hp_and_regularity(hilbert_series(in, bdeg));
    bool ok = hp == hd.polynomial;
    std::string detail = "HP = " + hp.to_string() + ", regularity " + std::to_string(hd.regularity);
    const Degree hi = capped(c.b[0] + 10);
    for (Degree z = c.b[0]; z <= hi && ok; ++z) ok = hp(mpz_class(z)) == hf_enumerate(in, bdeg, z);
    for (Degree z = c.b[1]; z < c.b[0] && z <= hi && ok; ++z) {
      long points = 0;
      for (const auto& cone : P.cones) points += cone.vars == 0 && cone.degree == z ? 1 : 0;
      ok = hf_enumerate(in, bdeg, z) == hp(mpz_class(z)) + points;
    }
    rec.add("hilbert_polynomial_from_constants", ok, detail);
  }
  {
    ConeDecomposition Q2 = decompose_normal_forms(in, bdeg, SplitPolicy::descending);
    MacaulayConstants c2 = macaulay_constants(exact(Q2), n);
    bool ok = std::equal(c.b.begin() + 1, c.b.end(), c2.b.begin() + 1, c2.b.end());
    rec.add("constants_policy_independent", ok, "");
  }
  return out;
}

std::vector<Degree> top_degrees(std::vector<Degree> d, std::size_t k) {
  std::sort(d.begin(), d.end(), std::greater<>());
  d.resize(std::min(k, d.size()));
  return d;
}

}  // namespace

VerifyRecord verify_problem(const Problem& p, const VerifyOptions& opt) {
  const FreeModule::Ptr& F = p.ambient;
  const auto& spec = F->spec();
  const std::span<const Degree> bdeg = spec.basis_degrees;
  VerifyRecord rec;
  rec.name = p.name;
  rec.n = F->num_vars();
  rec.m = F->rank();
  rec.l = spec.max_basis_degree();
  std::vector<ModuleElement> gens;
  std::vector<Degree> gen_degrees;
  for (const auto& g : p.gens) {
    if (g.is_zero()) continue;
    gens.push_back(g);
    gen_degrees.push_back(*g.degree());
  }
  rec.graded = std::all_of(gens.begin(), gens.end(),
                           [](const ModuleElement& g) { return g.is_homogeneous(); });
  for (Degree d : gen_degrees) rec.D = std::max(rec.D, d);
  Recorder top(rec.checks);

  GroebnerBasis G = reduced_groebner_basis(F, gens);
  rec.gb_degree = G.degree();
  rec.gb_size = G.elements.size();
  top.add("groebner_basis", is_groebner_basis(G.elements), std::to_string(G.elements.size()) +
                                                                " elements");
  {
    bool ok = true;
    for (const auto& g : gens) ok = ok && normal_form(g, G.elements).is_zero();
    top.add("generators_reduce_to_zero", ok, "");
  }
  MonomialSubmodule in = initial_module(G);
  if (in.is_full()) throw ImproperSubmodule();
  rec.r = dimension(hilbert_series(in, bdeg));

  if (rec.graded) {
    Structure s = structural_checks(in, bdeg, opt, top);
    rec.q_degree = s.Q.degree();
    rec.constants = s.constants;
    const Degree cap = std::max(1 + s.Q.degree().value_or(-1), rec.l);
    top.add("gb_degree_within_cone_degree", !rec.gb_degree || *rec.gb_degree <= cap,
            "deg(G) = " + fmt_degree(rec.gb_degree) + ", max{1 + deg(Q), l} = " +
                std::to_string(cap));
  } else {
    Recorder on_m(rec.checks, "initial_module.");
    structural_checks(in, bdeg, opt, on_m);

    FreeModule::Ptr Fh = F->homogenized();
    std::vector<ModuleElement> gens_h;
    for (const auto& g : gens) gens_h.push_back(homogenize(g, Fh));
    GroebnerBasis Gt = reduced_groebner_basis(Fh, gens_h);
    MonomialSubmodule in_t = initial_module(Gt);
    Recorder hom(rec.checks, "homogenized.");
    Structure s = structural_checks(in_t, bdeg, opt, hom);
    rec.q_degree = s.Q.degree();
    rec.constants = s.constants;
    const Degree cap = std::max(1 + s.Q.degree().value_or(-1), rec.l);
    hom.add("gb_degree_within_cone_degree", Gt.degree().value_or(0) <= cap,
            "deg(G~) = " + fmt_degree(Gt.degree()) + ", max{1 + deg(Q~), l} = " +
                std::to_string(cap));
    {
      bool ok = true;
      for (const auto& g : Gt.elements) {
        const ModuleElement d = dehomogenize(g);
        const auto& lt = g.leading_monomial();
        auto e = lt.mono.exponents();
        ModuleMonomial stripped{Monomial(std::vector<Exponent>(e.begin(), e.end() - 1)), lt.position};
        ok = ok && !d.is_zero() && d.leading_monomial() == stripped;
      }
      top.add("initial_compatible_with_dehomogenization", ok, "");
    }
    std::vector<ModuleElement> deh = dehomogenize(Gt.elements);
    const bool is_gb = is_groebner_basis(deh);
    const bool same = is_gb && reduce(GroebnerBasis{F, deh, false}).elements == G.elements;
    top.add("dehomogenized_groebner_basis", is_gb && same,
            is_gb ? (same ? "" : "reduces to a different basis") : "S-pair test failed");
    if (F->order().is_degree_compatible()) {
      top.add("gb_degree_within_homogenized_degree",
              rec.gb_degree.value_or(0) <= Gt.degree().value_or(0),
              "deg(G) = " + fmt_degree(rec.gb_degree) + ", deg(G~) = " + fmt_degree(Gt.degree()));
    } else {
      top.skip("gb_degree_within_homogenized_degree", "order is not degree-compatible");
    }
  }

  // Fitting ideal.
  PresentationMatrix pm = presentation(F, gens);
  std::vector<ModuleElement> fitt = fitting0(pm, true);
  for (const auto& f : fitt) rec.fitting_degrees.push_back(*f.degree());
  std::sort(rec.fitting_degrees.begin(), rec.fitting_degrees.end(), std::greater<>());
  {
    bool ok = true;
    for (const auto& f : fitt) {
      for (std::uint32_t j = 0; j < F->rank() && ok; ++j) {
        ok = normal_form(embed(f, F, j), G.elements).is_zero();
      }
    }
    top.add("fitting_annihilates", ok, std::to_string(fitt.size()) + " generators");
  }
  if (rec.graded) {
    auto top_m = top_degrees(gen_degrees, rec.m);
    Degree cap = 0;
    for (Degree d : top_m) cap += d;
    cap -= spec.basis_degree_sum();
    bool ok = true;
    for (const auto& f : fitt) ok = ok && f.is_homogeneous() && *f.degree() <= cap;
    top.add("fitting_degree_bound", ok || fitt.empty(),
            "max degree " + (fitt.empty() ? std::string("-") : std::to_string(rec.fitting_degrees.front())) +
                " <= " + std::to_string(cap));
  }

  const std::size_t c = rec.n - rec.r;
  if (rec.graded && opt.regular_sequence) {
    if (c == 0) {
      top.add("regular_sequence", true, "empty sequence");
    } else {
      Rng rng(derive_seed(opt.seed, std::hash<std::string>{}(p.name)));
      try {
        RegularSequenceCertificate cert = find_regular_sequence(fitt, c, rng, opt.regular_sequence_options);
        bool ok = cert.elements.size() == c;
        for (std::size_t i = 0; i < cert.prefix_dimensions.size(); ++i) {
          ok = ok && cert.prefix_dimensions[i] == rec.n - i;
        }
        std::vector<Degree> want = top_degrees(rec.fitting_degrees, c);
        std::vector<Degree> got;
        for (const auto& g : cert.elements) got.push_back(*g.degree());
        std::reverse(want.begin(), want.end());
        ok = ok && got == want;
        // The complete intersection has the expected series.
        FreeModule::Ptr ring = pm.ring;
        GroebnerBasis Gi = reduced_groebner_basis(ring, cert.elements);
        HilbertSeries hs = hilbert_series(initial_module(Gi), std::vector<Degree>{0});
        std::vector<Degree> zero{0};
        ok = ok && hs == hs_regular_sequence(got, zero, rec.n).series;
        top.add("regular_sequence", ok, std::to_string(c) + " elements");
      } catch (const SearchExhausted& e) {
        top.skip("regular_sequence", e.what());
      }
    }
  } else if (!rec.graded) {
    top.skip("regular_sequence", "input is not graded");
  }

  if (rec.D < rec.l) {
    top.skip("bounds", "D < l; the bounds assume D >= l");
    return rec;
  }
  if (rec.graded) {
    // 1 + deg(Q) against the pure-power constant b_1 with the same dimension.
    const Degree Dp = std::max<Degree>(rec.D, 2);
    std::vector<Degree> d = top_degrees(rec.fitting_degrees, c);
    if (d.size() < c) {
      top.skip("cone_degree_within_pure_power", "too few Fitting generators");
    } else {
      try {
        PurePowerResult pp = pure_power_decomposition(d, spec, Dp, 0);
        Degree sum = 0;
        for (Degree x : d) sum += x;
        const Degree rhs = std::max(pp.constants.b[1], sum + rec.l - static_cast<Degree>(rec.n) + 1);
        const Degree lhs = 1 + rec.q_degree.value_or(-1);
        top.add("cone_degree_within_pure_power", lhs <= rhs,
                "1 + deg(Q) = " + std::to_string(lhs) + " <= " + std::to_string(rhs));
      } catch (const LimitExceeded& e) {
        top.skip("cone_degree_within_pure_power", e.what());
      }
    }
  }

  BoundInputs bi;
  bi.n = rec.n;
  bi.m = rec.m;
  bi.r = rec.r;
  bi.generator_degrees = gen_degrees;
  bi.basis_degrees = spec.basis_degrees;
  bi.fitting_degrees = rec.fitting_degrees;
  bi.graded = rec.graded;
  try {
    rec.bounds = bound_report(bi, rec.gb_degree);
    auto v = rec.bounds->violations();
    std::string detail;
    for (const auto& name : v) detail += (detail.empty() ? "" : ", ") + name;
    top.add("bounds", v.empty(), v.empty() ? "" : "violated: " + detail);
  } catch (const LimitExceeded& e) {
    top.skip("bounds", e.what());
  }
  return rec;
}

}  // namespace modgb::cli
