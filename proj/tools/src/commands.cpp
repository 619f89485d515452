#include "modgb_cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "modgb/modgb.hpp"

namespace modgb::cli {

namespace {

Json big(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  const std::size_t digits = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (digits <= 1000) return v.get_str();
  return "about 10^" + std::to_string(digits - 1);
}

std::string big_text(const mpz_class& v) {
  const std::size_t digits = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (digits <= 40) return v.get_str();
  std::string s = v.get_str();
  return s.substr(0, 1) + "." + s.substr(1, 3) + "e" + std::to_string(s.size() - 1);
}

Json opt_degree(std::optional<Degree> d) { return d ? Json(*d) : Json(nullptr); }

struct Analysis {
  GroebnerBasis G;
  MonomialSubmodule in;
  std::size_t r = 0;
  bool graded = true;
  Degree D = 0;
  std::vector<Degree> generator_degrees;
  std::vector<ModuleElement> gens;
};

Analysis analyse(const Problem& p) {
  Analysis a;
  for (const auto& g : p.gens) {
    if (g.is_zero()) continue;
    a.gens.push_back(g);
    a.generator_degrees.push_back(*g.degree());
    a.D = std::max(a.D, *g.degree());
    a.graded = a.graded && g.is_homogeneous();
  }
  a.G = reduced_groebner_basis(p.ambient, a.gens);
  a.in = initial_module(a.G);
  if (a.in.is_full()) throw ImproperSubmodule();
  a.r = dimension(hilbert_series(a.in, p.ambient->spec().basis_degrees));
  return a;
}

Json cones_json(const std::vector<Cone>& cones, const FreeModuleSpec& spec) {
  Json arr = Json::array();
  for (const auto& c : cones) {
    Json vars = Json::array();
    for (std::size_t i = 0; i < spec.num_vars(); ++i) {
      if (c.vars & (VarSet{1} << i)) vars.push_back(spec.variables[i]);
    }
    arr.push_back(Json{{"cone", c.to_string(spec)}, {"degree", c.degree},
                       {"dimension", c.dimension()}, {"variables", vars}});
  }
  return arr;
}

Json constants_json(const MacaulayConstants& c) {
  return Json{{"b", c.b}, {"q", c.q}};
}

std::string constants_text(const MacaulayConstants& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.b.size(); ++i) s += (i ? "," : "") + std::to_string(c.b[i]);
  return s + ")";
}

std::vector<Degree> top_degrees(std::vector<Degree> d, std::size_t k) {
  std::sort(d.begin(), d.end(), std::greater<>());
  d.resize(std::min(k, d.size()));
  return d;
}

std::vector<Degree> fitting_degrees(const std::vector<ModuleElement>& fitt) {
  std::vector<Degree> d;
  for (const auto& f : fitt) d.push_back(*f.degree());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

void emit(const Json& j, const CommandOptions& options, std::ostream& out) {
  if (options.json) out << j.dump(2) << '\n';
}

Json header(const Problem& p, const std::string& command) {
  return Json{{"schema", 1}, {"command", command}, {"name", p.name}};
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"name", e.name}, {"value", e.value ? big(*e.value) : Json(nullptr)}};
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(j);
  }
  return Json{{"actual_degree", opt_degree(r.actual_degree)},
              {"entries", entries},
              {"violations", r.violations()}};
}

Json to_json(const VerifyRecord& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return Json{{"name", r.name},
              {"graded", r.graded},
              {"n", r.n},
              {"m", r.m},
              {"r", r.r},
              {"D", r.D},
              {"l", r.l},
              {"gb_degree", opt_degree(r.gb_degree)},
              {"gb_size", r.gb_size},
              {"q_degree", opt_degree(r.q_degree)},
              {"constants", r.constants ? constants_json(*r.constants) : Json(nullptr)},
              {"fitting_degrees", r.fitting_degrees},
              {"bounds", r.bounds ? to_json(*r.bounds) : Json(nullptr)},
              {"passed", r.passed()},
              {"checks", checks}};
}

Json cmd_gb(const Problem& p, const CommandOptions& options, std::ostream& out) {
  Analysis a = analyse(p);
  Json j = header(p, "gb");
  Json elems = Json::array();
  for (const auto& g : a.G.elements) {
    elems.push_back(Json{{"element", g.to_string()}, {"degree", opt_degree(g.degree())}});
  }
  j["order"] = to_string(p.ambient->order().ring) + ", " + to_string(p.ambient->order().position);
  j["degree"] = opt_degree(a.G.degree());
  j["elements"] = elems;
  if (options.json) {
    emit(j, options, out);
  } else {
    out << "reduced Groebner basis (" << a.G.elements.size() << " elements, degree "
        << (a.G.degree() ? std::to_string(*a.G.degree()) : "undefined") << ")\n";
    for (const auto& g : a.G.elements) out << "  " << g.to_string() << '\n';
  }
  return j;
}

Json cmd_decompose(const Problem& p, const CommandOptions& options, std::ostream& out) {
  Analysis a = analyse(p);
  const auto& spec = p.ambient->spec();
  ConeDecomposition Q = decompose_normal_forms(a.in, spec.basis_degrees);
  ConeDecomposition P = exact(Q);
  Json j = header(p, "decompose");
  j["graded"] = a.graded;
  j["Q"] = Json{{"q", Q.q}, {"degree", opt_degree(Q.degree())}, {"cones", cones_json(Q.cones, spec)}};
  j["exact"] = Json{{"q", P.q}, {"degree", opt_degree(P.degree())}, {"cones", cones_json(P.cones, spec)}};
  if (options.json) {
    emit(j, options, out);
    return j;
  }
  if (!a.graded) out << "note: generators are not homogeneous; decomposing in(M)\n";
  auto print = [&](const char* title, const ConeDecomposition& C) {
    out << title << " (q = " << C.q << ", degree "
        << (C.degree() ? std::to_string(*C.degree()) : "undefined") << ", " << C.cones.size()
        << " cones)\n";
    for (const auto& c : C.cones) {
      out << "  " << std::left << std::setw(24) << c.to_string(spec) << " degree " << c.degree
          << ", dim " << c.dimension() << '\n';
    }
  };
  print("normal-form decomposition Q", Q);
  print("exact decomposition", P);
  return j;
}

Json cmd_macaulay(const Problem& p, const CommandOptions& options, std::ostream& out) {
  Analysis a = analyse(p);
  const auto& spec = p.ambient->spec();
  const std::size_t n = spec.num_vars();
  const Degree l = spec.max_basis_degree();
  Json j = header(p, "macaulay");
  j["r"] = a.r;

  // Route 1: normal-form decomposition lifted to q = max(D, l), then EXACT.
  std::optional<MacaulayConstants> direct;
  std::string direct_note;
  {
    ConeDecomposition Q = decompose_normal_forms(a.in, spec.basis_degrees);
    try {
      if (Q.has_positive_part()) Q = lift_to_d_standard(Q, std::max(a.D, l));
      direct = macaulay_constants(exact(Q), n);
    } catch (const Error& e) {
      direct_note = e.what();
    }
  }
  j["exact_route"] = direct ? constants_json(*direct) : Json{{"note", direct_note}};

  // Route 2: pure-power module on the top n - r Fitting degrees.
  std::optional<MacaulayConstants> pure;
  std::string pure_note;
  Degree Dp = std::max<Degree>({2, a.D, l});
  if (!a.graded) {
    pure_note = "generators are not homogeneous";
  } else {
    auto fd = fitting_degrees(fitting0(presentation(p.ambient, a.gens), true));
    auto d = top_degrees(fd, n - a.r);
    if (d.size() < n - a.r) {
      pure_note = "too few Fitting generators";
    } else {
      try {
        pure = pure_power_decomposition(d, spec, Dp).constants;
        j["pure_power_degrees"] = d;
      } catch (const Error& e) {
        pure_note = e.what();
      }
    }
  }
  j["pure_power_route"] = pure ? constants_json(*pure) : Json{{"note", pure_note}};
  std::optional<bool> agree;
  if (direct && pure) {
    agree = std::equal(direct->b.begin() + 1, direct->b.end(), pure->b.begin() + 1, pure->b.end());
  }
  j["routes_agree"] = agree ? Json(*agree) : Json(nullptr);
  if (options.json) {
    emit(j, options, out);
    return j;
  }
  out << "dimension r = " << a.r << '\n';
  if (direct) {
    out << "exact route:      b = " << constants_text(*direct) << "  (q = " << direct->q << ")\n";
  } else {
    out << "exact route:      unavailable: " << direct_note << '\n';
  }
  if (pure) {
    out << "pure-power route: b = " << constants_text(*pure) << "  (q = " << pure->q << ")\n";
  } else {
    out << "pure-power route: unavailable: " << pure_note << '\n';
  }
  if (agree) out << "b_1..b_" << n + 1 << (*agree ? " agree\n" : " differ\n");
  return j;
}

Json cmd_hilbert(const Problem& p, const CommandOptions& options, std::ostream& out) {
  Analysis a = analyse(p);
  const auto& spec = p.ambient->spec();
  HilbertSeries hs = hilbert_series(a.in, spec.basis_degrees).reduced();
  HilbertData hd = hp_and_regularity(hs);
  const Degree upto = options.zmax.value_or(std::max<Degree>(hd.regularity + 3, 5));
  Json values = Json::array();
  for (const auto& v : hs.coefficients(upto)) values.push_back(big(v));
  Json j = header(p, "hilbert");
  j["graded"] = a.graded;
  j["series"] = hs.to_string();
  j["polynomial"] = hd.polynomial.to_string();
  j["regularity"] = hd.regularity;
  j["dimension"] = a.r;
  j["values"] = values;
  if (options.json) {
    emit(j, options, out);
    return j;
  }
  if (!a.graded) out << "note: generators are not homogeneous; using in(M)\n";
  out << "HS(z)      = " << hs.to_string() << '\n'
      << "HP(z)      = " << hd.polynomial.to_string() << '\n'
      << "regularity = " << hd.regularity << '\n'
      << "dimension  = " << a.r << '\n'
      << "HF(0.." << upto << ") =";
  for (const auto& v : hs.coefficients(upto)) out << ' ' << v.get_str();
  out << '\n';
  return j;
}

Json cmd_fitting(const Problem& p, const CommandOptions& options, std::ostream& out) {
  Analysis a = analyse(p);
  PresentationMatrix pm = presentation(p.ambient, a.gens);
  std::vector<ModuleElement> fitt = fitting0(pm, true);
  Json gens = Json::array();
  for (const auto& f : fitt) gens.push_back(Json{{"element", f.to_string()}, {"degree", *f.degree()}});
  Json j = header(p, "fitting");
  j["matrix"] = Json{{"rows", pm.rows}, {"cols", pm.cols}};
  j["generators"] = gens;
  j["degrees"] = fitting_degrees(fitt);
  if (options.json) {
    emit(j, options, out);
    return j;
  }
  out << "Fitt_0 from a " << pm.rows << "x" << pm.cols << " presentation, " << fitt.size()
      << " generators\n";
  for (const auto& f : fitt) out << "  " << f.to_string() << "  (degree " << *f.degree() << ")\n";
  return j;
}

Json cmd_bounds(const Problem& p, const CommandOptions& options, std::ostream& out) {
  Analysis a = analyse(p);
  const auto& spec = p.ambient->spec();
  BoundInputs bi;
  bi.n = spec.num_vars();
  bi.m = spec.rank();
  bi.r = a.r;
  bi.generator_degrees = a.generator_degrees;
  bi.basis_degrees = spec.basis_degrees;
  bi.fitting_degrees = fitting_degrees(fitting0(presentation(p.ambient, a.gens), true));
  bi.graded = a.graded;
  BoundReport rep = bound_report(bi, a.G.degree());
  Json j = header(p, "bounds");
  j["graded"] = a.graded;
  j["n"] = bi.n;
  j["m"] = bi.m;
  j["r"] = bi.r;
  j["D"] = bi.D();
  j["l"] = bi.l();
  j["report"] = to_json(rep);
  if (options.json) {
    emit(j, options, out);
    return j;
  }
  out << "n = " << bi.n << ", m = " << bi.m << ", r = " << bi.r << ", D = " << bi.D()
      << ", l = " << bi.l() << (a.graded ? ", graded" : ", not graded") << '\n';
  out << std::left << std::setw(28) << "actual degree"
      << (a.G.degree() ? std::to_string(*a.G.degree()) : "undefined") << '\n';
  for (const auto& e : rep.entries) {
    out << std::left << std::setw(28) << e.name;
    if (e.value) {
      out << big_text(*e.value);
      if (a.G.degree() && *e.value < *a.G.degree()) out << "  VIOLATED";
    } else {
      out << "n/a (" << e.note << ")";
    }
    out << '\n';
  }
  return j;
}

int cmd_verify(const std::vector<Problem>& problems, const CommandOptions& options,
               std::ostream& out) {
  VerifyOptions vo;
  vo.zmax = options.zmax;
  vo.seed = options.seed;
  Json instances = Json::array();
  std::size_t failed = 0;
  std::size_t skipped = 0;
  for (const auto& p : problems) {
    VerifyRecord r = verify_problem(p, vo);
    failed += r.passed() ? 0 : 1;
    skipped += r.count(CheckStatus::skip);
    if (options.json) {
      instances.push_back(to_json(r));
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  " << (r.graded ? "graded" : "nongraded")
        << " n=" << r.n << " m=" << r.m << " r=" << r.r << " D=" << r.D << " l=" << r.l
        << " deg(G)=" << (r.gb_degree ? std::to_string(*r.gb_degree) : "-")
        << " deg(Q)=" << (r.q_degree ? std::to_string(*r.q_degree) : "-") << "  ("
        << r.count(CheckStatus::pass) << " pass, " << r.count(CheckStatus::skip) << " skip)\n";
    for (const auto& c : r.checks) {
      if (c.status == CheckStatus::pass) continue;
      out << "    " << to_string(c.status) << ' ' << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
  }
  if (options.json) {
    Json j{{"schema", 1},
           {"command", "verify"},
           {"instances", instances},
           {"summary",
            Json{{"count", problems.size()}, {"failed", failed}, {"skipped_checks", skipped}}}};
    out << j.dump(2) << '\n';
  } else {
    out << problems.size() - failed << "/" << problems.size() << " instances passed, " << skipped
        << " checks skipped\n";
  }
  return failed == 0 ? kPass : kViolation;
}

}  // namespace modgb::cli
