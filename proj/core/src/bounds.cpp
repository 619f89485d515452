#include "modgb/bounds.hpp"

#include <algorithm>
#include <functional>

#include "modgb/errors.hpp"

namespace modgb {

namespace {

constexpr std::uint64_t kMaxResultBits = std::uint64_t{1} << 24;

std::vector<Degree> sorted_desc(std::vector<Degree> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// x^e, refusing results beyond kMaxResultBits.
mpz_class checked_pow(const mpz_class& x, const mpz_class& e) {
  if (x == 0) return e == 0 ? 1 : 0;
  if (x == 1) return 1;
  const std::uint64_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (!e.fits_ulong_p() || mpz_class(e * bits) > mpz_class(static_cast<unsigned long>(kMaxResultBits))) {
    throw LimitExceeded("bound value exceeds the supported size");
  }
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e.get_ui());
  return r;
}

mpz_class pow2(std::uint64_t k) {
  if (k >= 64) throw LimitExceeded("bound exponent exceeds the supported size");
  return mpz_class(static_cast<unsigned long>(std::uint64_t{1} << k));
}

mpz_class product(std::span<const Degree> d) {
  mpz_class p = 1;
  for (Degree x : d) p *= static_cast<long>(x);
  return p;
}

}  // namespace

Degree BoundInputs::D() const {
  Degree d = 0;
  for (Degree x : generator_degrees) d = std::max(d, x);
  return d;
}

Degree BoundInputs::l() const {
  Degree d = 0;
  for (Degree x : basis_degrees) d = std::max(d, x);
  return d;
}

void BoundInputs::validate() const {
  if (n == 0) throw InvalidInput("bounds need at least one variable");
  if (r > n) throw InvalidInput("dimension exceeds the number of variables");
  if (basis_degrees.size() != m) throw InvalidInput("basis degree count differs from the rank");
  for (Degree x : basis_degrees) {
    if (x < 0) throw InvalidInput("basis degrees must be non-negative");
  }
  for (Degree x : generator_degrees) {
    if (x < 0) throw InvalidInput("generator degrees must be non-negative");
  }
  if (D() < l()) {
    throw InvalidInput("the bounds assume D >= l; drop the basis elements of degree above D, "
                       "which no generator reaches");
  }
}

mpz_class doubled_half_power(const mpz_class& x, std::uint64_t k) {
  const mpz_class e = pow2(k);
  if (x % 2 == 0) return 2 * checked_pow(mpz_class(x / 2), e);
  // 2 (x/2)^e = x^e / 2^(e-1), rounded up.
  mpz_class num = checked_pow(x, e);
  mpz_class den = checked_pow(mpz_class(2), mpz_class(e - 1));
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::optional<mpz_class> bound_graded_fitting(const BoundInputs& in) {
  in.validate();
  if (!in.fitting_degrees) return std::nullopt;
  const auto d = sorted_desc(*in.fitting_degrees);
  const std::size_t need = in.r == 0 ? in.n : in.n - in.r;
  if (d.size() < need) return std::nullopt;
  if (in.r == 0) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < in.n; ++i) s += static_cast<long>(d[i]);
    return s + static_cast<long>(in.l()) - static_cast<long>(in.n) + 1;
  }
  mpz_class inner = product(std::span(d).first(need)) * static_cast<unsigned long>(in.m) +
                    static_cast<long>(in.D());
  return doubled_half_power(inner, in.r - 1);
}

GradedBound bound_graded(const BoundInputs& in) {
  in.validate();
  const mpz_class Dm = mpz_class(static_cast<long>(in.D())) * static_cast<unsigned long>(in.m);
  std::optional<mpz_class> shift;
  const auto g = sorted_desc(in.generator_degrees);
  if (g.size() >= in.m) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < in.m; ++i) s += static_cast<long>(g[i]);
    for (Degree e : in.basis_degrees) s -= static_cast<long>(e);
    shift = s;
  }
  GradedBound out;
  const long n = static_cast<long>(in.n);
  if (in.r == 0) {
    out.coarse = Dm * n - n + 1;
    if (shift) out.sharp = *shift * n + static_cast<long>(in.l()) - n + 1;
    return out;
  }
  const mpz_class e(static_cast<unsigned long>(in.n - in.r));
  const mpz_class D(static_cast<long>(in.D()));
  const auto m = static_cast<unsigned long>(in.m);
  out.coarse = doubled_half_power(checked_pow(Dm, e) * m + D, in.r - 1);
  if (shift) out.sharp = doubled_half_power(checked_pow(*shift, e) * m + D, in.r - 1);
  return out;
}

mpz_class bound_graded_dimfree(const BoundInputs& in) {
  in.validate();
  const mpz_class Dm = mpz_class(static_cast<long>(in.D())) * static_cast<unsigned long>(in.m);
  return 2 * checked_pow(Dm, pow2(in.n - 1));
}

std::optional<mpz_class> bound_nongraded_fitting(const BoundInputs& in) {
  in.validate();
  if (!in.fitting_degrees) return std::nullopt;
  const auto d = sorted_desc(*in.fitting_degrees);
  const std::size_t need = in.n - in.r;
  if (d.size() < need) return std::nullopt;
  mpz_class p = product(std::span(d).first(need));
  mpz_class inner = checked_pow(p, mpz_class(static_cast<unsigned long>(need))) *
                        static_cast<unsigned long>(in.m) +
                    static_cast<long>(in.D());
  return doubled_half_power(inner, in.r);
}

mpz_class bound_nongraded(const BoundInputs& in) {
  in.validate();
  const mpz_class Dm = mpz_class(static_cast<long>(in.D())) * static_cast<unsigned long>(in.m);
  const auto c = static_cast<unsigned long>(in.n - in.r);
  mpz_class inner = checked_pow(Dm, mpz_class(c * c)) * static_cast<unsigned long>(in.m) +
                    static_cast<long>(in.D());
  return doubled_half_power(inner, in.r);
}

mpz_class bound_nongraded_dimfree(const BoundInputs& in) {
  in.validate();
  const mpz_class Dm = mpz_class(static_cast<long>(in.D())) * static_cast<unsigned long>(in.m);
  return 2 * checked_pow(Dm, pow2(in.n));
}

std::optional<MayrRitscherBound> bound_mayr_ritscher(const BoundInputs& in) {
  in.validate();
  if (in.m != 1 || in.basis_degrees.front() != 0) return std::nullopt;
  const auto d = sorted_desc(in.generator_degrees);
  const std::size_t c = in.n - in.r;
  if (d.size() < c || d.empty()) return std::nullopt;
  const mpz_class p = product(std::span(d).first(c));
  const mpz_class d1(static_cast<long>(d.front()));
  MayrRitscherBound out;
  out.general =
      doubled_half_power(checked_pow(p, mpz_class(static_cast<unsigned long>(2 * c))) + d1, in.r);
  if (in.r >= 1) out.homogeneous = doubled_half_power(p + d1, in.r - 1);
  return out;
}

mpz_class pure_power_constant_bound(std::span<const Degree> d, std::size_t m, Degree D,
                                    std::size_t r, std::size_t k) {
  if (k < 1 || k > r) throw InvalidInput("constant index must lie in 1..r");
  return doubled_half_power(product(d) * static_cast<unsigned long>(m) + static_cast<long>(D),
                            r - k);
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<std::string> BoundReport::violations() const {
  std::vector<std::string> out;
  if (!actual_degree) return out;
  for (const auto& e : entries) {
    if (e.value && *e.value < static_cast<long>(*actual_degree)) out.push_back(e.name);
  }
  return out;
}

BoundReport bound_report(const BoundInputs& in, std::optional<Degree> actual_degree) {
  in.validate();
  BoundReport rep;
  rep.actual_degree = actual_degree;
  auto add = [&](std::string name, std::optional<mpz_class> v, std::string note) {
    rep.entries.push_back(BoundEntry{std::move(name), std::move(v), v ? "" : std::move(note)});
  };
  const std::string not_graded = "generators are not homogeneous";
  if (in.graded) {
    add("graded_fitting", bound_graded_fitting(in), "Fitting degrees unavailable");
    GradedBound g = bound_graded(in);
    add("graded_sharp", g.sharp, "fewer than m generators");
    add("graded", g.coarse, "");
    add("graded_dimfree", bound_graded_dimfree(in), "");
  } else {
    for (const char* name : {"graded_fitting", "graded_sharp", "graded", "graded_dimfree"}) {
      add(name, std::nullopt, not_graded);
    }
  }
  add("nongraded_fitting", bound_nongraded_fitting(in), "Fitting degrees unavailable");
  add("nongraded", bound_nongraded(in), "");
  add("nongraded_dimfree", bound_nongraded_dimfree(in), "");
  auto mr = bound_mayr_ritscher(in);
  const std::string mr_note = "only for ideals (m = 1, deg e_1 = 0)";
  add("mayr_ritscher", mr ? std::optional(mr->general) : std::nullopt, mr_note);
  std::optional<mpz_class> mr_h;
  std::string mr_h_note = mr_note;
  if (mr && !in.graded) {
    mr_h_note = not_graded;
  } else if (mr && in.r == 0) {
    mr_h_note = "needs r >= 1";
  } else if (mr) {
    mr_h = mr->homogeneous;
  }
  add("mayr_ritscher_homogeneous", mr_h, mr_h_note);
  return rep;
}

}  // namespace modgb
