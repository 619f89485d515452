#include "modgb/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "modgb/errors.hpp"

namespace modgb {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

IntPoly shifted(const IntPoly& a, Degree k) {
  if (a.empty()) return {};
  IntPoly r(static_cast<std::size_t>(k), mpz_class(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

IntPoly one_minus_t_pow(std::size_t k) {
  IntPoly r{mpz_class(1)};
  const IntPoly f{mpz_class(1), mpz_class(-1)};
  for (std::size_t i = 0; i < k; ++i) r = mul(r, f);
  return r;
}

mpz_class at_one(const IntPoly& p) {
  mpz_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

std::string poly_to_string(const IntPoly& p, const char* var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    mpz_class c = p[i];
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace

mpz_class binomial(const mpz_class& a, std::size_t k) {
  mpz_class num = 1;
  for (std::size_t i = 0; i < k; ++i) num *= a - static_cast<unsigned long>(i);
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), k);
  return num / den;
}

mpz_class binomial_clamped(const mpz_class& a, std::size_t k) {
  return a < 0 ? mpz_class(0) : binomial(a, k);
}

HilbertSeries HilbertSeries::make(IntPoly numerator, std::size_t denominator) {
  trim(numerator);
  return HilbertSeries{std::move(numerator), denominator};
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries r = *this;
  if (r.numerator.empty()) {
    r.denominator = 0;
    return r;
  }
  while (r.denominator > 0 && at_one(r.numerator) == 0) {
    // Divide by (1 - t): the quotient has the partial sums as coefficients.
    IntPoly q(r.numerator.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < r.numerator.size(); ++i) {
      acc += r.numerator[i];
      q[i] = acc;
    }
    trim(q);
    r.numerator = std::move(q);
    --r.denominator;
  }
  return r;
}

mpz_class HilbertSeries::coefficient(Degree z) const {
  if (z < 0) return 0;
  mpz_class s = 0;
  for (std::size_t i = 0; i < numerator.size() && static_cast<Degree>(i) <= z; ++i) {
    if (numerator[i] == 0) continue;
    const Degree rest = z - static_cast<Degree>(i);
    // Coefficient of t^rest in (1 - t)^-k is C(rest + k - 1, k - 1).
    if (denominator == 0) {
      if (rest == 0) s += numerator[i];
    } else {
      s += numerator[i] * binomial(mpz_class(rest + static_cast<Degree>(denominator) - 1),
                                   denominator - 1);
    }
  }
  return s;
}

std::vector<mpz_class> HilbertSeries::coefficients(Degree upto) const {
  std::vector<mpz_class> out;
  for (Degree z = 0; z <= upto; ++z) out.push_back(coefficient(z));
  return out;
}

std::string HilbertSeries::to_string() const {
  std::string num = poly_to_string(numerator, "t");
  if (denominator == 0) return num;
  std::string den = "(1 - t)";
  if (denominator > 1) den += "^" + std::to_string(denominator);
  return "(" + num + ") / " + den;
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  // a.num (1-t)^b.den == b.num (1-t)^a.den
  return mul(a.numerator, one_minus_t_pow(b.denominator)) ==
         mul(b.numerator, one_minus_t_pow(a.denominator));
}

HilbertPolynomial::HilbertPolynomial(std::vector<mpz_class> coords) : coords_(std::move(coords)) {
  trim(coords_);
}

HilbertPolynomial HilbertPolynomial::interpolate(
    std::size_t max_degree, const std::function<mpz_class(const mpz_class&)>& eval) {
  // With p = sum c_j C(z + j, j), the j-th backward difference at -1 is c_j.
  std::vector<mpz_class> values;
  for (std::size_t s = 0; s <= max_degree; ++s) {
    values.push_back(eval(mpz_class(-1) - static_cast<unsigned long>(s)));
  }
  std::vector<mpz_class> coords;
  for (std::size_t j = 0; j <= max_degree; ++j) {
    mpz_class c = 0;
    for (std::size_t s = 0; s <= j; ++s) {
      mpz_class term = binomial(mpz_class(static_cast<unsigned long>(j)), s) * values[s];
      if (s % 2) c -= term;
      else c += term;
    }
    coords.push_back(c);
  }
  return HilbertPolynomial(std::move(coords));
}

std::optional<std::size_t> HilbertPolynomial::degree() const {
  if (coords_.empty()) return std::nullopt;
  return coords_.size() - 1;
}

mpz_class HilbertPolynomial::operator()(const mpz_class& z) const {
  mpz_class s = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j] != 0) s += coords_[j] * binomial(z + static_cast<unsigned long>(j), j);
  }
  return s;
}

std::vector<mpq_class> HilbertPolynomial::monomial_coefficients() const {
  std::vector<mpq_class> out(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    // C(z + j, j) = (z + 1)(z + 2)...(z + j) / j!
    std::vector<mpq_class> p{mpq_class(1)};
    for (std::size_t k = 1; k <= j; ++k) {
      std::vector<mpq_class> next(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i] += p[i] * static_cast<unsigned long>(k);
        next[i + 1] += p[i];
      }
      p = std::move(next);
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), j);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] += coords_[j] * p[i] / fact;
  }
  for (auto& c : out) c.canonicalize();
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string HilbertPolynomial::to_string() const {
  auto c = monomial_coefficients();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    v = abs(v);
    if (i == 0) {
      os << v;
      continue;
    }
    if (v != 1) os << v << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

mpz_class hf_enumerate(const MonomialSubmodule& M, std::span<const Degree> basis_degrees,
                       Degree z) {
  mpz_class count = 0;
  for (std::uint32_t j = 0; j < M.rank(); ++j) {
    const Degree d = z - basis_degrees[j];
    if (d < 0) continue;
    for (const auto& mono : monomials_of_degree(M.num_vars, d)) {
      if (!any_divides(M.gens[j], mono)) ++count;
    }
  }
  return count;
}

namespace {

/// Numerator K with HS(S/I) = K / (1 - t)^n, by K(B) = K(B') - t^deg(m) K(B' : m)
/// where B = B' + {m}.
IntPoly ideal_numerator(std::vector<Monomial> B) {
  B = minimalize(std::move(B));
  if (B.empty()) return {mpz_class(1)};
  // Pure-power-free product shortcut: pairwise coprime generators.
  bool coprime = true;
  for (std::size_t i = 0; i < B.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < B.size() && coprime; ++j) {
      coprime = B[i].gcd(B[j]).is_one();
    }
  }
  if (coprime) {
    IntPoly r{mpz_class(1)};
    for (const auto& m : B) {
      IntPoly f(static_cast<std::size_t>(m.degree()) + 1, mpz_class(0));
      f[0] = 1;
      f.back() -= 1;
      r = mul(r, f);
    }
    return r;
  }
  // Pivot on the generator of largest degree.
  auto it = std::max_element(B.begin(), B.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  Monomial m = *it;
  B.erase(it);
  std::vector<Monomial> colon;
  for (const auto& b : B) colon.push_back(b.colon(m));
  IntPoly without = ideal_numerator(B);
  IntPoly quotient = ideal_numerator(std::move(colon));
  IntPoly neg = shifted(quotient, m.degree());
  for (auto& c : neg) c = -c;
  return add(without, neg);
}

}  // namespace

HilbertSeries hilbert_series(const MonomialSubmodule& M, std::span<const Degree> basis_degrees) {
  IntPoly num;
  for (std::uint32_t j = 0; j < M.rank(); ++j) {
    num = add(num, shifted(ideal_numerator(M.gens[j]), basis_degrees[j]));
  }
  return HilbertSeries::make(std::move(num), M.num_vars);
}

HilbertSeries hs_from_cones(std::span<const Cone> cones, std::size_t num_vars) {
  IntPoly num;
  for (const auto& c : cones) {
    if (c.dimension() > num_vars) throw StructuralError("cone has more variables than the ring");
    num = add(num, shifted(one_minus_t_pow(num_vars - c.dimension()), c.degree));
  }
  return HilbertSeries::make(std::move(num), num_vars);
}

RegularSequenceSeries hs_regular_sequence(std::span<const Degree> d,
                                          std::span<const Degree> basis_degrees,
                                          std::size_t num_vars) {
  if (d.size() > num_vars) throw InvalidInput("a regular sequence has at most n elements");
  IntPoly num;
  Degree l = 0;
  for (Degree e : basis_degrees) {
    if (e < 0) throw InvalidInput("basis degrees must be non-negative");
    num = add(num, shifted(IntPoly{mpz_class(1)}, e));
    l = std::max(l, e);
  }
  Degree sum = 0;
  for (Degree di : d) {
    if (di < 1) throw InvalidInput("regular sequence degrees must be positive");
    IntPoly f(static_cast<std::size_t>(di) + 1, mpz_class(0));
    f[0] = 1;
    f.back() -= 1;
    num = mul(num, f);
    sum += di;
  }
  return {HilbertSeries::make(std::move(num), num_vars),
          sum + l - static_cast<Degree>(num_vars) + 1};
}

HilbertData hp_and_regularity(const HilbertSeries& hs) {
  HilbertSeries r = hs.reduced();
  if (r.is_zero()) return {};
  const std::size_t k = r.denominator;
  const Degree g = static_cast<Degree>(r.numerator.size()) - 1;
  HilbertData out;
  if (k > 0) {
    const IntPoly& num = r.numerator;
    out.polynomial = HilbertPolynomial::interpolate(k - 1, [&](const mpz_class& z) {
      mpz_class s = 0;
      for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] != 0) {
          s += num[i] * binomial(z - static_cast<unsigned long>(i) + (k - 1), k - 1);
        }
      }
      return s;
    });
  }
  out.regularity = std::max<Degree>(0, g - static_cast<Degree>(k) + 1);
  return out;
}

std::size_t dimension(const HilbertSeries& hs) {
  HilbertSeries r = hs.reduced();
  if (r.is_zero()) throw ImproperSubmodule();
  return r.denominator;
}

}  // namespace modgb
