#include "modgb/module_element.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modgb/errors.hpp"

namespace modgb {

namespace {

/// Merges two descending term lists; `sign_b` is applied to b's coefficients.
std::vector<Term> merge(const FreeModule& F, std::span<const Term> a, std::span<const Term> b,
                        bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto c = F.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(negate_b ? Term{-b[j].coeff, b[j].monomial} : b[j]);
      ++j;
    } else {
      Scalar s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(s), a[i].monomial});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(negate_b ? Term{-b[j].coeff, b[j].monomial} : b[j]);
  return out;
}

void check_term(const FreeModule& F, const Term& t) {
  if (t.monomial.mono.num_vars() != F.num_vars() || t.monomial.position >= F.rank()) {
    throw StructuralError("term does not belong to the ambient free module");
  }
  if (t.coeff.field() != F.field()) throw StructuralError("coefficient from a different field");
}

}  // namespace

ModuleElement::ModuleElement(FreeModule::Ptr ambient) : ambient_(std::move(ambient)) {}

ModuleElement::ModuleElement(FreeModule::Ptr ambient, std::vector<Term> sorted_terms)
    : ambient_(std::move(ambient)), terms_(std::move(sorted_terms)) {}

ModuleElement ModuleElement::from_terms(FreeModule::Ptr ambient, std::vector<Term> terms) {
  const FreeModule& F = *ambient;
  for (const auto& t : terms) check_term(F, t);
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return F.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return ModuleElement(std::move(ambient), std::move(out));
}

ModuleElement ModuleElement::monomial(FreeModule::Ptr ambient, Scalar coeff, ModuleMonomial m) {
  std::vector<Term> t;
  t.push_back(Term{std::move(coeff), std::move(m)});
  return from_terms(std::move(ambient), std::move(t));
}

ModuleElement ModuleElement::basis(FreeModule::Ptr ambient, std::uint32_t position) {
  Monomial one(ambient->num_vars());
  Scalar c = Scalar::one(ambient->field());
  return monomial(std::move(ambient), std::move(c), ModuleMonomial{std::move(one), position});
}

ModuleElement ModuleElement::tail() const {
  if (terms_.empty()) return *this;
  return ModuleElement(ambient_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

std::optional<Degree> ModuleElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  Degree d = ambient_->degree(terms_.front().monomial);
  for (const auto& t : terms_) d = std::max(d, ambient_->degree(t.monomial));
  return d;
}

bool ModuleElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Degree d = ambient_->degree(terms_.front().monomial);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ambient_->degree(t.monomial) == d; });
}

ModuleElement ModuleElement::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return ModuleElement(ambient_, std::move(out));
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  require_same_ambient(*a.ambient_, *b.ambient_);
  return ModuleElement(a.ambient_, merge(*a.ambient_, a.terms_, b.terms_, false));
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  require_same_ambient(*a.ambient_, *b.ambient_);
  return ModuleElement(a.ambient_, merge(*a.ambient_, a.terms_, b.terms_, true));
}

ModuleElement operator*(const Scalar& c, const ModuleElement& f) {
  if (c.field() != f.ambient_->field()) throw StructuralError("scalar from a different field");
  if (c.is_zero()) return ModuleElement(f.ambient_);
  std::vector<Term> out = f.terms_;
  for (auto& t : out) t.coeff = c * t.coeff;
  return ModuleElement(f.ambient_, std::move(out));
}

ModuleElement ModuleElement::mono_mul(const Monomial& a) const {
  if (a.num_vars() != ambient_->num_vars()) throw StructuralError("monomial has wrong arity");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.monomial.mono = t.monomial.mono * a;
  return ModuleElement(ambient_, std::move(out));
}

ModuleElement ModuleElement::term_mul(const Scalar& c, const Monomial& a) const {
  if (c.is_zero()) return ModuleElement(ambient_);
  std::vector<Term> out = terms_;
  for (auto& t : out) {
    t.coeff = c * t.coeff;
    t.monomial.mono = t.monomial.mono * a;
  }
  return ModuleElement(ambient_, std::move(out));
}

ModuleElement ModuleElement::monic() const {
  if (terms_.empty() || leading_coefficient().is_one()) return *this;
  return leading_coefficient().inverse() * *this;
}

ModuleElement ModuleElement::primitive() const {
  if (terms_.empty() || !ambient_->field().is_rational()) return monic();
  mpz_class den = 1;
  for (const auto& t : terms_) den = lcm(den, t.coeff.rational().get_den());
  mpz_class content = 0;
  for (const auto& t : terms_) {
    mpz_class num = t.coeff.rational().get_num() * (den / t.coeff.rational().get_den());
    content = gcd(content, num);
  }
  mpq_class scale(den, content);
  if (sgn(leading_coefficient().rational()) < 0) scale = -scale;
  scale.canonicalize();
  if (scale == 1) return *this;
  return Scalar::from_rational(ambient_->field(), scale) * *this;
}

ModuleElement ModuleElement::in_ambient(FreeModule::Ptr other) const {
  if (other->spec() != ambient_->spec()) throw StructuralError("ambients have different specs");
  std::vector<Term> t = terms_;
  return from_terms(std::move(other), std::move(t));
}

std::string ModuleElement::to_string() const {
  if (terms_.empty()) return "0";
  const auto& spec = ambient_->spec();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const std::string& basis = spec.basis_names[t.monomial.position];
    const bool unit = c == "1";
    if (!unit) factors.push_back(c);
    for (std::size_t i = 0; i < t.monomial.mono.num_vars(); ++i) {
      const Exponent e = t.monomial.mono[i];
      if (e == 0) continue;
      factors.push_back(e == 1 ? spec.variables[i]
                               : spec.variables[i] + "^" + std::to_string(e));
    }
    if (!basis.empty()) factors.push_back(basis);
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return a.ambient_->same_as(*b.ambient_) && a.terms_ == b.terms_;
}

std::vector<std::pair<Degree, ModuleElement>> homogeneous_components(const ModuleElement& f) {
  std::map<Degree, std::vector<Term>> parts;
  for (const auto& t : f.terms()) parts[f.ambient()->degree(t.monomial)].push_back(t);
  std::vector<std::pair<Degree, ModuleElement>> out;
  for (auto& [d, terms] : parts) {
    out.emplace_back(d, ModuleElement::from_terms(f.ambient(), std::move(terms)));
  }
  return out;
}

namespace {

void check_ring(const ModuleElement& poly, const FreeModule& F) {
  const auto& r = poly.ambient()->spec();
  if (poly.ambient()->rank() != 1 || r.variables != F.spec().variables || r.field != F.field()) {
    throw StructuralError("polynomial does not live over the module's ring");
  }
}

}  // namespace

ModuleElement multiply(const ModuleElement& poly, const ModuleElement& f) {
  check_ring(poly, *f.ambient());
  ModuleElement acc(f.ambient());
  for (const auto& t : poly.terms()) acc = acc + f.term_mul(t.coeff, t.monomial.mono);
  return acc;
}

ModuleElement embed(const ModuleElement& poly, const FreeModule::Ptr& target,
                    std::uint32_t position) {
  check_ring(poly, *target);
  if (position >= target->rank()) throw StructuralError("basis position out of range");
  std::vector<Term> terms;
  terms.reserve(poly.size());
  for (const auto& t : poly.terms()) terms.push_back(Term{t.coeff, {t.monomial.mono, position}});
  return ModuleElement::from_terms(target, std::move(terms));
}

ModuleElement component(const ModuleElement& f, const FreeModule::Ptr& ring,
                        std::uint32_t position) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial.position == position) terms.push_back(Term{t.coeff, {t.monomial.mono, 0}});
  }
  return ModuleElement::from_terms(ring, std::move(terms));
}

ModuleElement divide_exact(const ModuleElement& dividend, const ModuleElement& divisor) {
  if (divisor.is_zero()) throw InvalidInput("division by the zero polynomial");
  require_same_ambient(*dividend.ambient(), *divisor.ambient());
  const auto& F = dividend.ambient();
  ModuleElement quotient(F);
  ModuleElement rest = dividend;
  const auto& lead = divisor.leading_term();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!lead.monomial.divides(lt.monomial)) throw InvalidInput("polynomial division is not exact");
    Monomial q = lead.monomial.mono.quotient_of(lt.monomial.mono);
    Scalar c = lt.coeff / lead.coeff;
    quotient = quotient + ModuleElement::monomial(F, c, ModuleMonomial{q, 0});
    rest = rest - divisor.term_mul(c, q);
  }
  return quotient;
}

}  // namespace modgb
