#include "modgb/monomial.hpp"

#include <algorithm>
#include <limits>

#include "modgb/errors.hpp"

namespace modgb {

namespace {

Degree sum(const std::vector<Exponent>& e) {
  Degree d = 0;
  for (Exponent x : e) d += x;
  return d;
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw LimitExceeded("monomial exponent overflow");
  }
  return a + b;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}

Monomial::Monomial(std::vector<Exponent> exponents)
    : exps_(std::move(exponents)), degree_(sum(exps_)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

VarSet Monomial::support() const {
  VarSet s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s |= VarSet{1} << i;
  }
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::times_variable(std::size_t var, Exponent power) const {
  Monomial r(*this);
  r.exps_[var] = checked_add(r.exps_[var], power);
  r.degree_ += power;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  r.degree_ -= degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
  }
  return Monomial(std::move(e));
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    if (!any_divides(out, g)) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool any_divides(std::span<const Monomial> gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

void fill_degree(std::size_t var, Degree remaining, std::vector<Exponent>& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = static_cast<Exponent>(remaining);
    out.emplace_back(cur);
    return;
  }
  for (Degree e = remaining; e >= 0; --e) {
    cur[var] = static_cast<Exponent>(e);
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, Degree degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back(std::vector<Exponent>{});
    return out;
  }
  std::vector<Exponent> cur(num_vars, 0);
  fill_degree(0, degree, cur, out);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace modgb
