#include "modgb/scalar.hpp"

#include "modgb/errors.hpp"

namespace modgb {

namespace {

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "QQ" : "GF " + std::to_string(p_);
}

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long value) {
  if (f.is_rational()) return Scalar(mpq_class(value));
  return Scalar(Residue{reduce(mpz_class(value), f.characteristic()), f.characteristic()});
}

Scalar Scalar::from_rational(Field f, const mpq_class& value) {
  if (f.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint32_t p = f.characteristic();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw InvalidInput("denominator " + value.get_den().get_str() + " vanishes in GF(" +
                       std::to_string(p) + ")");
  }
  const std::uint32_t num = reduce(value.get_num(), p);
  return Scalar(Residue{mul_mod(num, pow_mod(den, p - 2, p), p), p});
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field(r->prime);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->prime - r->value, r->prime});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->prime - 2, r->prime), r->prime});
  }
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) throw InvalidInput("scalars from different fields");
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& rb = std::get<Scalar::Residue>(b.value_);
    if (ra->prime != rb.prime) throw InvalidInput("scalars from different fields");
    std::uint32_t s = ra->value + rb.value;
    if (s >= ra->prime) s -= ra->prime;
    return Scalar(Scalar::Residue{s, ra->prime});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) throw InvalidInput("scalars from different fields");
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& rb = std::get<Scalar::Residue>(b.value_);
    if (ra->prime != rb.prime) throw InvalidInput("scalars from different fields");
    return Scalar(Scalar::Residue{mul_mod(ra->value, rb.value, ra->prime), ra->prime});
  }
  return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* ra = std::get_if<Scalar::Residue>(&a.value_)) {
    const auto& rb = std::get<Scalar::Residue>(b.value_);
    return ra->prime == rb.prime && ra->value == rb.value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace modgb
