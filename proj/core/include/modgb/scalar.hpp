#ifndef MODGB_SCALAR_HPP
#define MODGB_SCALAR_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace modgb {

/// Coefficient field: the rationals, or GF(p) for an explicit prime p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws InvalidInput when `p` is not prime.
  static Field prime(std::uint32_t p);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; GF(p) residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long value);
  /// Maps a rational into `f`; throws InvalidInput if the denominator vanishes mod p.
  static Scalar from_rational(Field f, const mpq_class& value);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t prime;
  };
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  std::variant<mpq_class, Residue> value_{mpq_class(0)};
};

}  // namespace modgb

#endif  // MODGB_SCALAR_HPP
