#ifndef MODGB_MONOMIAL_HPP
#define MODGB_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace modgb {

using Degree = std::int64_t;
using Exponent = std::uint32_t;

/// Bit i set means variable x_{i+1} belongs to the set.
using VarSet = std::uint32_t;
inline constexpr std::size_t kMaxVariables = 32;

inline constexpr VarSet all_variables(std::size_t n) {
  return n >= 32 ? ~VarSet{0} : (VarSet{1} << n) - 1;
}

/// Exponent vector x^a over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars);
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  Degree degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Variables that appear with a positive exponent.
  VarSet support() const;

  /// Throws LimitExceeded on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  Monomial times_variable(std::size_t var, Exponent power = 1) const;

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// Exponentwise max(a_i - b_i, 0): the generator of <x^a> : x^b.
  Monomial colon(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors (not a term order).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  Degree degree_ = 0;
};

/// x^a e_j with a zero-based basis position.
struct ModuleMonomial {
  Monomial mono;
  std::uint32_t position = 0;

  bool divides(const ModuleMonomial& other) const {
    return position == other.position && mono.divides(other.mono);
  }

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
  /// Position first, then lexicographic exponents. Used for deterministic tie-breaking only.
  friend std::strong_ordering operator<=>(const ModuleMonomial& a, const ModuleMonomial& b) {
    if (auto c = a.position <=> b.position; c != 0) return c;
    return a.mono <=> b.mono;
  }
};

/// Removes duplicates and every monomial divisible by another one.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Does some element of `gens` divide `m`?
bool any_divides(std::span<const Monomial> gens, const Monomial& m);

/// All monomials of total degree `degree` in `num_vars` variables, in lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, Degree degree);

}  // namespace modgb

#endif  // MODGB_MONOMIAL_HPP
