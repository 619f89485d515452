#ifndef MODGB_BOUNDS_HPP
#define MODGB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modgb/monomial.hpp"

namespace modgb {

struct BoundInputs {
  std::size_t n = 0;
  std::size_t m = 0;
  /// Krull dimension of F/M.
  std::size_t r = 0;
  /// Generator degrees, any order (sorted descending internally).
  std::vector<Degree> generator_degrees;
  /// deg(e_j) for each basis element.
  std::vector<Degree> basis_degrees;
  /// Degrees of a generating set of Fitt_0(F/M), when known.
  std::optional<std::vector<Degree>> fitting_degrees;
  bool graded = true;

  /// Max generator degree (0 without generators).
  Degree D() const;
  Degree l() const;

  /// Throws InvalidInput when D < l, r > n, n = 0 or a degree is negative.
  void validate() const;
};

/// ceil(2 * (x / 2)^(2^k)), exact.
mpz_class doubled_half_power(const mpz_class& x, std::uint64_t k);

/// Graded, from Fitting degrees: r = 0 gives d_1 + ... + d_n + l - n + 1,
/// otherwise 2[(d_1...d_{n-r} m + D) / 2]^(2^(r-1)). nullopt without enough Fitting degrees.
std::optional<mpz_class> bound_graded_fitting(const BoundInputs& in);

struct GradedBound {
  /// In terms of D, m, n only.
  mpz_class coarse;
  /// Using the m largest generator degrees and the basis shifts.
  std::optional<mpz_class> sharp;
};

/// Graded, from generator degrees only.
GradedBound bound_graded(const BoundInputs& in);

/// 2 (Dm)^(2^(n-1)).
mpz_class bound_graded_dimfree(const BoundInputs& in);

/// 2[((d_1...d_{n-r})^(n-r) m + D) / 2]^(2^r). nullopt without enough Fitting degrees.
std::optional<mpz_class> bound_nongraded_fitting(const BoundInputs& in);

/// 2[((Dm)^((n-r)^2) m + D) / 2]^(2^r).
mpz_class bound_nongraded(const BoundInputs& in);

/// 2 (Dm)^(2^n).
mpz_class bound_nongraded_dimfree(const BoundInputs& in);

struct MayrRitscherBound {
  /// 2[((d_1...d_{n-r})^(2(n-r)) + d_1) / 2]^(2^r).
  mpz_class general;
  /// 2[(d_1...d_{n-r} + d_1) / 2]^(2^(r-1)), only for r >= 1.
  std::optional<mpz_class> homogeneous;
};

/// The ideal-case bounds (m = 1, deg e_1 = 0); nullopt otherwise or with
/// fewer than n - r generators.
std::optional<MayrRitscherBound> bound_mayr_ritscher(const BoundInputs& in);

/// Upper bound on the Macaulay constant b_k of the pure-power decomposition:
/// 2[(d_1...d_{n-r} m + D) / 2]^(2^(r-k)) for 1 <= k <= r.
mpz_class pure_power_constant_bound(std::span<const Degree> d, std::size_t m, Degree D,
                                    std::size_t r, std::size_t k);

struct BoundEntry {
  std::string name;
  std::optional<mpz_class> value;
  /// Why the bound does not apply, when value is empty.
  std::string note;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  std::optional<Degree> actual_degree;

  const BoundEntry* find(const std::string& name) const;
  /// Names of applicable bounds strictly below the actual degree.
  std::vector<std::string> violations() const;
};

/// Every bound that applies to the inputs, in a fixed order.
BoundReport bound_report(const BoundInputs& in, std::optional<Degree> actual_degree);

}  // namespace modgb

#endif  // MODGB_BOUNDS_HPP
