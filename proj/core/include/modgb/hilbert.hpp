#ifndef MODGB_HILBERT_HPP
#define MODGB_HILBERT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "modgb/cone.hpp"
#include "modgb/groebner.hpp"

namespace modgb {

/// Integer polynomial in t, coefficients in ascending degree, no trailing zeros.
using IntPoly = std::vector<mpz_class>;

/// Generalized binomial a(a-1)...(a-k+1)/k! for any integer a.
mpz_class binomial(const mpz_class& a, std::size_t k);
/// Binomial that is 0 whenever a < 0.
mpz_class binomial_clamped(const mpz_class& a, std::size_t k);

/// numerator / (1 - t)^denominator.
struct HilbertSeries {
  IntPoly numerator;
  std::size_t denominator = 0;

  static HilbertSeries make(IntPoly numerator, std::size_t denominator);

  bool is_zero() const { return numerator.empty(); }
  /// Equivalent form with numerator(1) != 0 (or the zero series).
  HilbertSeries reduced() const;
  /// Coefficient of t^z.
  mpz_class coefficient(Degree z) const;
  /// Coefficients of t^0 .. t^upto.
  std::vector<mpz_class> coefficients(Degree upto) const;
  std::string to_string() const;

  /// Equality of rational functions.
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);
};

/// Integer-valued polynomial in z, stored by its coordinates in the basis C(z+i, i).
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<mpz_class> coords);

  /// The unique polynomial of degree <= max_degree agreeing with `eval` on
  /// -1, -2, ..., -(max_degree + 1).
  static HilbertPolynomial interpolate(std::size_t max_degree,
                                       const std::function<mpz_class(const mpz_class&)>& eval);

  const std::vector<mpz_class>& coordinates() const { return coords_; }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coords_.empty(); }
  mpz_class operator()(const mpz_class& z) const;
  /// Coefficients in the monomial basis 1, z, z^2, ...
  std::vector<mpq_class> monomial_coefficients() const;
  std::string to_string() const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<mpz_class> coords_;
};

struct HilbertData {
  HilbertPolynomial polynomial;
  Degree regularity = 0;
};

/// Number of module monomials of degree z outside M.
mpz_class hf_enumerate(const MonomialSubmodule& M, std::span<const Degree> basis_degrees,
                       Degree z);

/// Series of the normal-form space N_M, from a recursive numerator computation.
HilbertSeries hilbert_series(const MonomialSubmodule& M, std::span<const Degree> basis_degrees);

/// Sum over cones of t^deg(C) / (1 - t)^dim(C), over the common denominator (1 - t)^n.
HilbertSeries hs_from_cones(std::span<const Cone> cones, std::size_t num_vars);

struct RegularSequenceSeries {
  HilbertSeries series;
  /// d_1 + ... + d_k + l - n + 1, not clamped.
  Degree regularity = 0;
};

/// Series of F/JF for J generated by a regular sequence of degrees d.
RegularSequenceSeries hs_regular_sequence(std::span<const Degree> d,
                                          std::span<const Degree> basis_degrees,
                                          std::size_t num_vars);

HilbertData hp_and_regularity(const HilbertSeries& hs);

/// Krull dimension of the quotient: degree of the Hilbert polynomial plus one.
/// Throws ImproperSubmodule for the zero series.
std::size_t dimension(const HilbertSeries& hs);

}  // namespace modgb

#endif  // MODGB_HILBERT_HPP
