#ifndef MODGB_FREE_MODULE_HPP
#define MODGB_FREE_MODULE_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modgb/monomial.hpp"
#include "modgb/scalar.hpp"

namespace modgb {

/// F = S e_1 + ... + S e_m over S = K[x_1, ..., x_n], with degree shifts deg(e_j).
struct FreeModuleSpec {
  std::vector<std::string> variables;
  std::vector<std::string> basis_names;
  std::vector<Degree> basis_degrees;
  Field field;

  std::size_t num_vars() const { return variables.size(); }
  std::size_t rank() const { return basis_degrees.size(); }
  /// l = max deg(e_j); 0 for rank zero.
  Degree max_basis_degree() const;
  Degree basis_degree_sum() const;

  /// Throws InvalidInput on malformed data; returns non-fatal warnings
  /// (currently: the smallest basis degree is not 0).
  std::vector<std::string> validate() const;

  friend bool operator==(const FreeModuleSpec&, const FreeModuleSpec&) = default;
};

/// Convenience constructor with generated names x1.., e1...
FreeModuleSpec make_spec(std::size_t num_vars, std::vector<Degree> basis_degrees,
                         Field field = Field::rationals());

enum class RingOrder { lex, grlex, grevlex };
enum class PositionStrategy { position_over_term, term_over_position };

std::string to_string(RingOrder order);
std::string to_string(PositionStrategy strategy);

/// A monomial order on module monomials.
///
/// With `homogenized` set the last variable is the homogenizing variable t and
/// the order compares total degree (t and basis shift included) first, then
/// falls back to the base order on the remaining variables.
struct MonomialOrder {
  RingOrder ring = RingOrder::grevlex;
  PositionStrategy position = PositionStrategy::position_over_term;
  /// priority[k] is the basis index ranked k-th (largest first); empty means e_1 > e_2 > ...
  std::vector<std::uint32_t> priority;
  bool homogenized = false;

  /// Degree-compatible orders never rank a lower-degree module monomial above a higher one.
  bool is_degree_compatible() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// The ambient of every ModuleElement: a free module together with its order.
/// Shared by pointer and never mutated after construction.
class FreeModule {
 public:
  using Ptr = std::shared_ptr<const FreeModule>;

  static Ptr make(FreeModuleSpec spec, MonomialOrder order = {});

  const FreeModuleSpec& spec() const { return spec_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t num_vars() const { return spec_.num_vars(); }
  std::size_t rank() const { return spec_.rank(); }
  const Field& field() const { return spec_.field; }

  Degree degree(const ModuleMonomial& m) const {
    return m.mono.degree() + spec_.basis_degrees[m.position];
  }

  std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const;

  /// F^h over S[t] with the extended order; t is appended as the last variable.
  Ptr homogenized() const;
  /// For a homogenized ambient, the module it was built from; nullptr otherwise.
  const Ptr& base() const { return base_; }

  /// The polynomial ring S viewed as a rank-one module with deg(e) = 0.
  Ptr ring(RingOrder order) const;
  Ptr ring() const { return ring(order_.ring); }

  bool same_as(const FreeModule& other) const;

 private:
  FreeModule(FreeModuleSpec spec, MonomialOrder order, Ptr base);

  std::strong_ordering compare_base(const ModuleMonomial& a, const ModuleMonomial& b,
                                    std::size_t nv) const;
  std::strong_ordering compare_ring(const Monomial& a, const Monomial& b, std::size_t nv,
                                    Degree shift_a, Degree shift_b) const;

  FreeModuleSpec spec_;
  MonomialOrder order_;
  std::vector<std::uint32_t> rank_of_position_;
  Ptr base_;
};

void require_same_ambient(const FreeModule& a, const FreeModule& b);

}  // namespace modgb

#endif  // MODGB_FREE_MODULE_HPP
