#include "modgb/free_module.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "modgb/errors.hpp"

namespace modgb {

Degree FreeModuleSpec::max_basis_degree() const {
  if (basis_degrees.empty()) return 0;
  return *std::max_element(basis_degrees.begin(), basis_degrees.end());
}

Degree FreeModuleSpec::basis_degree_sum() const {
  return std::accumulate(basis_degrees.begin(), basis_degrees.end(), Degree{0});
}

std::vector<std::string> FreeModuleSpec::validate() const {
  if (variables.size() > kMaxVariables) {
    throw InvalidInput("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (basis_degrees.empty()) throw InvalidInput("the free module needs at least one basis element");
  if (basis_names.size() != basis_degrees.size()) {
    throw InvalidInput("basis names and basis degrees differ in length");
  }
  std::set<std::string> names;
  for (const auto& v : variables) {
    if (!names.insert(v).second) throw InvalidInput("duplicate name '" + v + "'");
  }
  for (const auto& b : basis_names) {
    if (!names.insert(b).second) throw InvalidInput("duplicate name '" + b + "'");
  }
  std::vector<std::string> warnings;
  for (Degree d : basis_degrees) {
    if (d < 0) throw InvalidInput("basis degrees must be non-negative");
  }
  if (*std::min_element(basis_degrees.begin(), basis_degrees.end()) != 0) {
    warnings.emplace_back("smallest basis degree is not 0; degree bounds assume it is");
  }
  return warnings;
}

FreeModuleSpec make_spec(std::size_t num_vars, std::vector<Degree> basis_degrees, Field field) {
  FreeModuleSpec spec;
  for (std::size_t i = 0; i < num_vars; ++i) spec.variables.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < basis_degrees.size(); ++j) {
    spec.basis_names.push_back("e" + std::to_string(j + 1));
  }
  spec.basis_degrees = std::move(basis_degrees);
  spec.field = field;
  return spec;
}

std::string to_string(RingOrder order) {
  switch (order) {
    case RingOrder::lex: return "lex";
    case RingOrder::grlex: return "grlex";
    case RingOrder::grevlex: return "grevlex";
  }
  return "?";
}

std::string to_string(PositionStrategy strategy) {
  return strategy == PositionStrategy::position_over_term ? "pot" : "top";
}

bool MonomialOrder::is_degree_compatible() const {
  if (homogenized) return true;
  return ring != RingOrder::lex && position == PositionStrategy::term_over_position;
}

FreeModule::FreeModule(FreeModuleSpec spec, MonomialOrder order, Ptr base)
    : spec_(std::move(spec)), order_(std::move(order)), base_(std::move(base)) {
  const auto m = static_cast<std::uint32_t>(spec_.rank());
  if (order_.priority.empty()) {
    order_.priority.resize(m);
    std::iota(order_.priority.begin(), order_.priority.end(), 0u);
  }
  std::vector<std::uint32_t> sorted = order_.priority;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint32_t> identity(m);
  std::iota(identity.begin(), identity.end(), 0u);
  if (sorted != identity) throw InvalidInput("position priority is not a permutation of the basis");
  rank_of_position_.resize(m);
  for (std::uint32_t k = 0; k < m; ++k) rank_of_position_[order_.priority[k]] = k;
  if (order_.homogenized && spec_.num_vars() == 0) {
    throw InvalidInput("a homogenized order needs the homogenizing variable");
  }
}

FreeModule::Ptr FreeModule::make(FreeModuleSpec spec, MonomialOrder order) {
  spec.validate();
  return Ptr(new FreeModule(std::move(spec), std::move(order), nullptr));
}

std::strong_ordering FreeModule::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  if (order_.homogenized) {
    if (auto c = degree(a) <=> degree(b); c != 0) return c;
    return compare_base(a, b, spec_.num_vars() - 1);
  }
  return compare_base(a, b, spec_.num_vars());
}

std::strong_ordering FreeModule::compare_base(const ModuleMonomial& a, const ModuleMonomial& b,
                                              std::size_t nv) const {
  const auto pos_cmp = [&] {
    // lower rank means higher priority
    return rank_of_position_[b.position] <=> rank_of_position_[a.position];
  };
  if (order_.position == PositionStrategy::position_over_term) {
    if (auto c = pos_cmp(); c != 0) return c;
    return compare_ring(a.mono, b.mono, nv, 0, 0);
  }
  if (auto c = compare_ring(a.mono, b.mono, nv, spec_.basis_degrees[a.position],
                            spec_.basis_degrees[b.position]);
      c != 0) {
    return c;
  }
  return pos_cmp();
}

std::strong_ordering FreeModule::compare_ring(const Monomial& a, const Monomial& b, std::size_t nv,
                                              Degree shift_a, Degree shift_b) const {
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  if (order_.ring != RingOrder::lex) {
    Degree da = a.degree() + shift_a;
    Degree db = b.degree() + shift_b;
    if (nv < a.num_vars()) {
      for (std::size_t i = nv; i < a.num_vars(); ++i) {
        da -= ea[i];
        db -= eb[i];
      }
    }
    if (auto c = da <=> db; c != 0) return c;
  }
  if (order_.ring == RingOrder::grevlex) {
    for (std::size_t i = nv; i-- > 0;) {
      if (ea[i] != eb[i]) return eb[i] <=> ea[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < nv; ++i) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

FreeModule::Ptr FreeModule::homogenized() const {
  if (order_.homogenized) throw InvalidInput("ambient is already homogenized");
  FreeModuleSpec spec = spec_;
  std::string t = "t";
  const auto taken = [&](const std::string& name) {
    return std::find(spec.variables.begin(), spec.variables.end(), name) != spec.variables.end() ||
           std::find(spec.basis_names.begin(), spec.basis_names.end(), name) !=
               spec.basis_names.end();
  };
  for (int k = 0; taken(t); ++k) t = "t" + std::to_string(k);
  spec.variables.push_back(t);
  MonomialOrder order = order_;
  order.homogenized = true;
  spec.validate();
  return Ptr(new FreeModule(std::move(spec), std::move(order),
                            Ptr(new FreeModule(spec_, order_, nullptr))));
}

FreeModule::Ptr FreeModule::ring(RingOrder order) const {
  FreeModuleSpec spec;
  spec.variables = spec_.variables;
  spec.basis_names = {""};
  spec.basis_degrees = {0};
  spec.field = spec_.field;
  MonomialOrder mo;
  mo.ring = order;
  return Ptr(new FreeModule(std::move(spec), mo, nullptr));
}

bool FreeModule::same_as(const FreeModule& other) const {
  return this == &other || (spec_ == other.spec_ && order_ == other.order_);
}

void require_same_ambient(const FreeModule& a, const FreeModule& b) {
  if (!a.same_as(b)) throw StructuralError("operands belong to different free modules");
}

}  // namespace modgb
