#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/field.hpp"
#include "frobkit/monomial.hpp"

namespace frobkit {

/// Immutable description of a polynomial ring F_p[x1..xn] with a fixed term
/// order. Every polynomial and ideal carries a shared pointer to its context;
/// operations on operands from structurally different contexts throw
/// ContextMismatchError.
class RingContext {
 public:
  RingContext(std::uint64_t characteristic, std::vector<std::string> variables,
              MonomialOrder order);

  const PrimeField& field() const { return field_; }
  std::uint64_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable_name(std::size_t i) const { return vars_[i]; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  /// Structural equality: same characteristic, same variable names in the
  /// same positions, same order.
  bool compatible_with(const RingContext& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> variables,
                  MonomialOrder order = MonomialOrder::grevlex());

/// Pointer fast path, structural slow path.
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace frobkit
