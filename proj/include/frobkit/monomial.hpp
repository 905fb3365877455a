#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "frobkit/errors.hpp"

namespace frobkit {

/// Exponent arithmetic helpers. All monomial exponents are signed 64-bit and
/// every operation that can grow them is overflow-checked.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Checked integer power; rejects negative exponents and overflow.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

/// A power product x1^e1 * ... * xn^en, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0), degree_(0) {}
  explicit Monomial(std::vector<std::int64_t> exponents);

  std::size_t nvars() const { return exp_.size(); }
  std::int64_t exponent(std::size_t i) const { return exp_[i]; }
  const std::vector<std::int64_t>& exponents() const { return exp_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial quotient_by(const Monomial& other) const;  // requires other.divides(*this)
  Monomial lcm(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;

  /// Componentwise scaling by q >= 1, i.e. the monomial of this^q.
  Monomial power(std::int64_t q) const;

  /// Componentwise division with remainder by q >= 1: returns (root, rest)
  /// with this == root^q * rest and every exponent of rest in [0, q).
  std::pair<Monomial, Monomial> split_power(std::int64_t q) const;

  bool operator==(const Monomial& other) const { return exp_ == other.exp_; }
  bool operator!=(const Monomial& other) const { return exp_ != other.exp_; }

 private:
  std::vector<std::int64_t> exp_;
  std::int64_t degree_ = 0;
};

/// Term order on monomials. `block(k)` eliminates the first k variables:
/// it compares the leading block by graded reverse lexicographic order and
/// breaks ties on the remaining variables the same way.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder block(std::size_t leading_vars) {
    return MonomialOrder(Kind::block, leading_vars);
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// Three-way comparison: negative when a < b, zero when equal, positive
  /// when a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && block_ == other.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace frobkit
