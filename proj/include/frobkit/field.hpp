#pragma once

#include <cstdint>

#include "frobkit/errors.hpp"

namespace frobkit {

/// Arithmetic in the prime field F_p. Elements are canonical residues in
/// [0, p). The modulus is capped below 2^31 so products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }

  std::uint64_t reduce(std::int64_t value) const {
    std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

  /// Multiplicative inverse; rejects zero.
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace frobkit
