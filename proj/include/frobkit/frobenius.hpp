#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/ideal.hpp"

namespace frobkit {

/// Hard ceiling on Frobenius levels e (exponents p^e are computed exactly).
inline constexpr std::int64_t kMaxFrobeniusLevel = 32;

/// Iteration cap for fixed-point loops: FROBKIT_ITER_CAP when set to a
/// positive integer, 64 otherwise. Read once per process.
std::size_t iteration_cap();

/// p^e with overflow checking; e must lie in [0, kMaxFrobeniusLevel].
std::int64_t prime_power(std::uint64_t p, std::int64_t e);

/// nu(p, e) = 1 + p + ... + p^{e-1}, the exponent accumulated by composing
/// e successive Frobenius twists; nu(p, 0) = 0 (empty sum).
std::int64_t nu(std::uint64_t p, std::int64_t e);

/// Bracket power J^{[p^e]}, generated by g^{p^e} over the generators of J
/// (independent of the generating set over the regular ambient ring).
Ideal bracket_power(const Ideal& J, std::int64_t e);

struct MonomialLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.less(a, b); }
};

using RootDecomposition = std::map<Monomial, Polynomial, MonomialLess>;

/// Writes f = sum over m of (g_m)^{p^e} * m, where m runs over the monomials
/// with every exponent below p^e (the free basis of R over its p^e-th power
/// subring). Coefficients attach unchanged to their g_m since c^{p^e} = c in
/// F_p. Only nonzero components are listed.
RootDecomposition pth_root_decompose(const Polynomial& f, std::int64_t e);

/// Frobenius root I_e(J): the smallest ideal L with J contained in L^{[p^e]};
/// generated by all decomposition components of all generators of J.
/// Satisfies the Galois property J in L^{[p^e]} iff I_e(J) in L.
Ideal frobenius_root(const Ideal& J, std::int64_t e);

/// Smallest ideal L containing J with v*L inside L^{[p^e]}: the fixed point
/// of A <- A + I_e(v*A). The multiplier v is the caller's responsibility
/// (no membership is checked here). Throws CapExceededError when the ascent
/// does not stabilize within `cap` steps, which would indicate a bug since
/// Noetherian ascent terminates.
Ideal star_closure(const Ideal& J, const Polynomial& v, std::int64_t e,
                   std::size_t cap = iteration_cap());

/// The datum (u, e, I) of a Frobenius action u*T^e on the quotient by I.
/// Construction verifies the membership u*I inside I^{[p^e]} generator by
/// generator.
class FrobeniusMultiplier {
 public:
  FrobeniusMultiplier(Polynomial u, std::int64_t e, Ideal base);

  const Polynomial& multiplier() const { return u_; }
  std::int64_t level() const { return e_; }
  const Ideal& base() const { return base_; }
  const RingPtr& ring() const { return u_.ring(); }

 private:
  Polynomial u_;
  std::int64_t e_;
  Ideal base_;
};

enum class EsStatus {
  es_ideal,             // J contains the base ideal and u*J lies in J^{[p^e]}
  not_containing_base,  // some base generator is not a member of J
  not_stable,           // u*g escapes J^{[p^e]} for some generator g
};

EsStatus es_ideal_status(const Ideal& J, const FrobeniusMultiplier& mult);
bool is_es_ideal(const Ideal& J, const FrobeniusMultiplier& mult);

/// Monotone chain of ideals with verified adjacent containments.
class IdealChain {
 public:
  enum class Direction { ascending, descending };

  explicit IdealChain(Direction direction) : direction_(direction) {}

  Direction direction() const { return direction_; }
  const std::vector<Ideal>& entries() const { return entries_; }
  std::optional<std::size_t> stabilized_at() const { return stabilized_at_; }

  /// Appends an entry, verifying containment against the current last one.
  void push(Ideal next);

  /// Records the first index s with entries[s] == entries[s+1] (verified).
  void mark_stabilized(std::size_t s);

 private:
  Direction direction_;
  std::vector<Ideal> entries_;
  std::optional<std::size_t> stabilized_at_;
};

struct SharpResult {
  Ideal closure;     // the stable chain value plus the base ideal
  IdealChain chain;  // C_0 = J, C_{k+1} = I_1(u * C_k), descending
};

/// Sharp closure of an E_S-ideal J for a level-1 multiplier: iterates
/// C_{k+1} = I_1(u * C_k) from C_0 = J, stops at the first equality of
/// consecutive entries (equality propagates under the recursion), and
/// returns the stable value plus the base ideal.
SharpResult sharp_closure(const Ideal& J, const FrobeniusMultiplier& mult,
                          std::size_t cap = iteration_cap());

struct HslResult {
  std::int64_t eta;  // first index with C_{eta+1} + I == C_eta + I
  Ideal nil_ideal;   // C_eta + I; the quotient is F-injective iff this is R
  bool f_injective;
  IdealChain chain;  // the raw C_k, descending
};

/// Nilpotency chain of the Frobenius action: C_0 = R, C_{k+1} = I_1(u*C_k),
/// stopped at the first index eta where consecutive entries agree modulo the
/// base ideal.
HslResult hsl_chain(const FrobeniusMultiplier& mult, std::size_t cap = iteration_cap());

struct ChainReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Validates a purported chain of sharp-fixed ideals: every entry must be an
/// E_S-ideal fixed by sharp_closure, the chain must strictly ascend, and the
/// endpoints must be sharp_closure(base) and sharp_closure(R). All failures
/// are reported; nothing throws.
ChainReport verify_sharp_chain(const std::vector<Ideal>& chain, const FrobeniusMultiplier& mult,
                               std::size_t cap = iteration_cap());

}  // namespace frobkit
