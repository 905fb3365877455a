#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "frobkit/poly.hpp"

namespace frobkit {

namespace detail {
struct GbCache;
}

/// Finitely generated ideal of a polynomial ring. The generator list is
/// immutable; the reduced Groebner basis is computed on first use and cached.
/// Copies share the cache, and concurrent first access is synchronized.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal principal(Polynomial f);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// The unique reduced Groebner basis for the ring's order: every element
  /// monic, no term of any element divisible by another's leading term,
  /// sorted by descending leading monomial. Empty exactly for the zero ideal.
  const std::vector<Polynomial>& groebner_basis() const;

  bool basis_computed() const;

  bool is_zero_ideal() const { return groebner_basis().empty(); }
  bool is_unit_ideal() const;

  /// Same ideal, re-based: the generators of the result are the reduced
  /// Groebner basis (which is then already cached).
  Ideal normalized() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

/// The quotient ring S = R/I, presented by a proper defining ideal.
class QuotientPresentation {
 public:
  explicit QuotientPresentation(Ideal defining);

  const RingPtr& ring() const { return defining_.ring(); }
  const Ideal& defining() const { return defining_; }

 private:
  Ideal defining_;
};

/// Unique remainder of f on division by the reduced Groebner basis: no
/// remainder term is divisible by any basis leading term. f - normal_form(f)
/// lies in J, and normal_form(f) == 0 iff f is a member of J.
Polynomial normal_form(const Polynomial& f, const Ideal& J);

bool ideal_contains(const Ideal& J, const Polynomial& f);
bool ideal_subset(const Ideal& A, const Ideal& B);  // A contained in B

/// Equality of ideals, decided by comparing reduced Groebner bases term by
/// term.
bool ideal_equal(const Ideal& A, const Ideal& B);

Ideal ideal_sum(const Ideal& A, const Ideal& B);

/// Product ideal, generated by all pairwise products and normalized.
Ideal ideal_product(const Ideal& A, const Ideal& B);

/// Scale an ideal by one polynomial: f * J.
Ideal multiply(const Polynomial& f, const Ideal& J);

/// Intersection, via one auxiliary elimination variable.
Ideal ideal_intersect(const Ideal& A, const Ideal& B);

/// Colon ideal (A : B) = { f : f * B contained in A }. Computed denominator
/// by denominator (intersect with the principal ideal, divide exactly) and
/// intersected. B must not be the zero ideal.
Ideal ideal_colon(const Ideal& A, const Ideal& B);

/// Intersection with the subring spanned by all but the first k variables:
/// generators of J eliminated of those variables via a block order. The
/// result lives in the original ring context.
Ideal eliminate(const Ideal& J, std::size_t k);

/// Krull dimension of the quotient ring R/J, computed from maximal
/// independent variable sets modulo the leading term ideal. The unit ideal
/// yields -1; the zero ideal yields the number of variables.
std::int64_t quotient_dimension(const Ideal& J);

}  // namespace frobkit
