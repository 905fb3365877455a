#pragma once

#include <cstdint>
#include <vector>

#include "frobkit/ring.hpp"

namespace frobkit {

/// One nonzero term: coefficient in [1, p) times a power product.
struct Term {
  Monomial monomial;
  std::uint64_t coefficient = 0;
};

/// Sparse polynomial in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients. Equality of canonical forms is
/// structural equality of polynomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, std::int64_t value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, std::uint64_t coefficient);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // zero counts as constant
  bool is_one() const;

  const Term& leading_term() const;        // requires nonzero
  const Monomial& leading_monomial() const;
  std::uint64_t leading_coefficient() const;

  /// Max total degree of a term; -1 for the zero polynomial.
  std::int64_t total_degree() const;

  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  friend Polynomial poly_add(const Polynomial&, const Polynomial&);
  friend Polynomial poly_sub(const Polynomial&, const Polynomial&);
  friend Polynomial poly_mul(const Polynomial&, const Polynomial&);
  friend Polynomial scale(const Polynomial&, std::uint64_t);
  friend Polynomial term_multiply(const Polynomial&, const Term&);
  friend Polynomial frobenius_power(const Polynomial&, std::int64_t);

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& f, std::int64_t exp);

/// Multiply by a field scalar.
Polynomial scale(const Polynomial& f, std::uint64_t c);
/// Normalize a nonzero polynomial to leading coefficient 1.
Polynomial monic(const Polynomial& f);
/// Multiply by a single term.
Polynomial term_multiply(const Polynomial& f, const Term& t);

/// f^q for a power q of the characteristic, via the additive Frobenius:
/// coefficients are fixed (Fermat) and exponents scale by q.
Polynomial frobenius_power(const Polynomial& f, std::int64_t q);

/// Exact division: returns q with f == q * g; throws PreconditionError when
/// g is zero or does not divide f exactly.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace frobkit
