#include <algorithm>
#include <utility>

#include "frobkit/poly.hpp"

namespace frobkit {

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
  Polynomial f(ring);
  std::uint64_t c = ring->field().reduce(value);
  if (c != 0) f.terms_.push_back({Monomial(ring->nvars()), c});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw PreconditionError("variable index out of range");
  std::vector<std::int64_t> e(ring->nvars(), 0);
  e[index] = 1;
  Polynomial f(ring);
  f.terms_.push_back({Monomial(std::move(e)), 1});
  return f;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, std::uint64_t coefficient) {
  if (m.nvars() != ring->nvars()) throw PreconditionError("monomial arity mismatch");
  Polynomial f(ring);
  std::uint64_t c = coefficient % ring->characteristic();
  if (c != 0) f.terms_.push_back({std::move(m), c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& ord = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.monomial, b.monomial);
  });
  Polynomial f(ring);
  const PrimeField& field = ring->field();
  for (Term& t : terms) {
    if (t.monomial.nvars() != ring->nvars()) {
      throw PreconditionError("monomial arity mismatch");
    }
    std::uint64_t c = t.coefficient % field.characteristic();
    if (c == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
      std::uint64_t merged = field.add(f.terms_.back().coefficient, c);
      if (merged == 0) {
        f.terms_.pop_back();
      } else {
        f.terms_.back().coefficient = merged;
      }
    } else {
      f.terms_.push_back({std::move(t.monomial), c});
    }
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().monomial; }

std::uint64_t Polynomial::leading_coefficient() const { return leading_term().coefficient; }

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  const PrimeField& field = ring_->field();
  for (const Term& t : terms_) r.terms_.push_back({t.monomial, field.neg(t.coefficient)});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].coefficient != tb[i].coefficient || ta[i].monomial != tb[i].monomial) {
      return false;
    }
  }
  return true;
}

namespace {

// Merge two canonical term lists; the second operand is negated when
// `subtract` is set. The result is again canonical.
std::vector<Term> merge_terms(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a.ring(), b.ring());
  const PrimeField& field = a.ring()->field();
  const MonomialOrder& ord = a.ring()->order();
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = ord.compare(ta[i].monomial, tb[j].monomial);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      std::uint64_t coeff = subtract ? field.neg(tb[j].coefficient) : tb[j].coefficient;
      out.push_back({tb[j].monomial, coeff});
      ++j;
    } else {
      std::uint64_t coeff = subtract ? field.sub(ta[i].coefficient, tb[j].coefficient)
                                     : field.add(ta[i].coefficient, tb[j].coefficient);
      if (coeff != 0) out.push_back({ta[i].monomial, coeff});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) {
    std::uint64_t coeff = subtract ? field.neg(tb[j].coefficient) : tb[j].coefficient;
    out.push_back({tb[j].monomial, coeff});
  }
  return out;
}

}  // namespace

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.ring());
  r.terms_ = merge_terms(a, b, false);
  return r;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.ring());
  r.terms_ = merge_terms(a, b, true);
  return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  const PrimeField& field = ring->field();
  std::vector<Term> out;
  out.reserve(a.terms().size() * b.terms().size());
  for (const Term& ta : a.terms()) {
    for (const Term& tb : b.terms()) {
      out.push_back({ta.monomial.times(tb.monomial), field.mul(ta.coefficient, tb.coefficient)});
    }
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial poly_pow(const Polynomial& f, std::int64_t exp) {
  if (exp < 0) throw PreconditionError("negative polynomial power");
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  std::int64_t e = exp;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

Polynomial scale(const Polynomial& f, std::uint64_t c) {
  const PrimeField& field = f.ring()->field();
  c %= field.characteristic();
  Polynomial r(f.ring());
  if (c == 0) return r;
  r.terms_.reserve(f.terms().size());
  for (const Term& t : f.terms()) r.terms_.push_back({t.monomial, field.mul(t.coefficient, c)});
  return r;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
  if (f.leading_coefficient() == 1) return f;
  return scale(f, f.ring()->field().inv(f.leading_coefficient()));
}

Polynomial term_multiply(const Polynomial& f, const Term& t) {
  const PrimeField& field = f.ring()->field();
  std::uint64_t c = t.coefficient % field.characteristic();
  Polynomial r(f.ring());
  if (c == 0) return r;
  r.terms_.reserve(f.terms().size());
  // Multiplying a strictly descending term list by one term preserves order.
  for (const Term& ft : f.terms()) {
    r.terms_.push_back({ft.monomial.times(t.monomial), field.mul(ft.coefficient, c)});
  }
  return r;
}

Polynomial frobenius_power(const Polynomial& f, std::int64_t q) {
  if (q < 1) throw PreconditionError("frobenius_power requires q >= 1");
  Polynomial r(f.ring());
  r.terms_.reserve(f.terms().size());
  // c^q == c for c in F_p and q a power of p; exponent scaling keeps the
  // strict descending order for every compatible term order.
  for (const Term& t : f.terms()) r.terms_.push_back({t.monomial.power(q), t.coefficient});
  return r;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw PreconditionError("exact division by zero");
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  Polynomial rem = f;
  std::vector<Term> quotient;
  std::uint64_t lc_inv = field.inv(g.leading_coefficient());
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!g.leading_monomial().divides(lt.monomial)) {
      throw PreconditionError("polynomial division is not exact");
    }
    Term qt{lt.monomial.quotient_by(g.leading_monomial()), field.mul(lt.coefficient, lc_inv)};
    quotient.push_back(qt);
    rem = poly_sub(rem, term_multiply(g, qt));
  }
  return Polynomial::from_terms(ring, std::move(quotient));
}

}  // namespace frobkit
