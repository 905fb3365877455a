#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "frobkit/frobenius.hpp"
#include "frobkit/ideal.hpp"
#include "frobkit/parse.hpp"

namespace tutil {

using namespace frobkit;

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return parse_poly(ring, text);
}

inline Ideal I(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const std::string& t : texts) gens.push_back(parse_poly(ring, t));
  return Ideal(ring, std::move(gens));
}

inline std::vector<std::string> gb_strings(const Ideal& J) {
  std::vector<std::string> out;
  for (const Polynomial& g : J.groebner_basis()) out.push_back(format_poly(g));
  return out;
}

// Random polynomial with total degree <= max_deg and at most max_terms terms.
inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int max_deg,
                              int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::int64_t> dexp(0, max_deg);
  std::uniform_int_distribution<std::uint64_t> coeff(1, ring->characteristic() - 1);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<std::int64_t> exps(ring->nvars(), 0);
    std::int64_t budget = dexp(rng);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
      std::uniform_int_distribution<std::int64_t> part(0, budget);
      std::int64_t e = part(rng);
      exps[v] = e;
      budget -= e;
    }
    terms.push_back({Monomial(std::move(exps)), coeff(rng)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const RingPtr& ring, int max_deg,
                                      int max_terms) {
  for (;;) {
    Polynomial f = random_poly(rng, ring, max_deg, max_terms);
    if (!f.is_zero()) return f;
  }
}

inline Ideal random_ideal(std::mt19937& rng, const RingPtr& ring, int max_gens, int max_deg,
                          int max_terms) {
  std::uniform_int_distribution<int> ngens(0, max_gens);
  std::vector<Polynomial> gens;
  int k = ngens(rng);
  for (int t = 0; t < k; ++t) gens.push_back(random_poly(rng, ring, max_deg, max_terms));
  return Ideal(ring, std::move(gens));
}

// Schoolbook product over a coefficient map; an oracle independent of poly_mul.
inline Polynomial slow_mul(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = a.ring();
  const PrimeField& field = ring->field();
  std::map<std::vector<std::int64_t>, std::uint64_t> acc;
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      std::vector<std::int64_t> exps(ring->nvars());
      for (std::size_t i = 0; i < ring->nvars(); ++i) {
        exps[i] = s.monomial.exponent(i) + t.monomial.exponent(i);
      }
      std::uint64_t& c = acc[exps];
      c = field.add(c, field.mul(s.coefficient, t.coefficient));
    }
  }
  std::vector<Term> terms;
  for (auto& [exps, c] : acc) {
    if (c != 0) terms.push_back({Monomial(exps), c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

// All monomials of total degree <= max_deg in the ring's variables.
inline std::vector<Monomial> monomials_up_to(const RingPtr& ring, std::int64_t max_deg) {
  std::vector<Monomial> out;
  std::vector<std::int64_t> exps(ring->nvars(), 0);
  auto rec = [&](auto&& self, std::size_t var, std::int64_t budget) -> void {
    if (var == ring->nvars()) {
      out.push_back(Monomial(exps));
      return;
    }
    for (std::int64_t e = 0; e <= budget; ++e) {
      exps[var] = e;
      self(self, var + 1, budget - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, max_deg);
  return out;
}

// All polynomials over F_2 supported on monomials of degree <= max_deg. Grows as
// 2^(#monomials); callers keep max_deg small.
inline std::vector<Polynomial> all_f2_polys(const RingPtr& ring, std::int64_t max_deg) {
  std::vector<Monomial> basis = monomials_up_to(ring, max_deg);
  std::vector<Polynomial> out;
  out.reserve(std::size_t(1) << basis.size());
  for (std::size_t mask = 0; mask < (std::size_t(1) << basis.size()); ++mask) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (mask & (std::size_t(1) << i)) terms.push_back({basis[i], 1});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace tutil
