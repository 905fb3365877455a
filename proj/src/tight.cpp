#include <utility>

#include "frobkit/tight.hpp"

namespace frobkit {

namespace {

void require_level_one(const FrobeniusMultiplier& mult) {
  if (mult.level() != 1) {
    throw PreconditionError("this operation requires a level-1 multiplier");
  }
}

void require_consistent(const QuotientPresentation& pres, const FrobeniusMultiplier& mult) {
  require_same_ring(pres.ring(), mult.ring());
  if (!ideal_equal(pres.defining(), mult.base())) {
    throw PreconditionError("the multiplier base and the quotient presentation disagree");
  }
}

// One level of the graded-annihilator recursion: M -> (M^{[p]} : u).
Ideal step_component(const Ideal& M, const FrobeniusMultiplier& mult) {
  return ideal_colon(bracket_power(M, mult.level()), Ideal::principal(mult.multiplier()))
      .normalized();
}

}  // namespace

ESModuleDescriptor::ESModuleDescriptor(QuotientPresentation presentation, Ideal defining_ideal)
    : presentation_(std::move(presentation)), defining_(std::move(defining_ideal)) {
  require_same_ring(presentation_.ring(), defining_.ring());
  if (!ideal_subset(presentation_.defining(), defining_)) {
    throw PreconditionError("the descriptor ideal must contain the defining ideal of S");
  }
}

Ideal graded_ann_component(const ESModuleDescriptor& desc, const FrobeniusMultiplier& mult,
                           std::int64_t level) {
  require_level_one(mult);
  require_consistent(desc.presentation(), mult);
  if (level < 0) throw PreconditionError("negative level");
  if (level > kMaxFrobeniusLevel) {
    throw CapExceededError("level " + std::to_string(level) + " exceeds the cap of " +
                           std::to_string(kMaxFrobeniusLevel));
  }
  Ideal m = desc.defining_ideal().normalized();
  for (std::int64_t k = 0; k < level; ++k) m = step_component(m, mult);
  return m;
}

IdealChain graded_ann_chain(const ESModuleDescriptor& desc, const FrobeniusMultiplier& mult,
                            std::int64_t max_level) {
  require_level_one(mult);
  require_consistent(desc.presentation(), mult);
  if (max_level < 0) throw PreconditionError("negative level cap");
  if (!is_es_ideal(desc.defining_ideal(), mult)) {
    throw PreconditionError("graded annihilator chains need an E_S descriptor ideal");
  }
  IdealChain chain(IdealChain::Direction::ascending);
  Ideal current = desc.defining_ideal().normalized();
  chain.push(current);
  for (std::int64_t e = 0; e < max_level; ++e) {
    Ideal next = step_component(current, mult);
    chain.push(next);
    if (ideal_equal(next, current)) {
      chain.mark_stabilized(static_cast<std::size_t>(e));
      break;
    }
    current = std::move(next);
  }
  return chain;
}

Ideal quotient_graded_ann(const Ideal& J, const Ideal& K, const FrobeniusMultiplier& mult,
                          std::int64_t level) {
  require_level_one(mult);
  require_same_ring(J.ring(), K.ring());
  require_same_ring(J.ring(), mult.ring());
  if (!ideal_subset(J, K)) {
    throw PreconditionError("quotient graded annihilator needs J contained in K");
  }
  if (level < 0) throw PreconditionError("negative level");
  Ideal m = J.normalized();
  for (std::int64_t k = 0; k < level; ++k) m = step_component(m, mult);
  return ideal_colon(m, K).normalized();
}

namespace {

// Shared star step of the weak-parameter-test-ideal computations.
Ideal test_ideal_star(const QuotientPresentation& pres, const FrobeniusMultiplier& mult,
                      const Ideal& J, const Polynomial& c, std::size_t cap) {
  Ideal cj_plus_i = ideal_sum(multiply(c, J), pres.defining());
  return star_closure(cj_plus_i, mult.multiplier(), 1, cap);
}

Ideal tau_from_component(const Ideal& component, const Ideal& J,
                         const QuotientPresentation& pres) {
  return ideal_sum(ideal_colon(component, J), pres.defining()).normalized();
}

}  // namespace

Ideal wpti(const QuotientPresentation& pres, const FrobeniusMultiplier& mult, const Ideal& J,
           const Polynomial& c, std::int64_t e, std::size_t cap) {
  require_level_one(mult);
  require_consistent(pres, mult);
  require_same_ring(pres.ring(), J.ring());
  if (e < 0) throw PreconditionError("negative level");
  if (!ideal_subset(pres.defining(), J)) {
    throw PreconditionError("the canonical-module ideal J must contain the defining ideal");
  }
  Ideal m = test_ideal_star(pres, mult, J, c, cap);
  for (std::int64_t k = 0; k < e; ++k) m = step_component(m, mult);
  return tau_from_component(m, J, pres);
}

TestIdealResult wpti_limit(const QuotientPresentation& pres, const FrobeniusMultiplier& mult,
                           const Ideal& J, const Polynomial& c, std::int64_t max_level,
                           std::size_t cap) {
  require_level_one(mult);
  require_consistent(pres, mult);
  require_same_ring(pres.ring(), J.ring());
  if (max_level < 0) throw PreconditionError("negative level cap");
  if (!ideal_subset(pres.defining(), J)) {
    throw PreconditionError("the canonical-module ideal J must contain the defining ideal");
  }
  TestIdealResult result{IdealChain(IdealChain::Direction::ascending), std::nullopt,
                         std::nullopt};
  Ideal m = test_ideal_star(pres, mult, J, c, cap);
  Ideal tau = tau_from_component(m, J, pres);
  result.per_level.push(tau);
  for (std::int64_t e = 0; e < max_level; ++e) {
    m = step_component(m, mult);
    Ideal next = tau_from_component(m, J, pres);
    result.per_level.push(next);
    if (ideal_equal(next, tau)) {
      result.per_level.mark_stabilized(static_cast<std::size_t>(e));
      result.stable_value = next;
      result.stable_index = e;
      break;
    }
    tau = std::move(next);
  }
  return result;
}

Ideal n_phi_ideal(const QuotientPresentation& pres, const Polynomial& v, std::int64_t e,
                  const Ideal& J, const Polynomial& c) {
  require_same_ring(pres.ring(), v.ring());
  require_same_ring(pres.ring(), J.ring());
  require_same_ring(pres.ring(), c.ring());
  if (e < 1) throw PreconditionError("the twist level must be positive");
  if (v.is_zero()) throw PreconditionError("the twist multiplier v must be nonzero");
  const Ideal& I = pres.defining();
  Ideal bracket_i = bracket_power(I, e);
  for (const Polynomial& g : I.generators()) {
    if (!ideal_contains(bracket_i, poly_mul(v, g))) {
      throw PreconditionError("v is not a member of (I^[p^e] : I)");
    }
  }
  Ideal col = ideal_colon(bracket_power(J, e), Ideal::principal(v));
  Ideal scaled = multiply(poly_mul(c, v), col);
  return ideal_sum(frobenius_root(scaled, e), I).normalized();
}

TcResult tc_annihilator(const QuotientPresentation& pres, const FrobeniusMultiplier& mult,
                        const Ideal& J, const Polynomial& c, std::int64_t eta, std::size_t cap) {
  require_level_one(mult);
  require_consistent(pres, mult);
  require_same_ring(pres.ring(), J.ring());
  if (eta < 1) throw PreconditionError("eta must be positive");
  if (!ideal_subset(pres.defining(), J)) {
    throw PreconditionError("the stable-value ideal J must contain the defining ideal");
  }
  Ideal cj_plus_i = ideal_sum(multiply(c, J), pres.defining());
  std::int64_t nu_eta = nu(pres.ring()->characteristic(), eta);
  Polynomial twisted = poly_pow(mult.multiplier(), nu_eta);
  Ideal star = star_closure(cj_plus_i, twisted, eta, cap);
  bool agree = true;
  if (nu_eta != 1) {
    Ideal plain = star_closure(cj_plus_i, mult.multiplier(), eta, cap);
    agree = ideal_equal(star, plain);
  }
  SharpResult sharp = sharp_closure(star, mult, cap);
  return TcResult{std::move(sharp.closure), agree};
}

Ideal ci_zero_star(const QuotientPresentation& pres,
                   const std::vector<Polynomial>& regular_sequence, const Polynomial& c,
                   std::int64_t max_level, std::size_t cap) {
  require_same_ring(pres.ring(), c.ring());
  if (max_level < 1) throw PreconditionError("max_level must be positive");
  const RingPtr& ring = pres.ring();
  Ideal from_sequence(ring, regular_sequence);
  if (!ideal_equal(from_sequence, pres.defining())) {
    throw PreconditionError("the sequence does not generate the defining ideal of S");
  }
  Polynomial g = Polynomial::constant(ring, 1);
  for (const Polynomial& gi : regular_sequence) g = poly_mul(g, gi);
  std::int64_t p = static_cast<std::int64_t>(ring->characteristic());
  Polynomial g_pow = poly_pow(g, p - 1);

  Ideal t = frobenius_root(Ideal::principal(poly_mul(c, g_pow)), 1);
  Ideal star = star_closure(t, g_pow, 1, cap);

  // Cross-check: direct partial sums of the level terms must stabilize to
  // the star value (term e+1 arises from term e by one more twisted root).
  Ideal partial = t.normalized();
  bool stabilized = false;
  for (std::int64_t level = 1; level < max_level; ++level) {
    t = frobenius_root(multiply(g_pow, t), 1);
    Ideal next = ideal_sum(partial, t).normalized();
    if (ideal_equal(next, partial)) {
      stabilized = true;
      break;
    }
    partial = std::move(next);
  }
  if (!stabilized) {
    throw CapExceededError("direct summation did not stabilize within " +
                           std::to_string(max_level) + " levels");
  }
  if (!ideal_equal(partial, star)) {
    throw Error("internal error: the star form and the direct summation disagree");
  }
  return ideal_sum(star, pres.defining()).normalized();
}

Ideal quasi_gorenstein_test_ideal(const QuotientPresentation& pres,
                                  const FrobeniusMultiplier& mult, const Polynomial& c,
                                  std::size_t cap) {
  require_level_one(mult);
  require_consistent(pres, mult);
  require_same_ring(pres.ring(), c.ring());
  Ideal base = ideal_sum(Ideal::principal(c), pres.defining());
  Ideal star = star_closure(base, mult.multiplier(), 1, cap);
  return sharp_closure(star, mult, cap).closure;
}

}  // namespace frobkit
