#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobkit/frobenius.hpp"

namespace frobkit {

/// A submodule of the top injective hull over S = R/I, represented on the
/// ideal side as M = Ann L for an ideal L containing I.
class ESModuleDescriptor {
 public:
  ESModuleDescriptor(QuotientPresentation presentation, Ideal defining_ideal);

  const QuotientPresentation& presentation() const { return presentation_; }
  const Ideal& defining_ideal() const { return defining_; }

 private:
  QuotientPresentation presentation_;
  Ideal defining_;
};

/// Graded annihilator component (L^{[p^level]} : u^{nu_level}), evaluated by
/// the level-stepping recursion M_{k+1} = (M_k^{[p]} : u), which agrees with
/// the direct colon over the regular ambient ring.
Ideal graded_ann_component(const ESModuleDescriptor& desc, const FrobeniusMultiplier& mult,
                           std::int64_t level);

/// The ascending chain M^{(0)}, M^{(1)}, ... computed up to the first
/// consecutive equality (then marked stabilized; later levels provably stay
/// equal) or until max_level entries have been extended without
/// stabilization, which is reported via the unset stabilized_at, not fatal.
/// Requires the descriptor ideal to be an E_S-ideal so the chain ascends.
IdealChain graded_ann_chain(const ESModuleDescriptor& desc, const FrobeniusMultiplier& mult,
                            std::int64_t max_level);

/// ((J^{[p^level]} : u^{nu_level}) : K) for J contained in K.
Ideal quotient_graded_ann(const Ideal& J, const Ideal& K, const FrobeniusMultiplier& mult,
                          std::int64_t level);

/// Weak parameter test ideal at level e: with L = star_closure(cJ + I, u, 1),
/// returns (L^{[p^e]} : u^{nu_e} J) + I. J must contain I; the test-element
/// quality of c is the caller's assertion.
Ideal wpti(const QuotientPresentation& pres, const FrobeniusMultiplier& mult, const Ideal& J,
           const Polynomial& c, std::int64_t e, std::size_t cap = iteration_cap());

struct TestIdealResult {
  IdealChain per_level;               // ascending chain of level values
  std::optional<Ideal> stable_value;  // set when two consecutive levels agree
  std::optional<std::int64_t> stable_index;
};

/// Levels 0, 1, ... of wpti until two consecutive values agree (the limit is
/// then reached) or max_level is exhausted (reported via empty optionals).
TestIdealResult wpti_limit(const QuotientPresentation& pres, const FrobeniusMultiplier& mult,
                           const Ideal& J, const Polynomial& c, std::int64_t max_level,
                           std::size_t cap = iteration_cap());

/// I_e(c*v*(J^{[p^e]} : v)) + I, for v a verified member of (I^{[p^e]} : I).
Ideal n_phi_ideal(const QuotientPresentation& pres, const Polynomial& v, std::int64_t e,
                  const Ideal& J, const Polynomial& c);

struct TcResult {
  Ideal annihilator_ideal;  // the ideal whose annihilator is the tight closure
  bool variants_agree;      // star step with u^{nu_eta} vs plain u
};

/// ((cJ + I) star-closed at level eta with multiplier u^{nu_eta}, then
/// sharp-closed with u. The plain-u star variant is computed alongside and
/// compared; for eta = 1 the two coincide by definition.
TcResult tc_annihilator(const QuotientPresentation& pres, const FrobeniusMultiplier& mult,
                        const Ideal& J, const Polynomial& c, std::int64_t eta,
                        std::size_t cap = iteration_cap());

/// For I generated by the given (asserted regular) sequence with product g:
/// the sum over e >= 1 of I_e(c*g^{p^e - 1}) plus I, computed as
/// star_closure(I_1(c*g^{p-1}), g^{p-1}, 1) + I and cross-checked against
/// the direct level-by-level summation up to max_level.
Ideal ci_zero_star(const QuotientPresentation& pres,
                   const std::vector<Polynomial>& regular_sequence, const Polynomial& c,
                   std::int64_t max_level, std::size_t cap = iteration_cap());

/// sharp_closure(star_closure(cR + I, u, 1), u) — the quasi-Gorenstein test
/// ideal composite; structurally the J = R, eta = 1 case of tc_annihilator.
Ideal quasi_gorenstein_test_ideal(const QuotientPresentation& pres,
                                  const FrobeniusMultiplier& mult, const Polynomial& c,
                                  std::size_t cap = iteration_cap());

}  // namespace frobkit
