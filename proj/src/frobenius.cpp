#include <cstdlib>
#include <utility>

#include "frobkit/frobenius.hpp"

namespace frobkit {

std::size_t iteration_cap() {
  static const std::size_t cap = [] {
    const char* env = std::getenv("FROBKIT_ITER_CAP");
    if (env != nullptr) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(64);
  }();
  return cap;
}

std::int64_t prime_power(std::uint64_t p, std::int64_t e) {
  if (e < 0) throw PreconditionError("negative Frobenius level");
  if (e > kMaxFrobeniusLevel) {
    throw CapExceededError("Frobenius level " + std::to_string(e) + " exceeds the cap of " +
                           std::to_string(kMaxFrobeniusLevel));
  }
  return checked_pow(static_cast<std::int64_t>(p), e);
}

std::int64_t nu(std::uint64_t p, std::int64_t e) {
  if (e < 0) throw PreconditionError("negative Frobenius level");
  if (e > kMaxFrobeniusLevel) {
    throw CapExceededError("Frobenius level " + std::to_string(e) + " exceeds the cap of " +
                           std::to_string(kMaxFrobeniusLevel));
  }
  std::int64_t result = 0;
  for (std::int64_t k = 0; k < e; ++k) {
    result = checked_add(checked_mul(result, static_cast<std::int64_t>(p)), 1);
  }
  return result;
}

Ideal bracket_power(const Ideal& J, std::int64_t e) {
  std::int64_t q = prime_power(J.ring()->characteristic(), e);
  if (q == 1) return J;
  std::vector<Polynomial> gens;
  gens.reserve(J.generators().size());
  for (const Polynomial& g : J.generators()) gens.push_back(frobenius_power(g, q));
  return Ideal(J.ring(), std::move(gens));
}

RootDecomposition pth_root_decompose(const Polynomial& f, std::int64_t e) {
  if (e < 1) throw PreconditionError("pth_root_decompose requires a positive level");
  const RingPtr& ring = f.ring();
  std::int64_t q = prime_power(ring->characteristic(), e);
  std::map<Monomial, std::vector<Term>, MonomialLess> buckets{MonomialLess{ring->order()}};
  for (const Term& t : f.terms()) {
    auto [root, rest] = t.monomial.split_power(q);
    buckets[rest].push_back({std::move(root), t.coefficient});
  }
  RootDecomposition out{MonomialLess{ring->order()}};
  for (auto& [rest, terms] : buckets) {
    out.emplace(rest, Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

Ideal frobenius_root(const Ideal& J, std::int64_t e) {
  if (e < 1) throw PreconditionError("frobenius_root requires a positive level");
  std::vector<Polynomial> components;
  for (const Polynomial& g : J.generators()) {
    if (g.is_zero()) continue;
    for (auto& [rest, component] : pth_root_decompose(g, e)) {
      components.push_back(component);
    }
  }
  return Ideal(J.ring(), std::move(components));
}

Ideal star_closure(const Ideal& J, const Polynomial& v, std::int64_t e, std::size_t cap) {
  require_same_ring(J.ring(), v.ring());
  if (e < 1) throw PreconditionError("star_closure requires a positive level");
  Ideal current = J.normalized();
  for (std::size_t step = 0; step < cap; ++step) {
    Ideal next = ideal_sum(current, frobenius_root(multiply(v, current), e)).normalized();
    if (ideal_equal(next, current)) return current;
    current = std::move(next);
  }
  throw CapExceededError("star closure did not stabilize within " + std::to_string(cap) +
                         " iterations");
}

FrobeniusMultiplier::FrobeniusMultiplier(Polynomial u, std::int64_t e, Ideal base)
    : u_(std::move(u)), e_(e), base_(std::move(base)) {
  require_same_ring(u_.ring(), base_.ring());
  if (e_ < 1) throw PreconditionError("multiplier level must be positive");
  Ideal bracket = bracket_power(base_, e_);
  for (const Polynomial& g : base_.generators()) {
    if (!ideal_contains(bracket, poly_mul(u_, g))) {
      throw PreconditionError(
          "multiplier does not send the base ideal into its bracket power "
          "(u*g escapes I^[p^e] for a generator g)");
    }
  }
}

EsStatus es_ideal_status(const Ideal& J, const FrobeniusMultiplier& mult) {
  require_same_ring(J.ring(), mult.ring());
  for (const Polynomial& g : mult.base().generators()) {
    if (!ideal_contains(J, g)) return EsStatus::not_containing_base;
  }
  Ideal bracket = bracket_power(J, mult.level());
  for (const Polynomial& g : J.generators()) {
    if (!ideal_contains(bracket, poly_mul(mult.multiplier(), g))) {
      return EsStatus::not_stable;
    }
  }
  return EsStatus::es_ideal;
}

bool is_es_ideal(const Ideal& J, const FrobeniusMultiplier& mult) {
  return es_ideal_status(J, mult) == EsStatus::es_ideal;
}

void IdealChain::push(Ideal next) {
  if (!entries_.empty()) {
    const Ideal& last = entries_.back();
    bool ok = direction_ == Direction::ascending ? ideal_subset(last, next)
                                                 : ideal_subset(next, last);
    if (!ok) {
      throw PreconditionError("chain entry violates the recorded monotonicity");
    }
  }
  entries_.push_back(std::move(next));
}

void IdealChain::mark_stabilized(std::size_t s) {
  if (s + 1 >= entries_.size() || !ideal_equal(entries_[s], entries_[s + 1])) {
    throw PreconditionError("stabilization index does not point at equal entries");
  }
  stabilized_at_ = s;
}

namespace {

const char* es_failure_text(EsStatus status) {
  switch (status) {
    case EsStatus::not_containing_base:
      return "does not contain the base ideal";
    case EsStatus::not_stable:
      return "is not stable under the multiplier";
    default:
      return "";
  }
}

}  // namespace

SharpResult sharp_closure(const Ideal& J, const FrobeniusMultiplier& mult, std::size_t cap) {
  if (mult.level() != 1) {
    throw PreconditionError("sharp closure requires a level-1 multiplier");
  }
  EsStatus status = es_ideal_status(J, mult);
  if (status != EsStatus::es_ideal) {
    throw PreconditionError(std::string("sharp closure input ") + es_failure_text(status));
  }
  IdealChain chain(IdealChain::Direction::descending);
  Ideal current = J.normalized();
  chain.push(current);
  for (std::size_t step = 0; step < cap; ++step) {
    Ideal next = frobenius_root(multiply(mult.multiplier(), current), 1).normalized();
    chain.push(next);
    if (ideal_equal(next, current)) {
      chain.mark_stabilized(step);
      Ideal closure = ideal_sum(current, mult.base()).normalized();
      return SharpResult{std::move(closure), std::move(chain)};
    }
    current = std::move(next);
  }
  throw CapExceededError("sharp closure did not stabilize within " + std::to_string(cap) +
                         " iterations");
}

HslResult hsl_chain(const FrobeniusMultiplier& mult, std::size_t cap) {
  if (mult.level() != 1) {
    throw PreconditionError("the nilpotency chain requires a level-1 multiplier");
  }
  const Ideal& base = mult.base();
  IdealChain chain(IdealChain::Direction::descending);
  Ideal current = Ideal::unit(mult.ring());
  Ideal current_mod = ideal_sum(current, base).normalized();
  chain.push(current);
  for (std::size_t step = 0; step < cap; ++step) {
    Ideal next = frobenius_root(multiply(mult.multiplier(), current), 1).normalized();
    Ideal next_mod = ideal_sum(next, base).normalized();
    chain.push(next);
    if (ideal_equal(next_mod, current_mod)) {
      if (ideal_equal(next, current)) chain.mark_stabilized(step);
      bool injective = current_mod.is_unit_ideal();
      return HslResult{static_cast<std::int64_t>(step), std::move(current_mod), injective,
                       std::move(chain)};
    }
    current = std::move(next);
    current_mod = std::move(next_mod);
  }
  throw CapExceededError("nilpotency chain did not stabilize within " + std::to_string(cap) +
                         " iterations");
}

ChainReport verify_sharp_chain(const std::vector<Ideal>& chain, const FrobeniusMultiplier& mult,
                               std::size_t cap) {
  ChainReport report;
  auto flag = [&report](std::string message) {
    report.valid = false;
    report.violations.push_back(std::move(message));
  };
  if (chain.empty()) {
    flag("chain is empty");
    return report;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::string label = "entry " + std::to_string(i);
    EsStatus status = es_ideal_status(chain[i], mult);
    if (status != EsStatus::es_ideal) {
      flag(label + " " + es_failure_text(status));
      continue;
    }
    SharpResult sharp = sharp_closure(chain[i], mult, cap);
    if (!ideal_equal(sharp.closure, chain[i])) {
      flag(label + " is not fixed by the sharp closure");
    }
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!ideal_subset(chain[i], chain[i + 1])) {
      flag("entry " + std::to_string(i) + " is not contained in entry " + std::to_string(i + 1));
    } else if (ideal_equal(chain[i], chain[i + 1])) {
      flag("entries " + std::to_string(i) + " and " + std::to_string(i + 1) +
           " are equal (ascent must be strict)");
    }
  }
  Ideal bottom = sharp_closure(mult.base(), mult, cap).closure;
  if (!ideal_equal(chain.front(), bottom)) {
    flag("first entry is not the sharp closure of the base ideal");
  }
  Ideal top = sharp_closure(Ideal::unit(mult.ring()), mult, cap).closure;
  if (!ideal_equal(chain.back(), top)) {
    flag("last entry is not the sharp closure of the unit ideal");
  }
  return report;
}

}  // namespace frobkit
