#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <utility>

#include "frobkit/ideal.hpp"

namespace frobkit {

namespace detail {

struct GbCache {
  std::once_flag once;
  std::atomic<bool> ready{false};
  std::vector<Polynomial> basis;
};

}  // namespace detail

namespace {

// ---------------------------------------------------------------------------
// Division / reduction

// Full reduction of f by a list of monic divisors: repeatedly cancels the
// first reducible term against the first divisor whose leading term divides
// it. With a reduced basis the remainder is the unique normal form.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& divisors) {
  if (divisors.empty()) return f;
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    bool reduced = false;
    for (const Polynomial& g : divisors) {
      if (g.leading_monomial().divides(lt.monomial)) {
        Term factor{lt.monomial.quotient_by(g.leading_monomial()),
                    field.div(lt.coefficient, g.leading_coefficient())};
        f = poly_sub(f, term_multiply(g, factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      // Strip the leading term; the rest is untouched and stays canonical.
      f = poly_sub(f, Polynomial::term(ring, lt.monomial, lt.coefficient));
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

// Reduction variant that tracks the sugar degree of the running value.
Polynomial reduce_with_sugar(Polynomial f, const std::vector<Polynomial>& divisors,
                             const std::vector<std::int64_t>& divisor_sugar,
                             std::int64_t& sugar) {
  const RingPtr& ring = f.ring();
  const PrimeField& field = ring->field();
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lt = f.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const Polynomial& g = divisors[k];
      if (g.leading_monomial().divides(lt.monomial)) {
        Monomial m = lt.monomial.quotient_by(g.leading_monomial());
        sugar = std::max(sugar, checked_add(divisor_sugar[k], m.degree()));
        Term factor{std::move(m), field.div(lt.coefficient, g.leading_coefficient())};
        f = poly_sub(f, term_multiply(g, factor));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      f = poly_sub(f, Polynomial::term(ring, lt.monomial, lt.coefficient));
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

// ---------------------------------------------------------------------------
// Buchberger's algorithm, sugar selection strategy, both classical criteria.

struct Pair {
  std::int64_t sugar;
  Monomial lcm;
  std::size_t i, j;  // i < j
};

std::vector<Polynomial> buchberger(const RingPtr& ring, const std::vector<Polynomial>& input) {
  const MonomialOrder& ord = ring->order();

  std::vector<Polynomial> basis;
  std::vector<std::int64_t> sugar;
  for (const Polynomial& f : input) {
    if (f.is_zero()) continue;
    basis.push_back(monic(f));
    sugar.push_back(f.total_degree());
  }

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto push_pair = [&](std::size_t i, std::size_t j) {
    // First criterion: coprime leading monomials reduce to zero.
    if (basis[i].leading_monomial().coprime_with(basis[j].leading_monomial())) return;
    Monomial lcm = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
    std::int64_t s = std::max(
        checked_add(sugar[i], lcm.quotient_by(basis[i].leading_monomial()).degree()),
        checked_add(sugar[j], lcm.quotient_by(basis[j].leading_monomial()).degree()));
    queue.insert({s, std::move(lcm), i, j});
    pending.insert({i, j});
  };

  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    // Second criterion (chain): skip when some other leading term divides
    // the pair lcm and both flanking pairs have already been handled.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading_monomial().divides(p.lcm)) continue;
      auto a = std::minmax(p.i, k);
      auto b = std::minmax(p.j, k);
      if (pending.count({a.first, a.second}) == 0 && pending.count({b.first, b.second}) == 0) {
        skip = true;
      }
    }
    if (skip) continue;

    // S-polynomial of two monic elements.
    const Polynomial& fi = basis[p.i];
    const Polynomial& fj = basis[p.j];
    Term ti{p.lcm.quotient_by(fi.leading_monomial()), 1};
    Term tj{p.lcm.quotient_by(fj.leading_monomial()), 1};
    Polynomial s = poly_sub(term_multiply(fi, ti), term_multiply(fj, tj));

    std::int64_t s_sugar = p.sugar;
    Polynomial r = reduce_with_sugar(std::move(s), basis, sugar, s_sugar);
    if (r.is_zero()) continue;

    basis.push_back(monic(r));
    sugar.push_back(s_sugar);
    std::size_t m = basis.size() - 1;
    for (std::size_t i = 0; i < m; ++i) push_pair(i, m);
  }

  // Minimize: keep only elements whose leading term no kept element divides.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = ord.compare(basis[a].leading_monomial(), basis[b].leading_monomial());
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t id : idx) {
    bool redundant = false;
    for (const Polynomial& kept : minimal) {
      if (kept.leading_monomial().divides(basis[id].leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[id]);
  }

  // Autoreduce. Leading terms are pairwise indivisible and never change, so
  // one sequential pass leaves every element fully reduced by the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Polynomial self = std::move(minimal[i]);
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    minimal[i] = reduce_full(std::move(self), others);
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(), b.leading_monomial());
  });
  return minimal;
}

// ---------------------------------------------------------------------------
// Ring extension helpers for elimination-based operations.

std::string fresh_variable_name(const RingContext& ring) {
  std::string name = "t";
  int counter = 0;
  while (ring.variable_index(name)) {
    name = "t" + std::to_string(counter++);
  }
  return name;
}

// New context with one extra leading variable and a block order eliminating
// it; existing variables keep their relative positions.
RingPtr extend_with_aux(const RingContext& ring) {
  std::vector<std::string> vars;
  vars.reserve(ring.nvars() + 1);
  vars.push_back(fresh_variable_name(ring));
  for (const std::string& v : ring.variables()) vars.push_back(v);
  return make_ring(ring.characteristic(), std::move(vars), MonomialOrder::block(1));
}

Polynomial lift_front(const RingPtr& ext, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    std::vector<std::int64_t> e;
    e.reserve(ext->nvars());
    e.push_back(0);
    for (std::int64_t x : t.monomial.exponents()) e.push_back(x);
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial drop_front(const RingPtr& orig, const Polynomial& f) {
  std::vector<Term> terms;
  terms.reserve(f.terms().size());
  for (const Term& t : f.terms()) {
    std::vector<std::int64_t> e(t.monomial.exponents().begin() + 1, t.monomial.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(orig, std::move(terms));
}

bool free_of_leading_vars(const Polynomial& f, std::size_t k) {
  for (const Term& t : f.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (t.monomial.exponent(i) != 0) return false;
    }
  }
  return true;
}

// Colon by a single nonzero polynomial: (A : b) is generated by the exact
// quotients of the generators of A intersect (b) by b.
Ideal colon_by_poly(const Ideal& A, const Polynomial& b) {
  Ideal meet = ideal_intersect(A, Ideal::principal(b));
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.groebner_basis().size());
  for (const Polynomial& g : meet.groebner_basis()) {
    quotients.push_back(divide_exact(g, b));
  }
  return Ideal(A.ring(), std::move(quotients));
}

}  // namespace

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      gens_(std::move(generators)),
      cache_(std::make_shared<detail::GbCache>()) {
  for (const Polynomial& g : gens_) require_same_ring(ring_, g.ring());
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::principal(Polynomial f) {
  RingPtr ring = f.ring();
  return Ideal(std::move(ring), {std::move(f)});
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = buchberger(ring_, gens_);
    cache_->ready.store(true, std::memory_order_release);
  });
  return cache_->basis;
}

bool Ideal::basis_computed() const { return cache_->ready.load(std::memory_order_acquire); }

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_one();
}

Ideal Ideal::normalized() const {
  Ideal r(ring_, groebner_basis());
  std::call_once(r.cache_->once, [&r] {
    r.cache_->basis = r.gens_;
    r.cache_->ready.store(true, std::memory_order_release);
  });
  return r;
}

QuotientPresentation::QuotientPresentation(Ideal defining) : defining_(std::move(defining)) {
  if (defining_.is_unit_ideal()) {
    throw PreconditionError("quotient presentation requires a proper defining ideal");
  }
}

// ---------------------------------------------------------------------------
// Derived operations

Polynomial normal_form(const Polynomial& f, const Ideal& J) {
  require_same_ring(f.ring(), J.ring());
  return reduce_full(f, J.groebner_basis());
}

bool ideal_contains(const Ideal& J, const Polynomial& f) {
  return normal_form(f, J).is_zero();
}

bool ideal_subset(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  for (const Polynomial& g : A.generators()) {
    if (!ideal_contains(B, g)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  const auto& ga = A.groebner_basis();
  const auto& gb = B.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (ga[i] != gb[i]) return false;
  }
  return true;
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<Polynomial> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return Ideal(A.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size() * B.generators().size());
  for (const Polynomial& a : A.generators()) {
    for (const Polynomial& b : B.generators()) {
      gens.push_back(poly_mul(a, b));
    }
  }
  return Ideal(A.ring(), std::move(gens)).normalized();
}

Ideal multiply(const Polynomial& f, const Ideal& J) {
  require_same_ring(f.ring(), J.ring());
  std::vector<Polynomial> gens;
  gens.reserve(J.generators().size());
  for (const Polynomial& g : J.generators()) gens.push_back(poly_mul(f, g));
  return Ideal(J.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  const RingPtr& ring = A.ring();
  RingPtr ext = extend_with_aux(*ring);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = poly_sub(Polynomial::constant(ext, 1), t);
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size() + B.generators().size());
  for (const Polynomial& a : A.generators()) gens.push_back(poly_mul(t, lift_front(ext, a)));
  for (const Polynomial& b : B.generators()) {
    gens.push_back(poly_mul(one_minus_t, lift_front(ext, b)));
  }
  Ideal extended(ext, std::move(gens));
  std::vector<Polynomial> result;
  for (const Polynomial& g : extended.groebner_basis()) {
    if (free_of_leading_vars(g, 1)) result.push_back(drop_front(ring, g));
  }
  return Ideal(ring, std::move(result));
}

Ideal ideal_colon(const Ideal& A, const Ideal& B) {
  require_same_ring(A.ring(), B.ring());
  std::vector<const Polynomial*> divisors;
  for (const Polynomial& b : B.generators()) {
    if (!b.is_zero()) divisors.push_back(&b);
  }
  if (divisors.empty()) {
    throw PreconditionError("colon by the zero ideal is undefined");
  }
  Ideal result = colon_by_poly(A, *divisors[0]);
  for (std::size_t i = 1; i < divisors.size(); ++i) {
    result = ideal_intersect(result, colon_by_poly(A, *divisors[i]));
  }
  return result;
}

Ideal eliminate(const Ideal& J, std::size_t k) {
  const RingPtr& ring = J.ring();
  if (k >= ring->nvars() && k > 0) {
    throw PreconditionError("elimination needs at least one variable left over");
  }
  if (k == 0) return J;
  RingPtr block = make_ring(ring->characteristic(), ring->variables(), MonomialOrder::block(k));
  std::vector<Polynomial> lifted;
  lifted.reserve(J.generators().size());
  for (const Polynomial& g : J.generators()) {
    lifted.push_back(Polynomial::from_terms(block, g.terms()));
  }
  Ideal blocked(block, std::move(lifted));
  std::vector<Polynomial> kept;
  for (const Polynomial& g : blocked.groebner_basis()) {
    if (free_of_leading_vars(g, k)) {
      kept.push_back(Polynomial::from_terms(ring, g.terms()));
    }
  }
  return Ideal(ring, std::move(kept));
}

std::int64_t quotient_dimension(const Ideal& J) {
  const auto& gb = J.groebner_basis();
  if (!gb.empty() && gb.back().is_constant()) return -1;  // unit ideal
  std::size_t n = J.ring()->nvars();
  if (n > 20) throw PreconditionError("dimension computation capped at 20 variables");
  std::vector<std::uint32_t> supports;
  supports.reserve(gb.size());
  for (const Polynomial& g : gb) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.leading_monomial().exponent(i) > 0) mask |= (1u << i);
    }
    supports.push_back(mask);
  }
  std::int64_t best = -1;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool independent = true;
    for (std::uint32_t s : supports) {
      if ((s & ~subset) == 0) {  // support contained in subset
        independent = false;
        break;
      }
    }
    if (independent) {
      best = std::max<std::int64_t>(best, __builtin_popcount(subset));
    }
  }
  return best;
}

}  // namespace frobkit
