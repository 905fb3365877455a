#include <algorithm>
#include <set>

#include "frobkit/field.hpp"
#include "frobkit/monomial.hpp"
#include "frobkit/ring.hpp"

namespace frobkit {

namespace {

constexpr std::uint64_t kMaxCharacteristic = (1ull << 31) - 1;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p > kMaxCharacteristic) {
    throw PreconditionError("characteristic too large (must be below 2^31)");
  }
  if (!is_prime(p)) {
    throw PreconditionError("characteristic must be a prime number, got " + std::to_string(p));
  }
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in exponent addition");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in exponent multiplication");
  }
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw PreconditionError("negative exponent");
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

Monomial::Monomial(std::vector<std::int64_t> exponents) : exp_(std::move(exponents)) {
  degree_ = 0;
  for (std::int64_t e : exp_) {
    if (e < 0) throw PreconditionError("negative exponent in monomial");
    degree_ = checked_add(degree_, e);
  }
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] = checked_add(exp_[i], other.exp_[i]);
  }
  r.degree_ = checked_add(degree_, other.degree_);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_by(const Monomial& other) const {
  Monomial r(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (other.exp_[i] > exp_[i]) {
      throw PreconditionError("monomial quotient is not a polynomial");
    }
    r.exp_[i] = exp_[i] - other.exp_[i];
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exp_.size());
  r.degree_ = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ = checked_add(r.degree_, r.exp_[i]);
  }
  return r;
}

bool Monomial::coprime_with(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > 0 && other.exp_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::power(std::int64_t q) const {
  if (q < 0) throw PreconditionError("negative monomial power");
  Monomial r(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] = checked_mul(exp_[i], q);
  }
  r.degree_ = checked_mul(degree_, q);
  return r;
}

std::pair<Monomial, Monomial> Monomial::split_power(std::int64_t q) const {
  if (q < 1) throw PreconditionError("split_power requires q >= 1");
  Monomial root(exp_.size());
  Monomial rest(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    root.exp_[i] = exp_[i] / q;
    rest.exp_[i] = exp_[i] % q;
    root.degree_ += root.exp_[i];
    rest.degree_ += rest.exp_[i];
  }
  return {root, rest};
}

namespace {

// Graded reverse lexicographic comparison restricted to variables [lo, hi).
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    std::int64_t ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? -1 : 1;  // larger trailing exponent is smaller
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    std::int64_t ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::lex:
      return lex_range(a, b, 0, n);
    case Kind::grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::block: {
      std::size_t k = std::min(block_, n);
      int head = grevlex_range(a, b, 0, k);
      if (head != 0) return head;
      return grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

RingContext::RingContext(std::uint64_t characteristic, std::vector<std::string> variables,
                         MonomialOrder order)
    : field_(characteristic), vars_(std::move(variables)), order_(order) {
  if (vars_.empty()) throw PreconditionError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const std::string& v : vars_) {
    if (v.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(v).second) {
      throw PreconditionError("duplicate variable name '" + v + "'");
    }
  }
  if (order_.kind() == MonomialOrder::Kind::block && order_.block_size() > vars_.size()) {
    throw PreconditionError("block order eliminates more variables than the ring has");
  }
}

std::optional<std::size_t> RingContext::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool RingContext::compatible_with(const RingContext& other) const {
  return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
}

RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> variables,
                  MonomialOrder order) {
  return std::make_shared<RingContext>(characteristic, std::move(variables), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->compatible_with(*b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw ContextMismatchError("operands come from different ring contexts");
  }
}

}  // namespace frobkit
