#include <string>
#include <utility>

#include "ffmat/errors.hpp"
#include "ffmat/rings.hpp"

namespace ffmat {

std::string_view ring_name(Ring ring) { return ring == Ring::Z ? "Z" : "Q[x]"; }

RingElement RingElement::zero(Ring ring) {
  return ring == Ring::Z ? RingElement(BigInt(0)) : RingElement(Polynomial{});
}

RingElement RingElement::one(Ring ring) { return from_int(ring, 1); }

RingElement RingElement::from_int(Ring ring, long value) {
  if (ring == Ring::Z) return RingElement(BigInt(value));
  return RingElement(Polynomial::constant(Rational(value)));
}

bool RingElement::is_zero() const {
  if (auto z = std::get_if<BigInt>(&value_)) return sgn(*z) == 0;
  return std::get<Polynomial>(value_).is_zero();
}

bool RingElement::is_one() const {
  if (auto z = std::get_if<BigInt>(&value_)) return *z == 1;
  const auto& p = std::get<Polynomial>(value_);
  return p.degree() == 0 && p.leading() == 1;
}

bool RingElement::is_unit() const {
  if (auto z = std::get_if<BigInt>(&value_)) return abs(*z) == 1;
  return std::get<Polynomial>(value_).degree() == 0;
}

const BigInt& RingElement::integer() const {
  if (auto z = std::get_if<BigInt>(&value_)) return *z;
  throw RingMismatch("expected an element of Z, got Q[x]");
}

const Polynomial& RingElement::polynomial() const {
  if (auto p = std::get_if<Polynomial>(&value_)) return *p;
  throw RingMismatch("expected an element of Q[x], got Z");
}

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring()) {
    throw RingMismatch("operands live in different rings (" + std::string(ring_name(a.ring())) +
                       " vs " + std::string(ring_name(b.ring())) + ")");
  }
}

RingElement RingElement::operator-() const {
  if (auto z = std::get_if<BigInt>(&value_)) return RingElement(BigInt(-*z));
  return RingElement(-std::get<Polynomial>(value_));
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(*this, other);
  if (auto z = std::get_if<BigInt>(&value_)) {
    *z += std::get<BigInt>(other.value_);
  } else {
    std::get<Polynomial>(value_) += std::get<Polynomial>(other.value_);
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(*this, other);
  if (auto z = std::get_if<BigInt>(&value_)) {
    *z -= std::get<BigInt>(other.value_);
  } else {
    std::get<Polynomial>(value_) -= std::get<Polynomial>(other.value_);
  }
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_ring(*this, other);
  if (auto z = std::get_if<BigInt>(&value_)) {
    *z *= std::get<BigInt>(other.value_);
  } else {
    std::get<Polynomial>(value_) *= std::get<Polynomial>(other.value_);
  }
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring()) return false;
  return a.value_ == b.value_;
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw ZeroDivisor();
  if (a.ring() == Ring::Z) {
    const BigInt& num = a.integer();
    const BigInt& den = b.integer();
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
      throw NotDivisible(num.get_str() + " is not divisible by " + den.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return RingElement(std::move(q));
  }
  auto [q, r] = divmod(a.polynomial(), b.polynomial());
  if (!r.is_zero()) {
    throw NotDivisible(to_string(a) + " is not divisible by " + to_string(b));
  }
  return RingElement(std::move(q));
}

bool divides(const RingElement& d, const RingElement& a) {
  require_same_ring(d, a);
  if (d.is_zero()) return a.is_zero();
  if (a.ring() == Ring::Z) {
    return mpz_divisible_p(a.integer().get_mpz_t(), d.integer().get_mpz_t()) != 0;
  }
  return divmod(a.polynomial(), d.polynomial()).remainder.is_zero();
}

RingElement canonical(const RingElement& a) {
  if (a.ring() == Ring::Z) return RingElement(BigInt(abs(a.integer())));
  return RingElement(monic(a.polynomial()));
}

RingElement unit_part(const RingElement& a) {
  if (a.is_zero()) return RingElement::one(a.ring());
  if (a.ring() == Ring::Z) return RingElement::from_int(Ring::Z, sgn(a.integer()));
  return RingElement(Polynomial::constant(a.polynomial().leading()));
}

RingElement gcd(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  if (a.ring() == Ring::Z) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return RingElement(std::move(g));
  }
  return RingElement(gcd(a.polynomial(), b.polynomial()));
}

RingElement gcd_seq(std::span<const RingElement> values, Ring ring) {
  if (values.empty()) return RingElement::zero(ring);
  RingElement g = canonical(values.front());
  for (std::size_t i = 1; i < values.size() && !g.is_one(); ++i) g = gcd(g, values[i]);
  return g;
}

DivMod<RingElement> divmod(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw ZeroDivisor();
  if (a.ring() == Ring::Z) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.integer().get_mpz_t(), b.integer().get_mpz_t());
    return {RingElement(std::move(q)), RingElement(std::move(r))};
  }
  auto [q, r] = divmod(a.polynomial(), b.polynomial());
  return {RingElement(std::move(q)), RingElement(std::move(r))};
}

SizeKey size_measure(const RingElement& a) {
  if (a.is_zero()) throw ZeroElement("size of zero is undefined");
  SizeKey key;
  if (a.ring() == Ring::Z) {
    key.magnitude = abs(a.integer());
    return key;
  }
  const Polynomial& p = a.polynomial();
  key.degree = p.degree();
  key.terms = p.term_count();
  BigInt common(1);
  for (const auto& c : p.coefficients()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  key.magnitude = 0;
  for (const auto& c : p.coefficients()) {
    BigInt scaled = abs(c.get_num()) * (common / c.get_den());
    if (scaled > key.magnitude) key.magnitude = scaled;
  }
  return key;
}

}  // namespace ffmat
