#pragma once

// Exact arithmetic for the two principal ideal domains the library works
// over: the integers and univariate polynomials with rational coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ffmat {

using BigInt = mpz_class;
using Rational = mpq_class;  // GMP keeps it reduced with a positive denominator

/// Dense univariate polynomial over the rationals. Coefficient i belongs to
/// x^i; the highest stored coefficient is nonzero, the zero polynomial is the
/// empty sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial x() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;
  std::size_t term_count() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Rational& c) const;
  Rational evaluate(const Rational& at) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

template <typename T>
struct DivMod {
  T quotient;
  T remainder;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
DivMod<Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial monic(const Polynomial& p);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

enum class Ring { Z, Qx };

std::string_view ring_name(Ring ring);

/// Element of Z or Q[x]. Binary operations require both operands to live in
/// the same ring and throw RingMismatch otherwise.
class RingElement {
 public:
  RingElement() : value_(BigInt(0)) {}
  RingElement(BigInt value) : value_(std::move(value)) {}
  RingElement(Polynomial value) : value_(std::move(value)) {}

  static RingElement zero(Ring ring);
  static RingElement one(Ring ring);
  static RingElement from_int(Ring ring, long value);

  Ring ring() const noexcept {
    return std::holds_alternative<BigInt>(value_) ? Ring::Z : Ring::Qx;
  }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  const BigInt& integer() const;
  const Polynomial& polynomial() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  std::variant<BigInt, Polynomial> value_;
};

void require_same_ring(const RingElement& a, const RingElement& b);

/// q with b*q = a. Throws ZeroDivisor for b = 0 and NotDivisible if the
/// quotient leaves the ring.
RingElement exact_div(const RingElement& a, const RingElement& b);
/// True iff d divides a. Only 0 divides 0.
bool divides(const RingElement& d, const RingElement& a);

/// Canonical associate: nonnegative in Z, monic in Q[x] (0 stays 0).
RingElement canonical(const RingElement& a);
/// The unit u with a = u * canonical(a); 1 for a = 0.
RingElement unit_part(const RingElement& a);

RingElement gcd(const RingElement& a, const RingElement& b);
/// gcd of all entries; the empty sequence gives zero in `ring`.
RingElement gcd_seq(std::span<const RingElement> values, Ring ring = Ring::Z);

/// Euclidean division. In Z the remainder has the sign of the dividend and
/// |r| < |b|; in Q[x] deg r < deg b.
DivMod<RingElement> divmod(const RingElement& a, const RingElement& b);

/// Total order on element sizes used for pivot selection. For integers only
/// `magnitude` is populated (the absolute value); for polynomials the tuple
/// is (degree, nonzero terms, max |c_i * lcm(denominators)|).
struct SizeKey {
  std::ptrdiff_t degree = 0;
  std::size_t terms = 1;
  BigInt magnitude;

  friend bool operator==(const SizeKey& a, const SizeKey& b) {
    return a.degree == b.degree && a.terms == b.terms && a.magnitude == b.magnitude;
  }
  friend bool operator<(const SizeKey& a, const SizeKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.terms != b.terms) return a.terms < b.terms;
    return a.magnitude < b.magnitude;
  }
};

/// Throws ZeroElement for 0.
SizeKey size_measure(const RingElement& a);

// Text syntax: integers in decimal, rationals as a/b, polynomials as sums of
// c*x^k terms without whitespace, e.g. "-1/2*x^3+x".
std::string to_string(const Polynomial& p);
std::string to_string(const RingElement& a);
/// Throws ParseError (column relative to `text`, line 1) or RingMismatch.
RingElement parse_element(std::string_view text, Ring ring);

}  // namespace ffmat
