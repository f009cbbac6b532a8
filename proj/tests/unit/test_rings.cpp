#include <doctest.h>

#include <numeric>
#include <random>

#include "ffmat/errors.hpp"
#include "ffmat/rings.hpp"
#include "support.hpp"

using namespace ffmat;
using ffmat::testing::el;

namespace {

Polynomial poly(const std::string& s) { return el(Ring::Qx, s).polynomial(); }

}  // namespace

TEST_CASE("polynomial arithmetic and trimming") {
  const Polynomial x = Polynomial::x();
  const Polynomial p = x * x - Polynomial::constant(1);
  CHECK(p.degree() == 2);
  CHECK(p.term_count() == 2);
  CHECK(to_string(p) == "x^2-1");
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(p.evaluate(Rational(3)) == 8);
  CHECK(to_string(p.scaled(Rational(-1, 2))) == "-1/2*x^2+1/2");
}

TEST_CASE("polynomial division satisfies a = q b + r") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = ffmat::testing::random_poly(rng, 6);
    Polynomial b = ffmat::testing::random_poly(rng, 3);
    if (b.is_zero()) b = Polynomial::constant(2);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(divmod(Polynomial::x(), Polynomial()), ZeroDivisor);
}

TEST_CASE("polynomial gcd is monic and divides both") {
  const Polynomial g = gcd(poly("2*x^3+2*x^2"), poly("x^2-1"));
  CHECK(to_string(g) == "x+1");
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(to_string(gcd(poly("3/2*x"), Polynomial())) == "x");
}

TEST_CASE("integer gcd and exact division") {
  const RingElement a(BigInt(-28490930)), b(BigInt(55072620));
  CHECK(gcd(a, b) == RingElement(BigInt(std::gcd(-28490930L, 55072620L))));
  CHECK(gcd(a, b).integer() == 10);
  CHECK(exact_div(a, RingElement(BigInt(-10))).integer() == 2849093);
  CHECK_THROWS_AS(exact_div(a, RingElement(BigInt(3))), NotDivisible);
  CHECK_THROWS_AS(exact_div(a, RingElement(BigInt(0))), ZeroDivisor);
  CHECK(gcd(RingElement(BigInt(0)), RingElement(BigInt(-4))).integer() == 4);
  CHECK(divides(RingElement(BigInt(7)), RingElement(BigInt(0))));
  CHECK_FALSE(divides(RingElement(BigInt(0)), RingElement(BigInt(7))));
}

TEST_CASE("gcd over sequences") {
  const std::vector<RingElement> row{RingElement(BigInt(-126)), RingElement(BigInt(298)),
                                     RingElement(BigInt(-1186)), RingElement(BigInt(1044))};
  CHECK(gcd_seq(row).integer() == 2);
  CHECK(gcd_seq(std::span<const RingElement>{}).is_zero());
  CHECK(gcd_seq(std::span<const RingElement>{}, Ring::Qx).ring() == Ring::Qx);
  const std::vector<RingElement> polys{el(Ring::Qx, "1/2*x^3+1/2*x^2"), el(Ring::Qx, "-1/2*x^4-1/2*x^3")};
  CHECK(to_string(gcd_seq(polys, Ring::Qx)) == "x^3+x^2");
}

TEST_CASE("units, canonical forms and ring mismatch") {
  CHECK(RingElement(BigInt(-1)).is_unit());
  CHECK_FALSE(RingElement(BigInt(2)).is_unit());
  CHECK(el(Ring::Qx, "-3/2").is_unit());
  CHECK_FALSE(el(Ring::Qx, "x").is_unit());
  CHECK(canonical(RingElement(BigInt(-6))).integer() == 6);
  CHECK(to_string(canonical(el(Ring::Qx, "-2*x+2"))) == "x-1");
  CHECK(to_string(unit_part(el(Ring::Qx, "-2*x+2"))) == "-2");
  CHECK_THROWS_AS(RingElement(BigInt(1)) + el(Ring::Qx, "x"), RingMismatch);
  CHECK_THROWS_AS(gcd(RingElement(BigInt(1)), el(Ring::Qx, "x")), RingMismatch);
}

TEST_CASE("size measure orders by degree, then terms, then magnitude") {
  CHECK(size_measure(RingElement(BigInt(-3))) < size_measure(RingElement(BigInt(4))));
  CHECK(size_measure(el(Ring::Qx, "100")) < size_measure(el(Ring::Qx, "x")));
  CHECK(size_measure(el(Ring::Qx, "x")) < size_measure(el(Ring::Qx, "x+1")));
  CHECK(size_measure(el(Ring::Qx, "1/2*x+1")) < size_measure(el(Ring::Qx, "3*x+1")));
  CHECK_THROWS_AS(size_measure(RingElement(BigInt(0))), ZeroElement);
}

TEST_CASE("element parsing and printing") {
  for (const char* text : {"0", "x", "-x", "x^2-1", "-1/2*x^3+x", "3/2*x", "-9/4*x", "7"}) {
    CHECK(to_string(el(Ring::Qx, text)) == text);
  }
  CHECK(to_string(el(Ring::Qx, "x^2+x-x+x^2")) == "2*x^2");
  CHECK(to_string(el(Ring::Qx, "2/4*x^0")) == "1/2");
  CHECK(to_string(el(Ring::Z, "-0012")) == "-12");
  CHECK_THROWS_AS(el(Ring::Z, "x"), RingMismatch);
  CHECK_THROWS_AS(el(Ring::Z, "1/2"), RingMismatch);
  CHECK_THROWS_AS(el(Ring::Qx, "1/0"), ParseError);
  try {
    el(Ring::Qx, "x^^2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
}
