#include <doctest.h>

#include <random>

#include "ffmat/bareiss.hpp"
#include "ffmat/errors.hpp"
#include "ffmat/smith.hpp"
#include "support.hpp"

using namespace ffmat;
using namespace ffmat::testing;

namespace {

RingElement gcd_of_minors(const ExactMatrix& a, std::size_t k) {
  RingElement out = RingElement::zero(a.ring());
  for (const auto& r : index_subsets(a.rows(), k))
    for (const auto& c : index_subsets(a.cols(), k)) out = gcd(out, leibniz_minor(a, r, c));
  return out;
}

}  // namespace

TEST_CASE("Smith form of small integer matrices") {
  const SmithForm s = smith_normal_form(ExactMatrix::integers({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  CHECK(s.diagonal == std::vector<RingElement>{RingElement(BigInt(2)), RingElement(BigInt(2)),
                                               RingElement(BigInt(156))});
  const SmithForm z = smith_normal_form(ExactMatrix::integers({{1, 2}, {2, 4}, {3, 6}}));
  CHECK(z.diagonal.size() == 2);
  CHECK(z.diagonal[0].integer() == 1);
  CHECK(z.diagonal[1].is_zero());
  CHECK(z.determinantal[1].is_zero());
  CHECK(smith_normal_form(ExactMatrix(Ring::Z, 0, 3)).diagonal.empty());
}

TEST_CASE("M5 and P4 Smith forms") {
  const SmithForm m = smith_normal_form(load("M5.mat"));
  CHECK(m.diagonal[3].integer() == 1);
  CHECK(m.diagonal[4].integer() == BigInt("11988124645"));
  CHECK(m.determinantal[4].integer() == BigInt("11988124645"));

  const ExactMatrix p4 = load("P4.mat");
  const SmithForm p = smith_normal_form(p4);
  CHECK(p.diagonal == std::vector<RingElement>{el(Ring::Qx, "1"), el(Ring::Qx, "x"),
                                               el(Ring::Qx, "x^2+x"), el(Ring::Qx, "x^3-x")});
  const std::vector<RingElement> dstar{el(Ring::Qx, "1"), el(Ring::Qx, "x"), el(Ring::Qx, "x^3+x^2"),
                                       el(Ring::Qx, "x^6+x^5-x^4-x^3")};
  CHECK(p.determinantal == dstar);
  CHECK(determinantal_divisors_bruteforce(p4, 4) == dstar);
}

TEST_CASE("brute-force determinantal divisors against Leibniz minors") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + t % 2;
    const ExactMatrix a = random_z(rng, n, n, -12, 12);
    const auto d = determinantal_divisors_bruteforce(a, n);
    const SmithForm s = smith_normal_form(a);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(d[k - 1] == canonical(gcd_of_minors(a, k)));
      CHECK(s.determinantal[k - 1] == d[k - 1]);
    }
  }
  CHECK_THROWS_AS(determinantal_divisors_bruteforce(ExactMatrix(Ring::Z, 7, 7), 2), TooLarge);
  CHECK_THROWS_AS(determinantal_divisors_bruteforce(ExactMatrix(Ring::Z, 3, 3), 4), TooLarge);
}

TEST_CASE("divisor cancellation") {
  const ExactMatrix p4 = load("P4.mat");
  const FFLUDecomposition dec = decompose(p4);
  const SmithForm sf = smith_normal_form(p4);
  CHECK(check_determinantal_divisibility(dec, sf));
  const FFLUDecomposition c = divisor_cancellation(dec, sf);
  CHECK(scaled_reconstruction_check(c, p4));
  CHECK(c.U(2, 2) == exact_div(dec.U(2, 2), el(Ring::Qx, "x^3+x^2")));

  const ExactMatrix m5 = load("M5.mat");
  const FFLUDecomposition dm = decompose(m5);
  const FFLUDecomposition cm = divisor_cancellation(dm, smith_normal_form(m5));
  CHECK(scaled_reconstruction_check(cm, m5));
  for (std::size_t k = 0; k < 4; ++k) CHECK(cm.U.row(k) == dm.U.row(k));
  CHECK(cm.U(4, 4).is_one());
  CHECK(check_determinantal_divisibility(dm, smith_normal_form(m5)));
  CHECK(check_determinantal_divisibility(decompose(ExactMatrix::identity(Ring::Z, 3)),
                                         smith_normal_form(ExactMatrix::identity(Ring::Z, 3))));
}
