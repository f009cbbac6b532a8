#include <doctest.h>

#include <random>

#include "ffmat/errors.hpp"
#include "ffmat/matrix.hpp"
#include "ffmat/matrix_io.hpp"
#include "support.hpp"

using namespace ffmat;
using namespace ffmat::testing;

TEST_CASE("identity and products") {
  const ExactMatrix m5 = load("M5.mat");
  const ExactMatrix id = ExactMatrix::identity(Ring::Z, 5);
  CHECK(multiply(id, m5) == m5);
  CHECK(multiply(m5, id) == m5);
  CHECK_THROWS_AS(multiply(m5, ExactMatrix::identity(Ring::Z, 4)), ShapeMismatch);
  CHECK_THROWS_AS(multiply(m5, ExactMatrix::identity(Ring::Qx, 5)), RingMismatch);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix a = random_z(rng, 3, 4, -9, 9), b = random_z(rng, 4, 2, -9, 9);
    CHECK(multiply(a, b) == naive_product(a, b));
  }
}

TEST_CASE("transpose, scale and shape predicates") {
  const ExactMatrix q3 = load("Q3.mat");
  CHECK(transpose(transpose(q3)) == q3);
  const ExactMatrix z = transpose(ExactMatrix(Ring::Z, 2, 3));
  CHECK(z.rows() == 3);
  CHECK(z.cols() == 2);
  CHECK(z.is_zero());
  CHECK(scale(q3, el(Ring::Qx, "2"))(0, 0) == el(Ring::Qx, "2*x"));
  CHECK(ExactMatrix::identity(Ring::Z, 3).is_diagonal());
  CHECK(ExactMatrix::integers({{1, 2}, {2, 5}}).is_symmetric());
  CHECK(ExactMatrix::integers({{1, 2}, {0, 5}}).is_upper_triangular());
  CHECK_FALSE(ExactMatrix::integers({{1, 2}, {0, 5}}).is_lower_triangular());
}

TEST_CASE("permutations") {
  Permutation p = Permutation::identity(4);
  CHECK(p.is_identity());
  p.swap(0, 2);
  CHECK(p.images() == std::vector<std::size_t>{2, 1, 0, 3});
  CHECK((p * p.inverse()).is_identity());
  const Permutation c({1, 2, 0});
  CHECK((c * c).images() == std::vector<std::size_t>{2, 0, 1});
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  const ExactMatrix a = ExactMatrix::integers({{1, 2}, {3, 4}});
  const ExactMatrix s = select(a, Permutation({1, 0}), Permutation::identity(2));
  CHECK(s == ExactMatrix::integers({{3, 4}, {1, 2}}));
}

TEST_CASE("minors and determinants agree with the Leibniz oracle") {
  const ExactMatrix m5 = load("M5.mat");
  CHECK(minor(m5, {0, 1, 2}, {0, 1, 3}).integer() == -414885);
  CHECK(leibniz_minor(m5, {0, 1, 2}, {0, 1, 3}).integer() == -414885);
  CHECK(determinant(m5).integer() == BigInt("11988124645"));
  CHECK(determinant(load("Q3.mat")) == el(Ring::Qx, "-2*x+2"));
  CHECK(determinant(ExactMatrix(Ring::Z, 0, 0)).is_one());
  CHECK_THROWS_AS(determinant(ExactMatrix(Ring::Z, 2, 3)), ShapeMismatch);

  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int t = 0; t < 5; ++t) {
      const ExactMatrix a = random_z(rng, n, n, -20, 20);
      CHECK(determinant(a) == leibniz_det(a));
      const ExactMatrix b = random_qx(rng, n, n, 2);
      if (n <= 4) CHECK(determinant(b) == leibniz_det(b));
    }
  }
}

TEST_CASE("index subsets") {
  const auto s = index_subsets(4, 2);
  CHECK(s.size() == 6);
  CHECK(s.front() == IndexSet{0, 1});
  CHECK(s.back() == IndexSet{2, 3});
  CHECK(index_subsets(3, 0).size() == 1);
  CHECK(index_subsets(2, 3).empty());
}

TEST_CASE("matrix text format") {
  const ExactMatrix m5 = load("M5.mat");
  CHECK(m5.rows() == 5);
  CHECK(m5 == ExactMatrix::integers({{8, 49, 45, -77, 66},
                                     {-10, -77, -19, -52, 48},
                                     {51, 18, -81, 31, 69},
                                     {-97, -58, 37, 41, 22},
                                     {-60, 0, -25, -18, -92}}));
  for (const char* name : {"M5.mat", "P4.mat", "Q3.mat"}) {
    const ExactMatrix a = load(name);
    CHECK(parse_matrix(serialize_matrix(a)) == a);
  }
  CHECK(serialize_matrix(ExactMatrix::integers({{1, -2}})) == "ring Z\n1 2\n1 -2\n");
  CHECK(parse_matrix("# comment\n\nring Z\n0 0\n").rows() == 0);
  CHECK(parse_matrix("ring Q[x]\n2 0\n").cols() == 0);
  CHECK_THROWS_AS(parse_matrix("ring Z\n1 2\n1 x\n"), RingMismatch);
  CHECK_THROWS_AS(parse_matrix("ring R\n1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("ring Z\n2 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/file.mat"), ParseError);
  try {
    parse_matrix("ring Q[x]\n1 2\nx 3/\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
}
