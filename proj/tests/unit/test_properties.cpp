#include <doctest.h>

#include "property_suite.hpp"

TEST_CASE("randomized structural properties (small run)") {
  const auto rep = ffmat::testing::run_property_suite(60, 15, 2024);
  for (const auto& f : rep.failures) MESSAGE(f);
  CHECK(rep.failures.empty());
  CHECK(rep.qr_cases > 0);
  CHECK(rep.smith_cases > 0);
}
