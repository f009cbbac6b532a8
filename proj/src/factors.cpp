#include "ffmat/factors.hpp"

namespace ffmat {
namespace {

RingElement predicted_divisor(const RingElement& a, const RingElement& b, const RingElement& p) {
  const RingElement g = gcd(a, b);
  return exact_div(g, gcd(g, p));
}

}  // namespace

std::vector<FactorPrediction> predict_row_factors(const ExactMatrix& l) {
  std::vector<FactorPrediction> out;
  const std::size_t m = l.rows();
  const std::size_t r = l.cols();
  if (m < 3) return out;
  const std::size_t last = std::min(m - 2, r == 0 ? 0 : r - 1);
  for (std::size_t k = 1; k <= last; ++k) {
    const RingElement p = k >= 2 ? l(k - 2, k - 2) : RingElement::one(l.ring());
    out.push_back({k, predicted_divisor(l(k - 1, k - 1), l(k, k - 1), p)});
  }
  return out;
}

std::vector<FactorPrediction> predict_column_factors(const ExactMatrix& u, std::size_t rows_of_a) {
  std::vector<FactorPrediction> out;
  const std::size_t r = u.rows();
  if (rows_of_a < 3) return out;
  const std::size_t last = std::min(rows_of_a - 2, r == 0 ? 0 : r - 1);
  for (std::size_t k = 1; k <= last; ++k) {
    const RingElement p = k >= 2 ? u(k - 2, k - 2) : RingElement::one(u.ring());
    out.push_back({k, predicted_divisor(u(k - 1, k - 1), u(k - 1, k), p)});
  }
  return out;
}

FactorReport analyze_factors(const FFLUDecomposition& dec, std::size_t max_factor_bits) {
  FactorReport report;
  report.ring = dec.ring();
  report.row_gcds = row_gcds(dec.U);
  report.column_gcds = column_gcds(dec.L);
  report.predicted_row_divisors = predict_row_factors(dec.L);
  report.predicted_column_divisors = predict_column_factors(dec.U, dec.L.rows());
  if (report.ring == Ring::Z) {
    for (const auto& g : report.row_gcds) {
      if (g.is_zero() || mpz_sizeinbase(g.integer().get_mpz_t(), 2) > max_factor_bits) {
        report.row_gcd_factors.emplace_back(std::nullopt);
      } else {
        report.row_gcd_factors.emplace_back(factor_integer(g.integer()));
      }
    }
  }
  return report;
}

}  // namespace ffmat
