#include <algorithm>
#include <utility>

#include "ffmat/errors.hpp"
#include "ffmat/rings.hpp"

namespace ffmat {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw ZeroElement("leading coefficient of zero polynomial");
  return coeffs_.back();
}

std::size_t Polynomial::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial r = *this;
  for (auto& coeff : r.coeffs_) coeff *= c;
  return r;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

DivMod<Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDivisor();
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / bc.back();
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    Rational factor = rem[shift + db] * inv_lead;
    if (sgn(factor) == 0) continue;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= factor * bc[i];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = monic(a);
  Polynomial v = monic(b);
  while (!v.is_zero()) {
    Polynomial r = monic(divmod(u, v).remainder);
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

}  // namespace ffmat
