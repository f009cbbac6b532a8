#include <cctype>
#include <string>

#include "ffmat/errors.hpp"
#include "ffmat/rings.hpp"

namespace ffmat {

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Rational& c = coeffs[k];
    if (sgn(c) == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      std::string mono = k == 1 ? "x" : "x^" + std::to_string(k);
      if (c == 1) {
        term = mono;
      } else if (c == -1) {
        term = "-" + mono;
      } else {
        term = c.get_str() + "*" + mono;
      }
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

std::string to_string(const RingElement& a) {
  if (a.ring() == Ring::Z) return a.integer().get_str();
  return to_string(a.polynomial());
}

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, Ring ring) : text_(text), ring_(ring) {}

  RingElement parse() {
    if (text_.empty()) fail("empty entry");
    if (ring_ == Ring::Z) return parse_integer_entry();
    Polynomial sum;
    bool first = true;
    while (pos_ < text_.size() || first) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      sum += negative ? -term : term;
      first = false;
    }
    return RingElement(std::move(sum));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  RingElement parse_integer_entry() {
    for (char ch : text_) {
      if (ch == 'x' || ch == '/') {
        throw RingMismatch("entry '" + std::string(text_) + "' is not an element of Z");
      }
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    BigInt value = parse_digits();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return RingElement(negative ? BigInt(-value) : value);
  }

  BigInt parse_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a digit");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial parse_term() {
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = parse_digits();
      BigInt den(1);
      if (peek() == '/') {
        ++pos_;
        den = parse_digits();
        if (sgn(den) == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      if (peek() != '*') return Polynomial::constant(coeff);
      ++pos_;
      if (peek() != 'x') fail("expected 'x' after '*'");
    } else if (peek() != 'x') {
      fail(pos_ < text_.size() ? "unexpected character '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of entry");
    }
    ++pos_;  // 'x'
    std::size_t degree = 1;
    if (peek() == '^') {
      ++pos_;
      BigInt d = parse_digits();
      if (!d.fits_ulong_p() || d > 1000000) fail("exponent too large");
      degree = d.get_ui();
    }
    return Polynomial::monomial(coeff, degree);
  }

  std::string_view text_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_element(std::string_view text, Ring ring) {
  return ElementParser(text, ring).parse();
}

}  // namespace ffmat
