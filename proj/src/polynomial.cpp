#include "amn/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace amn {

namespace {

template <class Coeff>
std::string render(std::span<const Coeff> c, char var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    const Coeff& v = c[static_cast<std::size_t>(i)];
    if (sgn(v) == 0) continue;
    const bool negative = sgn(v) < 0;
    const Coeff mag = negative ? Coeff(-v) : v;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : coefficients_(coefficients) { trim(); }

RatPoly::RatPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

Rational RatPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coefficients_.back();
}

Rational RatPoly::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  for (auto& x : coefficients_) x *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& x : out.coefficients_) x = -x;
  return out;
}

RatPoly RatPoly::shifted(int k) const {
  if (is_zero()) return {};
  if (k < 0) throw std::invalid_argument("negative shift");
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coefficients_.begin(), coefficients_.end());
  return RatPoly(std::move(v));
}

std::string RatPoly::to_string(char var) const {
  std::vector<mpq_class> raw;
  raw.reserve(coefficients_.size());
  for (const auto& c : coefficients_) raw.push_back(c.raw());
  return render<mpq_class>(raw, var);
}

void RatPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

IntPoly::IntPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) throw std::invalid_argument("integer polynomial must be nonzero");
  if (coefficients_.back() < 0) throw std::invalid_argument("leading coefficient must be positive");
  BigInt g = 0;
  for (const auto& c : coefficients_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw std::invalid_argument("integer polynomial must have content 1");
}

RatPoly IntPoly::to_rational() const {
  std::vector<Rational> v;
  v.reserve(coefficients_.size());
  for (const auto& c : coefficients_) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const { return render<BigInt>(coefficients_, var); }

Rational poly_eval(const RatPoly& p, const Rational& x) { return p(x); }

RatPoly poly_arith(const RatPoly& a, const RatPoly& b, PolyOp op, const Rational& factor) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
    case PolyOp::scale:
      return a * factor;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

PrimitiveForm primitive_integer_form(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot normalize zero polynomial");
  // Clear denominators with their lcm, then divide out the content.
  BigInt lcm = 1;
  for (const auto& c : p.coefficients()) {
    const BigInt d = c.den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> ints;
  ints.reserve(p.coefficients().size());
  BigInt content = 0;
  for (const auto& c : p.coefficients()) {
    BigInt v = c.num() * (lcm / c.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return {IntPoly(std::move(ints)), Rational(lcm, content)};
}

RatPoly monic_form(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot normalize zero polynomial");
  return p * (Rational(1) / p.leading());
}

}  // namespace amn
