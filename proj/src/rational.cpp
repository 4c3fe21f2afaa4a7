#include "amn/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace amn {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  return to_decimal(value_.get_num()) + "/" + to_decimal(value_.get_den());
}

std::string Rational::to_short_string() const {
  if (is_integer()) return to_decimal(value_.get_num());
  return to_string();
}

std::size_t Rational::bit_length() const {
  const std::size_t n = sgn(value_.get_num()) == 0 ? 0 : mpz_sizeinbase(value_.get_num_mpz_t(), 2);
  const std::size_t d = mpz_sizeinbase(value_.get_den_mpz_t(), 2);
  return std::max(n, d);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, unsigned n) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), n);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_short_string(); }

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const bool digits_only =
      !s.empty() && std::all_of(s.begin() + (s.front() == '-' ? 1 : 0), s.end(),
                                [](char c) { return c >= '0' && c <= '9'; }) &&
      s != "-";
  if (!digits_only) throw std::invalid_argument("not an integer: '" + s + "'");
  return BigInt(s, 10);
}

}  // namespace amn
