#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "amn/rational.hpp"

namespace amn {

/// Dense univariate polynomial over the rationals, coefficient i multiplies t^i.
///
/// The highest stored coefficient is never zero; the zero polynomial is the
/// empty coefficient list and has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coefficients);
  explicit RatPoly(std::vector<Rational> coefficients);

  /// c·t^power
  static RatPoly monomial(const Rational& c, int power);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  std::span<const Rational> coefficients() const { return coefficients_; }
  /// Coefficient of t^i; zero past the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly operator-() const;

  /// Multiplies by t^k.
  RatPoly shifted(int k) const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// Integer polynomial with content 1 and a positive leading coefficient.
class IntPoly {
 public:
  /// Throws unless the coefficients already satisfy the invariants.
  explicit IntPoly(std::vector<BigInt> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::span<const BigInt> coefficients() const { return coefficients_; }
  const BigInt& leading() const { return coefficients_.back(); }
  const BigInt& constant() const { return coefficients_.front(); }

  RatPoly to_rational() const;
  std::string to_string(char var = 't') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

enum class PolyOp { add, sub, mul, scale };

/// Horner evaluation, exact.
Rational poly_eval(const RatPoly& p, const Rational& x);

/// `factor` is only read for PolyOp::scale, `b` is ignored in that case.
RatPoly poly_arith(const RatPoly& a, const RatPoly& b, PolyOp op, const Rational& factor = Rational(1));

struct PrimitiveForm {
  IntPoly poly;
  /// poly == scale · input
  Rational scale;
};

/// Unique content-1, positive-leading integer multiple of p.
PrimitiveForm primitive_integer_form(const RatPoly& p);

/// p divided by its leading coefficient.
RatPoly monic_form(const RatPoly& p);

}  // namespace amn
