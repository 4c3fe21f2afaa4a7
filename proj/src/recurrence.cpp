#include "amn/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace amn {

namespace {

const RatPoly kT = RatPoly::monomial(Rational(1), 1);

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("seed defined for m ≥ 1");
}

void require_shape(const AnsatzSolution& s) {
  const auto n = static_cast<std::size_t>(s.m) + 1;
  if (s.m < 0 || s.a.size() != n || s.b.size() != n)
    throw std::invalid_argument("ansatz of order " + std::to_string(s.m) + " needs m+1 coefficients per list");
  if (s.a[0] != Rational(1)) throw std::invalid_argument("ansatz requires a0 = 1");
  if (s.b[0] != s.b0) throw std::invalid_argument("ansatz requires b[0] = b0");
}

}  // namespace

CoeffPair RecurrenceMatrix::apply(const CoeffPair& prev) const {
  return {prev.j + 1, entries[0] * prev.p + entries[1] * prev.q, entries[2] * prev.p + entries[3] * prev.q};
}

CoeffPair seed_pair(int m) {
  require_order(m);
  return {1, RatPoly{Rational(2 * m + 3, 2), Rational(-3, 2)},
          RatPoly{Rational(10 * m + 9, 10), Rational(-9, 10)}};
}

RecurrenceMatrix recurrence_matrix(int m, int p) {
  if (p < 2 || p > m) throw std::invalid_argument("recurrence index must lie in [2, m]");
  const long k = 2L * m + 5 - 2L * p;
  const long two_p = 2L * p;
  const long denom = two_p * (2L * p + 3);
  RecurrenceMatrix out{m, p, {}};
  out.entries[0] = RatPoly{Rational(k, two_p)};
  out.entries[1] = kT * Rational(-3, two_p);
  out.entries[2] = RatPoly{Rational(3 * k, denom)};
  out.entries[3] = RatPoly{Rational(two_p * (2L * m + 2 - 2L * p), denom), Rational(-9, denom)};
  return out;
}

CoeffPair advance_pair(int m, int j, const CoeffPair& prev) {
  if (prev.j != j - 1) throw std::invalid_argument("pair index must be j−1");
  return recurrence_matrix(m, j).apply(prev);
}

std::vector<CoeffPair> coefficient_polynomials(int m) {
  require_order(m);
  std::vector<CoeffPair> chain;
  chain.reserve(static_cast<std::size_t>(m) + 1);
  chain.push_back({0, RatPoly{Rational(1)}, RatPoly{Rational(1)}});
  chain.push_back(seed_pair(m));
  for (int j = 2; j <= m; ++j) chain.push_back(advance_pair(m, j, chain.back()));
  return chain;
}

std::vector<CoeffPair> forward_substitution_chain(int m) {
  require_order(m);
  std::vector<CoeffPair> chain;
  chain.reserve(static_cast<std::size_t>(m) + 1);
  chain.push_back({0, RatPoly{Rational(1)}, RatPoly{Rational(1)}});
  for (int j = 1; j <= m; ++j) {
    const CoeffPair& prev = chain.back();
    // (2j-1): 2j·a_j = (2m+5−2j)·a_{j−1} − 3·b0·b_{j−1}, with b0·b_{j−1} = t·q_{j−1}
    RatPoly p = (prev.p * Rational(2L * m + 5 - 2L * j) - (kT * prev.q) * Rational(3)) * Rational(1, 2L * j);
    // (2j): (2j+3)·b_j = (2m+2−2j)·b_{j−1} + 3·b0·a_j, divided through by b0
    RatPoly q = (prev.q * Rational(2L * m + 2 - 2L * j) + p * Rational(3)) * Rational(1, 2L * j + 3);
    chain.push_back({j, std::move(p), std::move(q)});
  }
  return chain;
}

AmnPolynomial build_amn_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("P_m defined for m ≥ 1");
  const CoeffPair last = coefficient_polynomials(m).back();
  RatPoly rational = kT * last.q - last.p;
  auto [integer, scale] = primitive_integer_form(rational);
  return {m, std::move(rational), std::move(integer), std::move(scale)};
}

ClosedFormExtremes closed_form_extremes(int m) {
  require_order(m);
  BigInt odd_product = 1;  // 5·7·9⋯(2m+3)
  BigInt two_pow_factorial = 1;  // 2^m·m!
  BigInt nine_pow = 1;
  for (int k = 1; k <= m; ++k) {
    odd_product *= 2 * k + 3;
    two_pow_factorial *= 2 * k;
    nine_pow *= 9;
  }
  const BigInt sign = (m % 2 == 0) ? 1 : -1;
  return {Rational(odd_product, two_pow_factorial), Rational(sign * nine_pow, odd_product * two_pow_factorial)};
}

AnsatzSolution instantiate_solution(int m, const Rational& b0) {
  return instantiate_solution(coefficient_polynomials(m), b0);
}

AnsatzSolution instantiate_solution(const std::vector<CoeffPair>& chain, const Rational& b0) {
  if (chain.size() < 2) throw std::invalid_argument("chain must hold pairs 0..m with m ≥ 1");
  const Rational t = b0 * b0;
  AnsatzSolution s{static_cast<int>(chain.size()) - 1, b0, {}, {}};
  s.a.reserve(chain.size());
  s.b.reserve(chain.size());
  for (const auto& pair : chain) {
    s.a.push_back(poly_eval(pair.p, t));
    s.b.push_back(b0 * poly_eval(pair.q, t));
  }
  return s;
}

AnsatzSolution base_solution() { return {0, Rational(1), {Rational(1)}, {Rational(1)}}; }

std::vector<Rational> verify_system(const AnsatzSolution& s) {
  require_shape(s);
  const long m = s.m;
  std::vector<Rational> residuals;
  residuals.reserve(2 * static_cast<std::size_t>(m) + 1);
  for (long j = 1; j <= m; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    residuals.push_back(Rational(2 * j) * s.a[ju] - Rational(2 * m + 5 - 2 * j) * s.a[ju - 1] +
                        Rational(3) * s.b0 * s.b[ju - 1]);
    residuals.push_back(Rational(2 * j + 3) * s.b[ju] - Rational(2 * m + 2 - 2 * j) * s.b[ju - 1] -
                        Rational(3) * s.b0 * s.a[ju]);
  }
  residuals.push_back(s.a.back() - s.b0 * s.b.back());
  return residuals;
}

bool solves_system(const AnsatzSolution& s) {
  for (const auto& r : verify_system(s))
    if (!r.is_zero()) return false;
  return true;
}

AnsatzSolution lift_solution(const AnsatzSolution& s) {
  if (!solves_system(s)) throw std::invalid_argument("lift requires an exact (L_m) solution");
  const auto n = static_cast<std::size_t>(s.m) + 1;
  AnsatzSolution out{s.m + 1, s.b0, std::vector<Rational>(n + 1), std::vector<Rational>(n + 1)};
  for (std::size_t i = 0; i < n; ++i) {
    out.a[i] += s.a[i];
    out.a[i + 1] += s.a[i];
    out.b[i] += s.b[i];
    out.b[i + 1] += s.b[i];
  }
  return out;
}

}  // namespace amn
