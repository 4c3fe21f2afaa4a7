#include "amn/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "amn/parallel.hpp"
#include "amn/recurrence.hpp"

namespace amn {

namespace {

using Coeffs = std::vector<BigInt>;

// Residue filters for candidate roots. Any modulus gives a valid necessary
// condition; primality is not needed.
constexpr std::uint64_t kModuli[] = {2305843009213693951ULL, 1000000000000000009ULL};

std::uint64_t mod_of(const BigInt& x, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % m);
}

struct ResidueImage {
  std::uint64_t modulus;
  std::vector<std::uint64_t> coeffs;
};

std::vector<ResidueImage> residue_images(const Coeffs& c) {
  std::vector<ResidueImage> out;
  for (auto m : kModuli) {
    ResidueImage img{m, {}};
    img.coeffs.reserve(c.size());
    for (const auto& x : c) img.coeffs.push_back(mod_of(x, m));
    out.push_back(std::move(img));
  }
  return out;
}

// q^n·P(p/q) by homogeneous Horner.
std::uint64_t homogeneous_value(const ResidueImage& img, std::uint64_t p, std::uint64_t q) {
  const auto m = img.modulus;
  std::uint64_t acc = img.coeffs.back();
  std::uint64_t qpow = 1;
  for (std::size_t k = img.coeffs.size() - 1; k-- > 0;) {
    qpow = mulmod(qpow, q, m);
    acc = (mulmod(acc, p, m) + mulmod(img.coeffs[k], qpow, m)) % m;
  }
  return acc;
}

BigInt homogeneous_value(const Coeffs& c, const BigInt& p, const BigInt& q) {
  BigInt acc = c.back();
  BigInt qpow = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    qpow *= q;
    acc = acc * p + c[k] * qpow;
  }
  return acc;
}

bool is_root(const Coeffs& c, const std::vector<ResidueImage>& images, const BigInt& p, const BigInt& q) {
  for (const auto& img : images) {
    const std::uint64_t pm = mod_of(p, img.modulus);
    const std::uint64_t qm = mod_of(q, img.modulus);
    if (homogeneous_value(img, pm, qm) != 0) return false;
  }
  return homogeneous_value(c, p, q) == 0;
}

// Divides by (q·t − p), exactly.
Coeffs deflate_integer(const Coeffs& c, const BigInt& p, const BigInt& q) {
  const std::size_t n = c.size() - 1;
  Coeffs out(n);
  BigInt carry = 0;
  for (std::size_t k = n; k >= 1; --k) {
    BigInt v = c[k] + p * carry;
    if (!mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t())) throw std::logic_error("inexact integer deflation");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    out[k - 1] = v;
    carry = v;
  }
  return out;
}

// Smallest r ≥ 0 with r^k·|den| ≥ |num|.
BigInt ceil_kth_root_of_ratio(const BigInt& num, const BigInt& den, unsigned long k) {
  BigInt x;
  BigInt an = abs(num);
  BigInt ad = abs(den);
  mpz_cdiv_q(x.get_mpz_t(), an.get_mpz_t(), ad.get_mpz_t());
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  BigInt rk;
  mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
  if (rk < x) r += 1;
  return r;
}

// Fujiwara bound on the modulus of every complex root.
BigInt root_bound(const Coeffs& c) {
  const std::size_t n = c.size() - 1;
  BigInt best = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const BigInt& a = c[n - k];
    if (a == 0) continue;
    const BigInt den = (k == n) ? BigInt(2 * c[n]) : c[n];
    best = std::max(best, ceil_kth_root_of_ratio(a, den, k));
  }
  return 2 * best;
}

void collect_divisors(const std::vector<std::pair<BigInt, unsigned>>& factors, std::size_t idx, const BigInt& acc,
                      const BigInt& limit, std::vector<BigInt>& out) {
  if (idx == factors.size()) {
    out.push_back(acc);
    return;
  }
  BigInt v = acc;
  for (unsigned e = 0; e <= factors[idx].second; ++e) {
    if (v > limit) break;
    collect_divisors(factors, idx + 1, v, limit, out);
    v *= factors[idx].first;
  }
}

std::vector<BigInt> divisors_up_to(const std::vector<std::pair<BigInt, unsigned>>& factors, const BigInt& limit) {
  std::vector<BigInt> out;
  collect_divisors(factors, 0, BigInt(1), limit, out);
  std::sort(out.begin(), out.end());
  return out;
}

RatPoly expand_roots(const Rational& scale, const std::vector<Rational>& roots) {
  std::vector<Rational> c{scale};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return RatPoly(std::move(c));
}

}  // namespace

RootSet predicted_roots(int m) {
  if (m < 1) throw std::invalid_argument("root set defined for m ≥ 1");
  RootSet out{m, {}};
  for (int j = 1; j <= m + 1; ++j) {
    const Rational r(2 * j + 1, 3);
    out.roots.push_back(r * r);
  }
  return out;
}

std::string FactorizationReport::failure() const {
  if (ok()) return {};
  std::ostringstream os;
  os << "P_" << m << ": ";
  if (first_nonvanishing_root) {
    os << "does not vanish at predicted root " << *first_nonvanishing_root;
  } else if (first_mismatch) {
    os << "coefficient of t^" << first_mismatch->index << " differs from d_m·∏(t − λ_j): expected "
       << first_mismatch->expected << ", got " << first_mismatch->actual;
  } else if (!constant_matches) {
    os << "d_m·(−1)^{m+1}·∏λ_j ≠ −c_m";
  } else {
    os << "predicted roots are not simple";
  }
  return os.str();
}

RatPoly deflate(const RatPoly& p, const Rational& root) {
  if (p.degree() < 1) throw std::domain_error("cannot deflate a constant");
  const auto c = p.coefficients();
  const std::size_t n = c.size() - 1;
  std::vector<Rational> out(n);
  Rational carry;
  for (std::size_t k = n; k >= 1; --k) {
    carry = c[k] + carry * root;
    out[k - 1] = carry;
  }
  if (!(c[0] + carry * root).is_zero()) throw std::domain_error(root.to_short_string() + " is not a root");
  return RatPoly(std::move(out));
}

FactorizationReport verify_factorization(int m) { return verify_factorization(m, build_amn_polynomial(m).rational); }

FactorizationReport verify_factorization(int m, const RatPoly& polynomial) {
  const RootSet predicted = predicted_roots(m);
  const ClosedFormExtremes extremes = closed_form_extremes(m);
  FactorizationReport report;
  report.m = m;

  report.roots_vanish = true;
  for (const auto& r : predicted.roots) {
    if (!poly_eval(polynomial, r).is_zero()) {
      report.roots_vanish = false;
      report.first_nonvanishing_root = r;
      break;
    }
  }

  const RatPoly product = expand_roots(extremes.d, predicted.roots);
  report.product_matches = true;
  const int top = std::max(product.degree(), polynomial.degree());
  for (int i = 0; i <= top; ++i) {
    if (product.coefficient(i) != polynomial.coefficient(i)) {
      report.product_matches = false;
      report.first_mismatch = CoefficientMismatch{i, product.coefficient(i), polynomial.coefficient(i)};
      break;
    }
  }

  Rational lambda_product(1);
  for (const auto& r : predicted.roots) lambda_product *= r;
  const Rational sign((m + 1) % 2 == 0 ? 1 : -1);
  report.constant_matches = extremes.d * sign * lambda_product == -extremes.c &&
                            polynomial.coefficient(0) == -extremes.c;

  report.roots_simple = false;
  try {
    RatPoly rest = polynomial;
    for (const auto& r : predicted.roots) rest = deflate(rest, r);
    report.roots_simple = rest.degree() == 0;
  } catch (const std::domain_error&) {
  }
  return report;
}

std::vector<std::pair<BigInt, unsigned>> trial_factor(const BigInt& n, std::uint64_t bound) {
  if (n <= 0) throw std::invalid_argument("trial_factor needs a positive integer");
  std::vector<std::pair<BigInt, unsigned>> out;
  BigInt rest = n;
  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.emplace_back(BigInt(d), e);
  };
  strip(2);
  std::uint64_t d = 3;
  for (; d <= bound && rest > 1; d += 2) {
    if (BigInt(d) * d > rest) break;
    strip(d);
  }
  if (rest > 1) {
    // Either d² > rest (rest is prime) or the bound stopped us first.
    if (BigInt(d) * d <= rest) {
      throw std::runtime_error("trial division bound " + std::to_string(bound) +
                               " exceeded; unfactored cofactor " + to_decimal(rest));
    }
    out.emplace_back(rest, 1);
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::vector<Rational> rational_root_oracle(const IntPoly& poly, const OracleOptions& options) {
  if (poly.degree() < 1) throw std::invalid_argument("oracle needs degree ≥ 1");
  Coeffs c(poly.coefficients().begin(), poly.coefficients().end());
  std::vector<Rational> found;
  if (c.front() == 0) {
    found.emplace_back(0);
    while (c.size() > 1 && c.front() == 0) c.erase(c.begin());
  }

  // Candidates run in (q, p) order. Deflation only removes roots, so a
  // rejected candidate stays rejected and the scan resumes where it hit.
  BigInt resume_q = 1;
  BigInt resume_p = 1;
  while (c.size() > 1) {
    const auto images = residue_images(c);
    const BigInt bound = root_bound(c);
    const auto lead_divisors = divisors_up_to(trial_factor(abs(c.back()), options.trial_division_bound), abs(c.back()));
    const auto constant_factors = trial_factor(abs(c.front()), options.trial_division_bound);

    bool hit = false;
    for (const auto& q : lead_divisors) {
      if (q < resume_q) continue;
      const BigInt floor_p = (q == resume_q) ? resume_p : BigInt(1);
      for (const auto& p : divisors_up_to(constant_factors, q * bound)) {
        if (p < floor_p) continue;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (const BigInt& signed_p : {BigInt(p), BigInt(-p)}) {
          if (!is_root(c, images, signed_p, q)) continue;
          found.emplace_back(signed_p, q);
          c = deflate_integer(c, signed_p, q);
          resume_q = q;
          resume_p = p;
          hit = true;
          break;
        }
        if (hit) break;
      }
      if (hit) break;
    }
    if (!hit) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

MonotonicityReport monotonicity_check(int m_max, unsigned threads) {
  if (m_max < 2) throw std::invalid_argument("monotonicity check needs m_max ≥ 2");
  std::vector<IntPoly> polys;
  polys.reserve(static_cast<std::size_t>(m_max));
  {
    std::vector<std::optional<IntPoly>> slots(static_cast<std::size_t>(m_max));
    parallel_for(slots.size(), threads,
                 [&](std::size_t i) { slots[i] = build_amn_polynomial(static_cast<int>(i) + 1).integer; });
    for (auto& s : slots) polys.push_back(std::move(*s));
  }
  auto vanishes = [](const IntPoly& p, const Rational& x) {
    return homogeneous_value(Coeffs(p.coefficients().begin(), p.coefficients().end()), x.num(), x.den()) == 0;
  };

  // A degree-m polynomial vanishing at m distinct points has exactly those
  // roots, so the predicted set is R_{m−1} once each element is confirmed.
  std::vector<std::optional<std::pair<int, Rational>>> violations(static_cast<std::size_t>(m_max) + 1);
  parallel_for(static_cast<std::size_t>(m_max - 1), threads, [&](std::size_t i) {
    const int m = static_cast<int>(i) + 2;
    const IntPoly& prev = polys[static_cast<std::size_t>(m - 2)];
    const IntPoly& cur = polys[static_cast<std::size_t>(m - 1)];
    for (const auto& r : predicted_roots(m - 1).roots) {
      if (!vanishes(prev, r)) {
        violations[static_cast<std::size_t>(m)] = std::pair{m - 1, r};
        return;
      }
      if (!vanishes(cur, r)) {
        violations[static_cast<std::size_t>(m)] = std::pair{m, r};
        return;
      }
    }
  });

  MonotonicityReport report{m_max, true, std::nullopt};
  for (auto& v : violations) {
    if (v) {
      report.ok = false;
      report.violation = std::move(v);
      break;
    }
  }
  return report;
}

}  // namespace amn
