#include "amn/verification.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "amn/parallel.hpp"
#include "amn/recurrence.hpp"

namespace amn {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

std::string VerificationReport::first_counterexample() const {
  std::ostringstream os;
  if (!factorization.ok()) {
    os << factorization.failure();
  } else if (!oracle_ok) {
    os << "rational-root oracle disagrees with the predicted roots of P_" << m;
  } else if (!system_ok) {
    os << "b0 = " << system_counterexample.value_or(Rational(0)) << " leaves a nonzero (L_" << m << ") residual";
  } else if (!monotonicity_ok()) {
    const auto& v = *monotonicity->violation;
    os << "P_" << v.first << " does not vanish at " << v.second;
  }
  return os.str();
}

VerificationReport run_verification(int m, const VerifyOptions& options) {
  if (m < 1) throw std::invalid_argument("P_m defined for m ≥ 1");
  VerificationReport report;
  report.m = m;
  report.predicted = predicted_roots(m).roots;

  auto start = Clock::now();
  AmnPolynomial poly = build_amn_polynomial(m);
  if (options.tamper) {
    poly.rational += RatPoly{Rational(1)};
    auto [integer, scale] = primitive_integer_form(poly.rational);
    poly.integer = std::move(integer);
    poly.scale = std::move(scale);
  }
  report.timings_ms["build"] = elapsed_ms(start);

  start = Clock::now();
  report.factorization = verify_factorization(m, poly.rational);
  report.timings_ms["factorization"] = elapsed_ms(start);

  start = Clock::now();
  std::vector<Rational> b0s;
  for (int j = 1; j <= m + 1; ++j) {
    const Rational root(2 * j + 1, 3);
    b0s.push_back(root);
    b0s.push_back(-root);
  }
  const auto chain = coefficient_polynomials(m);
  std::vector<char> solved(b0s.size(), 0);
  parallel_for(b0s.size(), options.threads,
               [&](std::size_t i) { solved[i] = solves_system(instantiate_solution(chain, b0s[i])) ? 1 : 0; });
  report.system_ok = true;
  for (std::size_t i = 0; i < b0s.size(); ++i) {
    if (!solved[i]) {
      report.system_ok = false;
      report.system_counterexample = b0s[i];
      break;
    }
  }
  report.timings_ms["system"] = elapsed_ms(start);

  if (options.oracle) {
    start = Clock::now();
    report.oracle = rational_root_oracle(poly.integer);
    report.oracle_ok = *report.oracle == report.predicted;
    report.timings_ms["oracle"] = elapsed_ms(start);
  }

  if (options.chain || m >= 2) {
    start = Clock::now();
    if (options.chain) {
      report.monotonicity = monotonicity_check(std::max(m, 2), options.threads);
    } else {
      MonotonicityReport step{m, true, std::nullopt};
      for (const auto& r : predicted_roots(m - 1).roots) {
        if (!poly_eval(poly.rational, r).is_zero()) {
          step.ok = false;
          step.violation = std::pair{m, r};
          break;
        }
      }
      report.monotonicity = step;
    }
    report.timings_ms["monotonicity"] = elapsed_ms(start);
  }
  return report;
}

BenchRow bench_order(int m) {
  const auto start = Clock::now();
  const auto chain = coefficient_polynomials(m);
  const AmnPolynomial poly = build_amn_polynomial(m);
  const FactorizationReport check = verify_factorization(m, poly.rational);
  BenchRow row{m, elapsed_ms(start), 0};
  if (!check.ok()) throw std::runtime_error(check.failure());
  auto track = [&row](const RatPoly& p) {
    for (const auto& c : p.coefficients()) row.peak_bits = std::max(row.peak_bits, c.bit_length());
  };
  for (const auto& pair : chain) {
    track(pair.p);
    track(pair.q);
  }
  track(poly.rational);
  track(poly.integer.to_rational());
  return row;
}

}  // namespace amn
