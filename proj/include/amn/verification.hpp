#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amn/roots.hpp"

namespace amn {

struct VerifyOptions {
  /// Run the monotonicity chain over 2..m instead of the single step m−1 → m.
  bool chain = false;
  bool oracle = true;
  /// Test hook: perturb the constant coefficient of P_m before checking it.
  bool tamper = false;
  unsigned threads = 0;
};

struct VerificationReport {
  int m = 0;
  std::vector<Rational> predicted;
  std::optional<std::vector<Rational>> oracle;
  bool oracle_ok = true;
  FactorizationReport factorization;
  /// every b0 = ±(2j+1)/3 gives all-zero residuals
  bool system_ok = false;
  std::optional<Rational> system_counterexample;
  std::optional<MonotonicityReport> monotonicity;
  std::map<std::string, double> timings_ms;

  bool monotonicity_ok() const { return !monotonicity || monotonicity->ok; }
  bool ok() const { return oracle_ok && factorization.ok() && system_ok && monotonicity_ok(); }
  /// Empty when ok().
  std::string first_counterexample() const;
};

VerificationReport run_verification(int m, const VerifyOptions& options = {});

struct BenchRow {
  int m = 0;
  double wall_ms = 0.0;
  /// Largest numerator/denominator bit length in the p_j, q_j chain and P_m.
  std::size_t peak_bits = 0;
};

/// Builds and verifies P_m, timing the pair.
BenchRow bench_order(int m);

}  // namespace amn
