#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amn/polynomial.hpp"

namespace amn {

struct RootSet {
  int m = 0;
  /// strictly increasing
  std::vector<Rational> roots;
};

/// ((2j+1)/3)² for j = 1..m+1.
RootSet predicted_roots(int m);

struct CoefficientMismatch {
  int index = 0;
  Rational expected;
  Rational actual;
};

struct FactorizationReport {
  int m = 0;
  /// P_m vanishes at every predicted root.
  bool roots_vanish = false;
  /// d_m·∏(t − λ_j) equals P_m coefficient by coefficient.
  bool product_matches = false;
  /// d_m·(−1)^{m+1}·∏λ_j = −c_m
  bool constant_matches = false;
  /// Deflating all predicted roots leaves a nonzero constant.
  bool roots_simple = false;
  std::optional<Rational> first_nonvanishing_root;
  std::optional<CoefficientMismatch> first_mismatch;

  bool ok() const { return roots_vanish && product_matches && constant_matches && roots_simple; }
  std::string failure() const;
};

/// Checks P_m against its predicted factorization. Pass `polynomial` to check
/// a different candidate in place of the built P_m (used by tamper tests).
FactorizationReport verify_factorization(int m);
FactorizationReport verify_factorization(int m, const RatPoly& polynomial);

/// Exact division by (t − root). Throws std::domain_error if root is not a root.
RatPoly deflate(const RatPoly& p, const Rational& root);

struct OracleOptions {
  /// Largest trial divisor used when factoring the extreme coefficients.
  std::uint64_t trial_division_bound = 1'000'000;
};

/// Prime factorization by trial division. Throws std::runtime_error if a
/// cofactor survives that cannot be certified prime within the bound.
std::vector<std::pair<BigInt, unsigned>> trial_factor(const BigInt& n, std::uint64_t bound);

/// Every rational root of p, sorted ascending, found by rational-root-theorem
/// candidates p/q (p | constant, q | leading) and exact deflation.
std::vector<Rational> rational_root_oracle(const IntPoly& p, const OracleOptions& options = {});

struct MonotonicityReport {
  int m_max = 0;
  bool ok = false;
  /// (m, root): a root of P_{m−1} that P_m does not vanish at.
  std::optional<std::pair<int, Rational>> violation;
};

/// R_{m−1} ⊆ R_m for m = 2..m_max, by exact evaluation. Each m is independent
/// and is distributed over `threads` workers (0 picks the default).
MonotonicityReport monotonicity_check(int m_max, unsigned threads = 0);

}  // namespace amn
