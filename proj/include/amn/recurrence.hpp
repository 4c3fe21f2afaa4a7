#pragma once

#include <array>
#include <vector>

#include "amn/polynomial.hpp"

namespace amn {

/// Coefficient pair of order j in the parity representation t = b0²:
/// a_j = p(t) and b_j = b0·q(t).
struct CoeffPair {
  int j = 0;
  RatPoly p;
  RatPoly q;

  friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

/// One step of the coefficient recurrence acting on (p, q) pairs.
///
/// Row-major 2×2 matrix over Q[t]. Applying it to (p_{j-1}, q_{j-1}) yields
/// (p_j, q_j); the b0 factors of the b-coefficients are absorbed into t.
struct RecurrenceMatrix {
  int m = 0;
  int p = 0;
  std::array<RatPoly, 4> entries;

  CoeffPair apply(const CoeffPair& prev) const;
};

/// Coefficients of one ansatz of order m with a0 = 1; a[n], b[n] multiply |x|^{2n}.
struct AnsatzSolution {
  int m = 0;
  Rational b0;
  std::vector<Rational> a;
  std::vector<Rational> b;

  friend bool operator==(const AnsatzSolution&, const AnsatzSolution&) = default;
};

struct AmnPolynomial {
  int m = 0;
  /// t·q_m(t) − p_m(t)
  RatPoly rational;
  IntPoly integer;
  /// integer == scale · rational
  Rational scale;
};

struct ClosedFormExtremes {
  /// constant coefficient of p_m
  Rational c;
  /// leading coefficient of q_m
  Rational d;
};

/// j = 1 pair. Throws for m < 1.
CoeffPair seed_pair(int m);

RecurrenceMatrix recurrence_matrix(int m, int p);

/// Builds pair j from pair j-1 through the recurrence matrix.
CoeffPair advance_pair(int m, int j, const CoeffPair& prev);

/// Pairs 0..m: (1, 1), the seed, then advance_pair for j = 2..m.
std::vector<CoeffPair> coefficient_polynomials(int m);

/// Same chain built by solving the odd equation for a_j and then the even
/// equation for b_j with the fresh a_j. Independent of recurrence_matrix.
std::vector<CoeffPair> forward_substitution_chain(int m);

AmnPolynomial build_amn_polynomial(int m);

/// Closed-form products for c_m and d_m; does not touch the recurrence.
ClosedFormExtremes closed_form_extremes(int m);

/// a_j = p_j(b0²), b_j = b0·q_j(b0²). b0 need not be a root.
AnsatzSolution instantiate_solution(int m, const Rational& b0);
/// Same, reusing a chain from coefficient_polynomials.
AnsatzSolution instantiate_solution(const std::vector<CoeffPair>& chain, const Rational& b0);

/// The m = 0 mode a = (1), b = (1), b0 = 1.
AnsatzSolution base_solution();

/// Exact residuals of the 2m+1 equations, ordered (1), (2), …, (2m+1):
///   (2j-1)  2j·a_j − (2m+5−2j)·a_{j−1} + 3·b0·b_{j−1}
///   (2k)    (2k+3)·b_k − (2m+2−2k)·b_{k−1} − 3·b0·a_k
///   (2m+1)  a_m − b0·b_m
/// For instantiated solutions the last entry is −P_m(b0²).
std::vector<Rational> verify_system(const AnsatzSolution& s);

bool solves_system(const AnsatzSolution& s);

/// Multiplies both radial polynomials by (1 + |x|²); the result has order m+1.
/// Throws std::invalid_argument unless s solves its system exactly.
AnsatzSolution lift_solution(const AnsatzSolution& s);

}  // namespace amn
