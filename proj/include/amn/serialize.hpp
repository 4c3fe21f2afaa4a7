#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "amn/recurrence.hpp"
#include "amn/verification.hpp"
#include "amn/zero_mode.hpp"

namespace amn {

using Json = nlohmann::json;

/// Ascending powers, decimal strings.
Json to_json(const IntPoly& p);
/// Ascending powers, "num/den" strings.
Json to_json(const RatPoly& p);
Json to_json(std::span<const Rational> values);

/// {m, rational_coefficients, integer_coefficients, monic_coefficients, scale, c_m, d_m}
Json amn_polynomial_json(const AmnPolynomial& poly);
/// {m, b0, a, b, residuals_zero}
Json solution_json(const AnsatzSolution& s);
/// {m, predicted, oracle, factorization_ok, monotonicity_ok, timings_ms, ...}
Json verification_json(const VerificationReport& report);

IntPoly int_poly_from_json(const Json& j);
AnsatzSolution solution_from_json(const Json& j);

/// Shortest decimal that reads back to the same double.
std::string round_trip(double x);

inline constexpr const char* kFieldCsvHeader = "x1,x2,x3,Re ψ₁,Im ψ₁,Re ψ₂,Im ψ₂,|ψ|²,A1,A2,A3,h,residual";

/// One row per point; `residual` is the Weyl–Dirac residual at `step`.
void write_field_csv(std::ostream& os, const ZeroModeField& f, std::span<const Vec3> points, double step);

}  // namespace amn
