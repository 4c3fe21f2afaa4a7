#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "amn/recurrence.hpp"

namespace amn {

using Complex = std::complex<double>;

struct Vec3 {
  double x1 = 0, x2 = 0, x3 = 0;

  double operator[](int k) const { return k == 0 ? x1 : (k == 1 ? x2 : x3); }
  double& operator[](int k) { return k == 0 ? x1 : (k == 1 ? x2 : x3); }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x1, s * v.x2, s * v.x3}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;

  double norm2() const { return x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::sqrt(norm2()); }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

/// Two-component complex spinor.
struct Spinor {
  Complex up{};
  Complex down{};

  friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.up + b.up, a.down + b.down}; }
  friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.up - b.up, a.down - b.down}; }
  friend Spinor operator*(Complex s, const Spinor& v) { return {s * v.up, s * v.down}; }

  double norm2() const { return std::norm(up) + std::norm(down); }
  double norm() const { return std::sqrt(norm2()); }
};

/// conj(a₁)b₁ + conj(a₂)b₂
inline Complex inner(const Spinor& a, const Spinor& b) { return std::conj(a.up) * b.up + std::conj(a.down) * b.down; }

/// σ_k·s for k = 0, 1, 2.
Spinor apply_pauli(int k, const Spinor& s);
/// (σ·v)s
Spinor apply_sigma_dot(const Vec3& v, const Spinor& s);

/// (s·σ₁s, s·σ₂s, s·σ₃s)
Vec3 spin_density(const Spinor& s);

enum class RootSign { plus, minus };

/// Which family member a field is: b0 = ±(2j+1)/3. j = 0 marks the m = 0 base mode.
struct FamilyLabel {
  int j = 0;
  RootSign sign = RootSign::plus;
};

/// Evaluatable spinor field
///   ψ(x) = ⟨x⟩^{−(3+2m)} [(Σ a_n|x|^{2n})·1 + (Σ b_n|x|^{2n})·iσ·x] φ0.
///
/// Coefficients are kept exact; double copies are taken only for evaluation.
class ZeroModeField {
 public:
  /// Throws std::invalid_argument unless `solution` satisfies its system exactly.
  static ZeroModeField from_solution(const AnsatzSolution& solution, FamilyLabel label);
  /// ψ_{j,±}^{(m)}, 1 ≤ j ≤ m+1.
  static ZeroModeField family_member(int m, int j, RootSign sign);
  /// ψ^{(m)} = ψ_{m+1,+}^{(m)}; m = 0 gives the Loss–Yau base mode.
  static ZeroModeField designated(int m);
  /// ⟨x⟩^{−3}(1 + iσ·x)φ0 with h = 3/⟨x⟩², for any unit φ0.
  static ZeroModeField loss_yau_base(Spinor phi0 = {Complex(1.0), Complex(0.0)});
  /// Skips the system check; negative controls only.
  static ZeroModeField unverified(const AnsatzSolution& solution);

  int m() const { return solution_.m; }
  const Rational& b0() const { return solution_.b0; }
  const AnsatzSolution& solution() const { return solution_; }
  const FamilyLabel& label() const { return label_; }
  const Spinor& phi0() const { return phi0_; }
  bool verified() const { return verified_; }

  Spinor operator()(const Vec3& x) const;
  /// α/⟨x⟩² with α = 3·b0.
  double coupling(const Vec3& x) const { return alpha_ / (1.0 + x.norm2()); }
  /// ⟨x⟩^{−(6+4m)}(A² + |x|²B²); the density is radial.
  double density(double r) const;

 private:
  ZeroModeField(AnsatzSolution solution, FamilyLabel label, Spinor phi0, bool verified);

  AnsatzSolution solution_;
  FamilyLabel label_;
  Spinor phi0_;
  bool verified_ = false;
  std::vector<double> a_;
  std::vector<double> b_;
  double alpha_ = 0.0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const { return estimate_; }
  double error() const { return error_; }

 private:
  double estimate_;
  double error_;
};

Spinor evaluate_zero_mode(const ZeroModeField& f, const Vec3& x);
double evaluate_h(const ZeroModeField& f, const Vec3& x);

/// |ψ(x)|² below this is treated as a vanishing spinor.
inline constexpr double kVanishingSpinor = 1e-30;

/// h·spin_density(ψ)/|ψ|². Throws std::domain_error where ψ vanishes.
Vec3 evaluate_vector_potential(const ZeroModeField& f, const Vec3& x);

/// (σ·D)ψ with D = −i∇ by fourth-order central differences.
Spinor sigma_dot_D(const ZeroModeField& f, const Vec3& x, double step);

/// ‖(σ·D)ψ − hψ‖ at x.
double loss_yau_residual(const ZeroModeField& f, const Vec3& x, double step);

using PotentialFn = std::function<Vec3(const Vec3&)>;

/// ‖σ·(D − A)ψ‖ at x with A from evaluate_vector_potential.
double weyl_dirac_residual(const ZeroModeField& f, const Vec3& x, double step);
/// Same with a caller-supplied potential.
double weyl_dirac_residual(const ZeroModeField& f, const Vec3& x, double step, const PotentialFn& potential);

/// ∫|ψ|² over R³: adaptive in radius on [0, r_max], the tail (r_max, ∞) on the
/// compactified variable s = r_max/r, angular product rule on each shell.
/// Throws ConvergenceError if the combined error estimate exceeds `tolerance`.
double l2_norm_squared(const ZeroModeField& f, double r_max, double tolerance);

/// ψ_{j,±}^{(m)} for j = 1..m+1, + before −, each verified.
std::vector<ZeroModeField> enumerate_family(int m);

}  // namespace amn
