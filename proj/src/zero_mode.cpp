#include "amn/zero_mode.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <sstream>
#include <utility>

namespace amn {

namespace {

constexpr Complex kI{0.0, 1.0};

Rational family_root(int j, RootSign sign) {
  const Rational r(2 * j + 1, 3);
  return sign == RootSign::plus ? r : -r;
}

// Gauss–Legendre in cos θ times the trapezoid rule in φ; exact for spherical
// harmonics of degree < 16.
constexpr int kPolarNodes = 8;
constexpr int kAzimuthNodes = 16;

double shell_integral(const ZeroModeField& f, double r) {
  using Rule = boost::math::quadrature::gauss<double, kPolarNodes>;
  constexpr double pi = boost::math::constants::pi<double>();
  const auto nodes = Rule::abscissa();
  const auto weights = Rule::weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (double cos_theta : {nodes[i], -nodes[i]}) {
      const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
      double ring = 0.0;
      for (int k = 0; k < kAzimuthNodes; ++k) {
        const double phi = 2.0 * pi * k / kAzimuthNodes;
        const Vec3 x{r * sin_theta * std::cos(phi), r * sin_theta * std::sin(phi), r * cos_theta};
        ring += f(x).norm2();
      }
      sum += weights[i] * ring * (2.0 * pi / kAzimuthNodes);
    }
  }
  return sum;
}

}  // namespace

Spinor apply_pauli(int k, const Spinor& s) {
  switch (k) {
    case 0:
      return {s.down, s.up};
    case 1:
      return {-kI * s.down, kI * s.up};
    case 2:
      return {s.up, -s.down};
  }
  throw std::invalid_argument("Pauli index must be 0, 1 or 2");
}

Spinor apply_sigma_dot(const Vec3& v, const Spinor& s) {
  return {v.x3 * s.up + Complex(v.x1, -v.x2) * s.down, Complex(v.x1, v.x2) * s.up - v.x3 * s.down};
}

Vec3 spin_density(const Spinor& s) {
  const Complex cross_term = std::conj(s.up) * s.down;
  return {2.0 * cross_term.real(), 2.0 * cross_term.imag(), std::norm(s.up) - std::norm(s.down)};
}

ZeroModeField::ZeroModeField(AnsatzSolution solution, FamilyLabel label, Spinor phi0, bool verified)
    : solution_(std::move(solution)), label_(label), phi0_(phi0), verified_(verified) {
  a_.reserve(solution_.a.size());
  b_.reserve(solution_.b.size());
  for (const auto& c : solution_.a) a_.push_back(c.to_double());
  for (const auto& c : solution_.b) b_.push_back(c.to_double());
  alpha_ = 3.0 * solution_.b0.to_double();
}

ZeroModeField ZeroModeField::from_solution(const AnsatzSolution& solution, FamilyLabel label) {
  if (!solves_system(solution)) {
    std::ostringstream os;
    os << "coefficients of order " << solution.m << " with b0 = " << solution.b0 << " do not solve (L_m)";
    throw std::invalid_argument(os.str());
  }
  return ZeroModeField(solution, label, {Complex(1.0), Complex(0.0)}, true);
}

ZeroModeField ZeroModeField::family_member(int m, int j, RootSign sign) {
  if (m < 1) throw std::invalid_argument("family defined for m ≥ 1");
  if (j < 1 || j > m + 1) throw std::invalid_argument("family index j must lie in [1, m+1]");
  return from_solution(instantiate_solution(m, family_root(j, sign)), {j, sign});
}

ZeroModeField ZeroModeField::designated(int m) {
  if (m < 0) throw std::invalid_argument("order must be nonnegative");
  if (m == 0) return loss_yau_base();
  return family_member(m, m + 1, RootSign::plus);
}

ZeroModeField ZeroModeField::loss_yau_base(Spinor phi0) {
  if (std::abs(phi0.norm2() - 1.0) > 1e-12) throw std::invalid_argument("φ0 must be a unit spinor");
  return ZeroModeField(base_solution(), {0, RootSign::plus}, phi0, true);
}

ZeroModeField ZeroModeField::unverified(const AnsatzSolution& solution) {
  return ZeroModeField(solution, {0, RootSign::plus}, {Complex(1.0), Complex(0.0)}, false);
}

Spinor ZeroModeField::operator()(const Vec3& x) const {
  const double r2 = x.norm2();
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t n = a_.size(); n-- > 0;) {
    even = even * r2 + a_[n];
    odd = odd * r2 + b_[n];
  }
  const double weight = std::pow(1.0 + r2, -(3.0 + 2.0 * m()) / 2.0);
  // iσ·x φ0
  const Spinor x_phi0 = kI * apply_sigma_dot(x, phi0_);
  return Complex(weight) * (Complex(even) * phi0_ + Complex(odd) * x_phi0);
}

double ZeroModeField::density(double r) const {
  const double r2 = r * r;
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t n = a_.size(); n-- > 0;) {
    even = even * r2 + a_[n];
    odd = odd * r2 + b_[n];
  }
  return std::pow(1.0 + r2, -(3.0 + 2.0 * m())) * (even * even + r2 * odd * odd);
}

Spinor evaluate_zero_mode(const ZeroModeField& f, const Vec3& x) { return f(x); }

double evaluate_h(const ZeroModeField& f, const Vec3& x) { return f.coupling(x); }

Vec3 evaluate_vector_potential(const ZeroModeField& f, const Vec3& x) {
  const Spinor psi = f(x);
  const double n2 = psi.norm2();
  if (n2 < kVanishingSpinor) throw std::domain_error("spinor vanishes at x");
  return (f.coupling(x) / n2) * spin_density(psi);
}

Spinor sigma_dot_D(const ZeroModeField& f, const Vec3& x, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  Spinor out;
  for (int k = 0; k < 3; ++k) {
    auto shifted = [&](double s) {
      Vec3 y = x;
      y[k] += s;
      return f(y);
    };
    const Spinor derivative =
        Complex(1.0 / (12.0 * step)) * ((shifted(-2 * step) - shifted(2 * step)) +
                                        Complex(8.0) * (shifted(step) - shifted(-step)));
    out = out + apply_pauli(k, derivative);
  }
  return -kI * out;
}

double loss_yau_residual(const ZeroModeField& f, const Vec3& x, double step) {
  const Spinor lhs = sigma_dot_D(f, x, step);
  return (lhs - Complex(f.coupling(x)) * f(x)).norm();
}

double weyl_dirac_residual(const ZeroModeField& f, const Vec3& x, double step) {
  return weyl_dirac_residual(f, x, step, [&f](const Vec3& y) { return evaluate_vector_potential(f, y); });
}

double weyl_dirac_residual(const ZeroModeField& f, const Vec3& x, double step, const PotentialFn& potential) {
  const Spinor d_psi = sigma_dot_D(f, x, step);
  return (d_psi - apply_sigma_dot(potential(x), f(x))).norm();
}

double l2_norm_squared(const ZeroModeField& f, double r_max, double tolerance) {
  if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  constexpr unsigned max_depth = 10;
  // Each piece gets a slice of the budget; GK tolerances are relative.
  const double relative = tolerance * 1e-2;

  auto radial = [&f](double r) { return r * r * shell_integral(f, r); };
  double inner_error = 0.0;
  const double inner = GK::integrate(radial, 0.0, r_max, max_depth, relative, &inner_error);

  // r = r_max/s maps (r_max, ∞) onto (0, 1]; |ψ|² ~ r^{-4} keeps this finite at s = 0.
  auto tail_integrand = [&](double s) {
    const double r = r_max / s;
    return radial(r) * r_max / (s * s);
  };
  double tail_error = 0.0;
  const double tail = GK::integrate(tail_integrand, 0.0, 1.0, max_depth, relative, &tail_error);

  const double value = inner + tail;
  const double error = inner_error + tail_error;
  if (!std::isfinite(value) || error > tolerance) {
    std::ostringstream os;
    os << "L² quadrature did not converge: estimate " << value << " with error " << error << " > " << tolerance;
    throw ConvergenceError(os.str(), value, error);
  }
  return value;
}

std::vector<ZeroModeField> enumerate_family(int m) {
  if (m < 1) throw std::invalid_argument("family defined for m ≥ 1");
  std::vector<ZeroModeField> out;
  out.reserve(2 * (static_cast<std::size_t>(m) + 1));
  for (int j = 1; j <= m + 1; ++j) {
    out.push_back(ZeroModeField::family_member(m, j, RootSign::plus));
    out.push_back(ZeroModeField::family_member(m, j, RootSign::minus));
  }
  return out;
}

}  // namespace amn
