#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "amn/zero_mode.hpp"

using namespace amn;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

Vec3 random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  for (;;) {
    const Vec3 x{u(rng), u(rng), u(rng)};
    if (x.norm() <= radius) return x;
  }
}

Spinor random_spinor(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
}

bool close(const Complex& a, const Complex& b, double tol = 1e-14) { return std::abs(a - b) <= tol; }

bool close(const Vec3& a, const Vec3& b, double tol) { return (a - b).norm() <= tol * std::max(1.0, b.norm()); }

// 3⟨x⟩^{-4}{(1−|x|²)w0 + 2(w0·x)x + 2 w0×x}
Vec3 base_potential_closed_form(const Spinor& phi0, const Vec3& x) {
  const Vec3 w0 = spin_density(phi0);
  const double r2 = x.norm2();
  const Vec3 v = (1.0 - r2) * w0 + (2.0 * dot(w0, x)) * x + 2.0 * cross(w0, x);
  return (3.0 / ((1.0 + r2) * (1.0 + r2))) * v;
}

double relative_residual(const ZeroModeField& f, const Vec3& x, double step) {
  return loss_yau_residual(f, x, step) / f(x).norm();
}

}  // namespace

TEST_CASE("Pauli matrices") {
  const Spinor s{Complex(1, 2), Complex(-3, 0.5)};
  for (int k = 0; k < 3; ++k) {
    const Spinor twice = apply_pauli(k, apply_pauli(k, s));
    CHECK(close(twice.up, s.up));
    CHECK(close(twice.down, s.down));
  }
  // σ₁σ₂ = iσ₃
  const Spinor lhs = apply_pauli(0, apply_pauli(1, s));
  const Spinor rhs = Complex(0, 1) * apply_pauli(2, s);
  CHECK(close(lhs.up, rhs.up));
  CHECK(close(lhs.down, rhs.down));
  const Spinor dotted = apply_sigma_dot({1, 2, 3}, s);
  const Spinor summed = apply_pauli(0, s) + Complex(2) * apply_pauli(1, s) + Complex(3) * apply_pauli(2, s);
  CHECK(close(dotted.up, summed.up));
  CHECK(close(dotted.down, summed.down));
  CHECK_THROWS_AS(apply_pauli(3, s), std::invalid_argument);
}

TEST_CASE("spin_density examples") {
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(close(spin_density({Complex(1), Complex(0)}), {0, 0, 1}, 1e-15));
  CHECK(close(spin_density({Complex(h), Complex(h)}), {1, 0, 0}, 1e-15));
  CHECK(close(spin_density({Complex(h), Complex(0, h)}), {0, 1, 0}, 1e-15));
}

TEST_CASE("|spin_density(s)| = |s|² over random spinors") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100'000; ++i) {
    const Spinor s = random_spinor(rng);
    REQUIRE(std::abs(spin_density(s).norm() - s.norm2()) <= 1e-12 * s.norm2());
  }
}

TEST_CASE("field values") {
  const ZeroModeField base = ZeroModeField::designated(0);
  const Spinor at_x1 = base({1, 0, 0});
  const double c = std::pow(2.0, -1.5);
  CHECK(close(at_x1.up, Complex(c, 0)));
  CHECK(close(at_x1.down, Complex(0, c)));

  const ZeroModeField m1 = ZeroModeField::designated(1);
  CHECK(m1.b0() == q(5, 3));
  const Spinor at_x3 = m1({0, 0, 1});
  CHECK(close(at_x3.up, Complex(-1, 1) / (6.0 * std::sqrt(2.0))));
  CHECK(close(at_x3.down, Complex(0)));
}

TEST_CASE("ψ(0) = φ0 for every family member") {
  for (int m = 1; m <= 6; ++m) {
    for (const auto& f : enumerate_family(m)) {
      const Spinor at0 = f({0, 0, 0});
      REQUIRE(close(at0.up, f.phi0().up));
      REQUIRE(close(at0.down, f.phi0().down));
    }
  }
  const Spinor phi0{Complex(0.6), Complex(0, 0.8)};
  const Spinor at0 = ZeroModeField::loss_yau_base(phi0)({0, 0, 0});
  CHECK(close(at0.up, phi0.up));
  CHECK(close(at0.down, phi0.down));
}

TEST_CASE("density matches |ψ|²") {
  std::mt19937_64 rng(8);
  for (int m : {0, 1, 3}) {
    const ZeroModeField f = ZeroModeField::designated(m);
    for (int i = 0; i < 100; ++i) {
      const Vec3 x = random_point(rng, 4.0);
      REQUIRE(f.density(x.norm()) == doctest::Approx(f(x).norm2()).epsilon(1e-13));
    }
  }
}

TEST_CASE("evaluate_h") {
  CHECK(evaluate_h(ZeroModeField::designated(0), {0, 0, 0}) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(evaluate_h(ZeroModeField::designated(2), {1, 0, 0}) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(evaluate_h(ZeroModeField::family_member(1, 2, RootSign::minus), {0, 0, 0}) ==
        doctest::Approx(-5.0).epsilon(1e-15));
}

TEST_CASE("vector potential of the base mode") {
  const ZeroModeField base = ZeroModeField::designated(0);
  CHECK(close(evaluate_vector_potential(base, {0, 0, 0}), {0, 0, 3}, 1e-15));
  CHECK(close(evaluate_vector_potential(base, {0, 0, 1}), {0, 0, 1.5}, 1e-15));

  std::mt19937_64 rng(21);
  for (const Spinor& phi0 : {Spinor{Complex(1), Complex(0)}, Spinor{Complex(0.6), Complex(0, 0.8)},
                             Spinor{Complex(0.5, 0.5), Complex(-0.5, 0.5)}}) {
    const ZeroModeField f = ZeroModeField::loss_yau_base(phi0);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 x = random_point(rng, 5.0);
      REQUIRE(close(evaluate_vector_potential(f, x), base_potential_closed_form(phi0, x), 1e-12));
    }
  }
  CHECK_THROWS_AS(ZeroModeField::loss_yau_base({Complex(1), Complex(1)}), std::invalid_argument);
}

TEST_CASE("|A| = |h| wherever ψ is nonzero") {
  std::mt19937_64 rng(4);
  for (int m : {0, 1, 2, 3, 6}) {
    const ZeroModeField f = ZeroModeField::designated(m);
    for (int i = 0; i < 1000; ++i) {
      const Vec3 x = random_point(rng, 3.0);
      const double h = evaluate_h(f, x);
      REQUIRE(std::abs(evaluate_vector_potential(f, x).norm() - std::abs(h)) <= 1e-12 * std::abs(h));
    }
  }
}

TEST_CASE("Loss–Yau and Weyl–Dirac residuals are small on verified fields") {
  std::mt19937_64 rng(12);
  for (int m : {0, 1, 2, 3, 6}) {
    CAPTURE(m);
    const ZeroModeField f = ZeroModeField::designated(m);
    for (int i = 0; i < 50; ++i) {
      const Vec3 x = random_point(rng, 3.0);
      REQUIRE(relative_residual(f, x, 1e-3) <= 1e-7);
      REQUIRE(weyl_dirac_residual(f, x, 1e-3) / f(x).norm() <= 1e-7);
    }
  }
}

TEST_CASE("residual converges at fourth order") {
  const Vec3 x{0.7, -0.4, 1.1};
  for (int m : {0, 1, 3}) {
    CAPTURE(m);
    const ZeroModeField f = ZeroModeField::designated(m);
    const double r1 = loss_yau_residual(f, x, 1e-2);
    const double r2 = loss_yau_residual(f, x, 5e-3);
    const double r3 = loss_yau_residual(f, x, 2.5e-3);
    const double order = 0.5 * (std::log2(r1 / r2) + std::log2(r2 / r3));
    CHECK(order == doctest::Approx(4.0).epsilon(0.125));
  }
  CHECK_THROWS_AS(sigma_dot_D(ZeroModeField::designated(0), x, 0.0), std::invalid_argument);
}

TEST_CASE("negative controls keep a residual floor") {
  const Vec3 x{0.3, 0.8, -0.5};
  AnsatzSolution perturbed = ZeroModeField::designated(1).solution();
  perturbed.a[1] += q(1, 10);
  const ZeroModeField bad = ZeroModeField::unverified(perturbed);
  CHECK_FALSE(bad.verified());
  const double floor_coarse = relative_residual(bad, x, 1e-2);
  const double floor_fine = relative_residual(bad, x, 1e-3);
  CHECK(floor_fine >= 1e-3);
  CHECK(floor_fine == doctest::Approx(floor_coarse).epsilon(1e-3));
  CHECK(weyl_dirac_residual(bad, x, 1e-3) / bad(x).norm() >= 1e-3);
  CHECK_THROWS_AS(ZeroModeField::from_solution(perturbed, {}), std::invalid_argument);

  // the right field with a wrong potential (h+1)·A/h
  const ZeroModeField good = ZeroModeField::designated(1);
  const auto wrong = [&](const Vec3& y) {
    const double h = evaluate_h(good, y);
    return ((h + 1.0) / h) * evaluate_vector_potential(good, y);
  };
  CHECK(weyl_dirac_residual(good, x, 1e-3, wrong) / good(x).norm() >= 1e-3);
}

TEST_CASE("conjugate-sign symmetry") {
  std::mt19937_64 rng(6);
  for (int m : {1, 2, 4}) {
    for (int j = 1; j <= m + 1; ++j) {
      const ZeroModeField plus = ZeroModeField::family_member(m, j, RootSign::plus);
      const ZeroModeField minus = ZeroModeField::family_member(m, j, RootSign::minus);
      CHECK(minus.b0() == -plus.b0());
      for (int i = 0; i < 10; ++i) {
        const Vec3 x = random_point(rng, 3.0);
        REQUIRE(evaluate_h(minus, x) == -evaluate_h(plus, x));
        REQUIRE(weyl_dirac_residual(plus, x, 1e-3) / plus(x).norm() <= 1e-7);
        REQUIRE(weyl_dirac_residual(minus, x, 1e-3) / minus(x).norm() <= 1e-7);
      }
    }
  }
}

TEST_CASE("vector potential is undefined where ψ vanishes") {
  const ZeroModeField zero = ZeroModeField::unverified({0, q(1), {q(0)}, {q(0)}});
  CHECK_THROWS_AS(evaluate_vector_potential(zero, {1, 0, 0}), std::domain_error);
}

TEST_CASE("L² norm") {
  const double base = l2_norm_squared(ZeroModeField::designated(0), 10.0, 1e-8);
  CHECK(std::abs(base - std::numbers::pi * std::numbers::pi) <= 1e-6);

  const ZeroModeField m1 = ZeroModeField::designated(1);
  const double near = l2_norm_squared(m1, 10.0, 1e-8);
  const double far = l2_norm_squared(m1, 20.0, 1e-8);
  CHECK(near > 0.0);
  CHECK(std::abs(near - far) <= 1e-6);

  for (const auto& f : enumerate_family(2)) CHECK(l2_norm_squared(f, 10.0, 1e-8) > 0.0);

  CHECK_THROWS_AS(l2_norm_squared(m1, 0.0, 1e-8), std::invalid_argument);
  try {
    l2_norm_squared(m1, 10.0, 1e-30);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.estimate() == doctest::Approx(near).epsilon(1e-6));
    CHECK(e.error() > 1e-30);
  }
}

TEST_CASE("enumerate_family") {
  const auto f1 = enumerate_family(1);
  REQUIRE(f1.size() == 4);
  CHECK(f1[0].b0() == q(1));
  CHECK(f1[1].b0() == q(-1));
  CHECK(f1[2].b0() == q(5, 3));
  CHECK(f1[3].b0() == q(-5, 3));
  CHECK(ZeroModeField::designated(1).b0() == q(5, 3));

  const auto f3 = enumerate_family(3);
  REQUIRE(f3.size() == 8);
  CHECK(f3[6].b0() == q(3));
  CHECK(f3[7].b0() == q(-3));
  for (const auto& f : f3) {
    CHECK(f.verified());
    CHECK(solves_system(f.solution()));
  }
  CHECK_THROWS_AS(enumerate_family(0), std::invalid_argument);
  CHECK_THROWS_AS(ZeroModeField::family_member(2, 4, RootSign::plus), std::invalid_argument);
}
