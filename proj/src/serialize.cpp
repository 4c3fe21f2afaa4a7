#include "amn/serialize.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

namespace amn {

Json to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_decimal(c));
  return out;
}

Json to_json(const RatPoly& p) { return to_json(p.coefficients()); }

Json to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& c : values) out.push_back(c.to_string());
  return out;
}

Json amn_polynomial_json(const AmnPolynomial& poly) {
  const ClosedFormExtremes extremes = closed_form_extremes(poly.m);
  return Json{
      {"m", poly.m},
      {"degree", poly.rational.degree()},
      {"rational_coefficients", to_json(poly.rational)},
      {"integer_coefficients", to_json(poly.integer)},
      {"monic_coefficients", to_json(monic_form(poly.rational))},
      {"scale", poly.scale.to_string()},
      {"c_m", extremes.c.to_string()},
      {"d_m", extremes.d.to_string()},
  };
}

Json solution_json(const AnsatzSolution& s) {
  return Json{
      {"m", s.m},
      {"b0", s.b0.to_string()},
      {"a", to_json(s.a)},
      {"b", to_json(s.b)},
      {"residuals_zero", solves_system(s)},
  };
}

Json verification_json(const VerificationReport& report) {
  Json j{
      {"m", report.m},
      {"predicted", to_json(report.predicted)},
      {"oracle", report.oracle ? to_json(*report.oracle) : Json(nullptr)},
      {"oracle_ok", report.oracle_ok},
      {"factorization_ok", report.factorization.ok()},
      {"system_ok", report.system_ok},
      {"monotonicity_ok", report.monotonicity_ok()},
      {"ok", report.ok()},
      {"timings_ms", report.timings_ms},
  };
  j["factorization"] = Json{
      {"roots_vanish", report.factorization.roots_vanish},
      {"product_matches", report.factorization.product_matches},
      {"constant_matches", report.factorization.constant_matches},
      {"roots_simple", report.factorization.roots_simple},
  };
  if (report.monotonicity) j["monotonicity_m_max"] = report.monotonicity->m_max;
  if (!report.ok()) j["counterexample"] = report.first_counterexample();
  return j;
}

IntPoly int_poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j) c.push_back(parse_bigint(v.get<std::string>()));
  return IntPoly(std::move(c));
}

AnsatzSolution solution_from_json(const Json& j) {
  AnsatzSolution s;
  s.m = j.at("m").get<int>();
  s.b0 = Rational::parse(j.at("b0").get<std::string>());
  for (const auto& v : j.at("a")) s.a.push_back(Rational::parse(v.get<std::string>()));
  for (const auto& v : j.at("b")) s.b.push_back(Rational::parse(v.get<std::string>()));
  return s;
}

std::string round_trip(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

void write_field_csv(std::ostream& os, const ZeroModeField& f, std::span<const Vec3> points, double step) {
  os << kFieldCsvHeader << '\n';
  for (const auto& x : points) {
    const Spinor psi = f(x);
    const Vec3 a = evaluate_vector_potential(f, x);
    const double fields[] = {x.x1,
                             x.x2,
                             x.x3,
                             psi.up.real(),
                             psi.up.imag(),
                             psi.down.real(),
                             psi.down.imag(),
                             psi.norm2(),
                             a.x1,
                             a.x2,
                             a.x3,
                             evaluate_h(f, x),
                             weyl_dirac_residual(f, x, step)};
    bool first = true;
    for (double v : fields) {
      if (!first) os << ',';
      first = false;
      os << round_trip(v);
    }
    os << '\n';
  }
}

}  // namespace amn
