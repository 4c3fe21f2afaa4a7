// amn: command-line front end for the zero-mode polynomial toolkit.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "amn/recurrence.hpp"
#include "amn/roots.hpp"
#include "amn/serialize.hpp"
#include "amn/verification.hpp"
#include "amn/zero_mode.hpp"

namespace {

using namespace amn;

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsage = 2, kIo = 3 };

constexpr int kMaxPolyOrder = 500;
constexpr int kMaxFieldOrder = 50;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 1;
  /// empty: the command's default (csv for field, json otherwise)
  std::string format;
  std::string output;
  unsigned threads = 0;

  // b0 selection
  std::optional<int> j;
  std::string sign = "+";
  bool designated = false;
  std::string b0;

  bool chain = false;
  bool tamper = false;
  bool no_oracle = false;

  int grid = 5;
  double extent = 2.0;
  double step = 1e-3;
  int m_max = 30;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw IoError("cannot open " + cfg.output + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + cfg.output + " failed");
}

void require_poly_order(int m) {
  if (m < 1) throw UsageError("P_m defined for m ≥ 1");
  if (m > kMaxPolyOrder) throw UsageError("m must be ≤ " + std::to_string(kMaxPolyOrder));
}

void require_field_order(int m) {
  if (m < 0 || m > kMaxFieldOrder) throw UsageError("field operations support 0 ≤ m ≤ " + std::to_string(kMaxFieldOrder));
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' not supported by this command");
}

RootSign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return RootSign::plus;
  if (s == "-" || s == "minus") return RootSign::minus;
  throw UsageError("--sign must be + or -");
}

// Resolves the b0 selectors into a field; explicit --b0 may yield a non-solution.
AnsatzSolution select_solution(const RunConfig& cfg, FamilyLabel& label) {
  const int selectors = (cfg.j ? 1 : 0) + (cfg.designated ? 1 : 0) + (cfg.b0.empty() ? 0 : 1);
  if (selectors > 1) throw UsageError("use only one of --j, --designated, --b0");
  if (cfg.m == 0) {
    if (cfg.j || !cfg.b0.empty()) throw UsageError("m = 0 supports only the designated base mode");
    label = {0, RootSign::plus};
    return base_solution();
  }
  if (!cfg.b0.empty()) {
    Rational b0;
    try {
      b0 = Rational::parse(cfg.b0);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --b0: ") + e.what());
    }
    label = {0, b0.sign() < 0 ? RootSign::minus : RootSign::plus};
    return instantiate_solution(cfg.m, b0);
  }
  const int j = cfg.j.value_or(cfg.m + 1);
  if (j < 1 || j > cfg.m + 1) throw UsageError("--j must lie in [1, m+1]");
  const RootSign sign = cfg.j ? parse_sign(cfg.sign) : RootSign::plus;
  label = {j, sign};
  const Rational root(2 * j + 1, 3);
  return instantiate_solution(cfg.m, sign == RootSign::plus ? root : -root);
}

int run_poly(const RunConfig& cfg) {
  require_poly_order(cfg.m);
  require_format(cfg, {"json", "text"});
  const AmnPolynomial poly = build_amn_polynomial(cfg.m);
  if (cfg.format == "text") {
    emit(cfg, poly.integer.to_string() + "\n");
  } else {
    emit(cfg, amn_polynomial_json(poly).dump(2) + "\n");
  }
  return kPass;
}

int run_roots(const RunConfig& cfg) {
  require_poly_order(cfg.m);
  require_format(cfg, {"json", "text"});
  const AmnPolynomial poly = build_amn_polynomial(cfg.m);
  const RootSet predicted = predicted_roots(cfg.m);
  const auto oracle = rational_root_oracle(poly.integer);
  const bool agree = oracle == predicted.roots;
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& r : oracle) os << r << "\n";
    emit(cfg, os.str());
  } else {
    const Json j{{"m", cfg.m},
                 {"predicted", to_json(predicted.roots)},
                 {"oracle", to_json(oracle)},
                 {"agree", agree}};
    emit(cfg, j.dump(2) + "\n");
  }
  if (!agree) std::cerr << "oracle roots of P_" << cfg.m << " differ from the predicted set\n";
  return agree ? kPass : kVerificationFailure;
}

int run_verify(const RunConfig& cfg) {
  require_poly_order(cfg.m);
  require_format(cfg, {"json", "text"});
  VerifyOptions options;
  options.chain = cfg.chain;
  options.tamper = cfg.tamper;
  options.oracle = !cfg.no_oracle;
  options.threads = cfg.threads;
  const VerificationReport report = run_verification(cfg.m, options);
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "m = " << report.m << "\n"
       << "factorization: " << (report.factorization.ok() ? "ok" : "FAIL") << "\n"
       << "system: " << (report.system_ok ? "ok" : "FAIL") << "\n"
       << "oracle: " << (report.oracle ? (report.oracle_ok ? "ok" : "FAIL") : "skipped") << "\n"
       << "monotonicity: " << (report.monotonicity_ok() ? "ok" : "FAIL") << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, verification_json(report).dump(2) + "\n");
  }
  if (!report.ok()) {
    std::cerr << "verification failed: " << report.first_counterexample() << "\n";
    return kVerificationFailure;
  }
  return kPass;
}

int run_mode(const RunConfig& cfg) {
  require_field_order(cfg.m);
  require_format(cfg, {"json"});
  FamilyLabel label;
  const AnsatzSolution s = select_solution(cfg, label);
  Json j = solution_json(s);
  j["j"] = label.j;
  j["sign"] = label.sign == RootSign::plus ? "+" : "-";
  emit(cfg, j.dump(2) + "\n");
  if (!solves_system(s)) {
    std::cerr << "b0 = " << s.b0 << " does not solve (L_" << s.m << ")\n";
    return kVerificationFailure;
  }
  return kPass;
}

int run_field(const RunConfig& cfg) {
  require_field_order(cfg.m);
  require_format(cfg, {"csv"});
  if (cfg.grid < 1) throw UsageError("--grid must be ≥ 1");
  if (!(cfg.step > 0.0)) throw UsageError("--step must be positive");
  FamilyLabel label;
  const AnsatzSolution s = select_solution(cfg, label);
  if (!solves_system(s)) {
    std::cerr << "b0 = " << s.b0 << " does not solve (L_" << s.m << ")\n";
    return kVerificationFailure;
  }
  const ZeroModeField field = cfg.m == 0 ? ZeroModeField::loss_yau_base() : ZeroModeField::from_solution(s, label);
  std::vector<Vec3> points;
  const int n = cfg.grid;
  auto coord = [&](int i) { return n == 1 ? 0.0 : -cfg.extent + 2.0 * cfg.extent * i / (n - 1); };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) points.push_back({coord(i), coord(k), coord(l)});
  std::ostringstream os;
  write_field_csv(os, field, points, cfg.step);
  emit(cfg, os.str());
  return kPass;
}

int run_bench(const RunConfig& cfg) {
  if (cfg.m_max < 1 || cfg.m_max > kMaxPolyOrder)
    throw UsageError("--m-max must lie in [1, " + std::to_string(kMaxPolyOrder) + "]");
  require_format(cfg, {"json", "text"});
  Json rows = Json::array();
  std::ostringstream text;
  text << "m\twall_ms\tpeak_bits\n";
  for (int m = 1; m <= cfg.m_max; ++m) {
    const BenchRow row = bench_order(m);
    rows.push_back({{"m", row.m}, {"wall_ms", row.wall_ms}, {"peak_bits", row.peak_bits}});
    text << row.m << "\t" << round_trip(row.wall_ms) << "\t" << row.peak_bits << "\n";
  }
  emit(cfg, cfg.format == "text" ? text.str() : Json{{"rows", rows}}.dump(2) + "\n");
  return kPass;
}

unsigned thread_override(unsigned flag_value) {
  if (const char* env = std::getenv("AMN_THREADS"); env && *env) {
    try {
      const long v = std::stol(env);
      if (v < 1) throw std::out_of_range("AMN_THREADS");
      return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("AMN_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  return flag_value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root verification for the P_m polynomial family and Weyl–Dirac zero modes"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<int(const RunConfig&)> action;

  app.add_option("--threads", cfg.threads, "Worker threads (0 = available parallelism; AMN_THREADS overrides)");

  auto add_selectors = [&cfg](CLI::App* sub) {
    sub->add_option("--j", cfg.j, "Family index j, b0 = ±(2j+1)/3");
    sub->add_option("--sign", cfg.sign, "Sign of b0 for --j (+ or -)");
    sub->add_flag("--designated", cfg.designated, "The designated mode (j = m+1, +); the default");
    sub->add_option("--b0", cfg.b0, "Explicit rational b0, e.g. 5/3");
  };

  auto* poly = app.add_subcommand("poly", "Build P_m: rational, integer and monic forms with c_m, d_m");
  poly->add_option("--m", cfg.m, "Order m ≥ 1")->required();
  poly->callback([&] { action = run_poly; });

  auto* roots = app.add_subcommand("roots", "Rational roots of P_m from the rational-root oracle");
  roots->add_option("--m", cfg.m, "Order m ≥ 1")->required();
  roots->callback([&] { action = run_roots; });

  auto* verify = app.add_subcommand("verify", "Exact verification of the root set of P_m");
  verify->add_option("--m", cfg.m, "Order m ≥ 1")->required();
  verify->add_flag("--chain", cfg.chain, "Check R_{k−1} ⊆ R_k for every k ≤ m");
  verify->add_flag("--no-oracle", cfg.no_oracle, "Skip the rational-root oracle");
  verify->add_flag("--tamper", cfg.tamper, "Test hook: perturb one coefficient of P_m first");
  verify->callback([&] { action = run_verify; });

  auto* mode = app.add_subcommand("mode", "Emit the ansatz coefficients of a zero mode as JSON");
  mode->add_option("--m", cfg.m, "Order 0 ≤ m ≤ 50")->required();
  add_selectors(mode);
  mode->callback([&] { action = run_mode; });

  auto* field = app.add_subcommand("field", "Sample ψ, A, h and the residual on a cubic grid as CSV");
  field->add_option("--m", cfg.m, "Order 0 ≤ m ≤ 50")->required();
  add_selectors(field);
  field->add_option("--grid", cfg.grid, "Points per axis")->capture_default_str();
  field->add_option("--extent", cfg.extent, "Grid spans [-extent, extent]^3")->capture_default_str();
  field->add_option("--step", cfg.step, "Finite-difference step")->capture_default_str();
  field->callback([&] { action = run_field; });

  auto* bench = app.add_subcommand("bench", "Time build + factorization check and report coefficient growth");
  bench->add_option("--m-max", cfg.m_max, "Largest order")->capture_default_str();
  bench->callback([&] { action = run_bench; });

  for (auto* sub : {poly, roots, verify, mode, field, bench}) {
    sub->add_option("--format", cfg.format, "Output format: json, csv or text");
    sub->add_option("-o,--output", cfg.output, "Output path (default stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.threads = thread_override(cfg.threads);
    if (cfg.format.empty()) cfg.format = field->parsed() ? "csv" : "json";
    return action(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}
