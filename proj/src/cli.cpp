#include "cpwall/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cpwall/analysis.hpp"
#include "cpwall/errors.hpp"
#include "cpwall/thermal.hpp"
#include "cpwall/units.hpp"
#include "cpwall/vacuum.hpp"
#include "cpwall/verify.hpp"

namespace cpwall::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;
const char* const kPresetLabel = "optical transition at room temperature";

std::string csv_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::string text_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

struct EvalArgs {
  std::optional<double> k0;
  std::optional<double> lambda0;
  double alpha0_nm3 = 1.0;
  double z = 0.0;
  std::optional<double> temperature;
  std::optional<double> theta;
  std::string units = "natural";
  std::string format = "json";
};

struct CurveArgs {
  int figure = 1;
  std::optional<double> theta;
  int points = 200;
  std::optional<double> lo;
  std::optional<double> hi;
};

struct AnalyzeArgs {
  std::optional<double> theta;
  std::vector<double> windows;
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const auto constants = units::constants_from_environment();
  if (a.temperature && a.theta) throw DomainError("eval: give --temperature or --theta, not both");
  AtomParams atom;
  atom.k0 = a.k0 ? *a.k0 : 2.0 * kPi / *a.lambda0;
  atom.alpha0 = units::alpha_nm3_to_um3(a.alpha0_nm3);
  atom.validate();
  require_distance(a.z, "eval");

  ThermalEnvironment env;
  std::string preset;
  if (a.temperature) {
    if (*a.temperature < 0.0 || !std::isfinite(*a.temperature)) throw DomainError("eval: temperature must be >= 0");
    if (*a.temperature == 0.0) {
      env = ThermalEnvironment::vacuum();
    } else {
      env = ThermalEnvironment::from_thermal_length(atom, units::thermal_length_um(*a.temperature, constants));
    }
    env.temperature_kelvin = *a.temperature;
  } else {
    env = ThermalEnvironment::from_theta(atom, a.theta ? *a.theta : constants.default_theta);
    if (!env.is_vacuum()) env.temperature_kelvin = units::temperature_from_thermal_length(env.lambda_T, constants);
    if (!a.theta) preset = kPresetLabel;
  }

  const auto geometry = GeometryPoint::make(atom, env, a.z);
  const auto breakdown = total_potential(atom, env, a.z);
  const auto how = choose_thermal_approximation(env, a.z);
  const double thermal_auto = thermal_potential(atom, env, a.z, how);
  const bool si = a.units == "si";
  const auto energy = [&](double v) { return si ? units::energy_to_si(v, constants) : v; };
  const std::string energy_unit = si ? "J" : "hbar*c/um";

  json j;
  j["k0_per_um"] = atom.k0;
  j["lambda0_um"] = atom.lambda0();
  j["alpha0_nm3"] = a.alpha0_nm3;
  j["z_um"] = a.z;
  j["temperature_K"] = env.temperature_kelvin ? json(*env.temperature_kelvin) : json(nullptr);
  j["lambda_T_um"] = env.is_vacuum() ? json(nullptr) : json(env.lambda_T);
  j["theta"] = env.is_vacuum() ? json(nullptr) : json(env.theta);
  j["preset"] = preset.empty() ? json(nullptr) : json(preset);
  j["x0"] = geometry.x0;
  j["z_over_lambda0"] = geometry.z_over_lambda0;
  j["z_over_lambdaT"] = env.is_vacuum() ? json(nullptr) : json(a.z / env.lambda_T);
  j["vacuum_regime"] = to_string(geometry.regime);
  j["thermal_approximation"] = to_string(how);
  j["energy_unit"] = energy_unit;
  j["vacuum"] = energy(breakdown.vacuum);
  j["thermal"] = energy(breakdown.thermal);
  j["total"] = energy(breakdown.total);
  j["thermal_auto"] = energy(thermal_auto);
  j["notes"] = breakdown.notes;

  if (a.format == "json") {
    out << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::string header;
    std::string row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      std::string cell;
      if (value.is_number()) {
        cell = csv_number(value.get<double>());
      } else if (value.is_string()) {
        cell = value.get<std::string>();
        if (cell.find_first_of(",\"") != std::string::npos) cell = "\"" + cell + "\"";
      }
      header += (first ? "" : ",") + key;
      row += (first ? "" : ",") + cell;
      first = false;
    }
    out << header << "\n" << row << "\n";
  } else {
    for (const auto& [key, value] : j.items()) {
      out << key << " = ";
      if (value.is_null()) {
        out << "-";
      } else if (value.is_number()) {
        out << text_number(value.get<double>());
      } else {
        out << value.get<std::string>();
      }
      out << "\n";
    }
  }
  return kExitOk;
}

int cmd_curve(const CurveArgs& a, const units::PhysicalConstants& constants, std::ostream& out) {
  if (a.points < 2) throw DomainError("curve: need at least 2 points");
  const AtomParams atom{1.0, 1.0};
  const double default_hi = a.figure == 1 ? 10.0 : (a.figure == 2 ? 3.0 : 1.5);
  const double lo = a.lo.value_or(0.0);
  const double hi = a.hi.value_or(default_hi);
  if (!(lo >= 0.0) || !(hi > lo) || !std::isfinite(hi)) throw DomainError("curve: need 0 <= lo < hi");

  // Samples x_i = lo + (hi - lo)(i + 1)/points, so x = 0 is never evaluated.
  std::vector<double> xs(a.points);
  for (int i = 0; i < a.points; ++i) xs[i] = lo + (hi - lo) * (i + 1) / a.points;

  if (a.figure == 1) {
    out << "k0z,exact_scaled,nonretarded_scaled,retarded_scaled\n";
    for (double kz : xs) {
      const double s = kz * kz * kz;
      out << csv_number(kz) << "," << csv_number(s * vacuum_potential(atom, kz)) << ","
          << csv_number(s * nonretarded_asymptote(atom, kz)) << "," << csv_number(s * retarded_asymptote(atom, kz))
          << "\n";
    }
    return kExitOk;
  }

  const auto env = ThermalEnvironment::from_theta(atom, a.theta.value_or(constants.default_theta));
  const double l4 = std::pow(env.lambda_T, 4);
  if (a.figure == 2) {
    out << "z_over_lambdaT,total_scaled,lifshitz_scaled\n";
    for (double u : xs) {
      const double z = u * env.lambda_T;
      const double s = u * u * u * l4;
      out << csv_number(u) << "," << csv_number(s * total_potential(atom, env, z).total) << ","
          << csv_number(s * lifshitz_asymptote(atom, env, z)) << "\n";
    }
  } else {
    out << "z_over_lambdaT,thermal_scaled,short_leading_scaled,vacuum_retarded_scaled\n";
    for (double u : xs) {
      const double z = u * env.lambda_T;
      out << csv_number(u) << "," << csv_number(l4 * thermal_potential_exact(atom, env, z)) << ","
          << csv_number(l4 * thermal_short_leading(atom, env, z)) << ","
          << csv_number(l4 * retarded_asymptote(atom, z)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(bool quick, const std::string& format, std::ostream& out) {
  const auto results = verify::run_acceptance(quick);
  bool all = true;
  json report = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["open_question"] = r.open_question;
    j["measured"] = r.measured;
    j["seconds"] = r.seconds;
    report.push_back(j);
  }
  if (format == "json") {
    json doc;
    doc["quick"] = quick;
    doc["all_passed"] = all;
    doc["criteria"] = report;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << verify::format_line(r) << "\n";
    out << (all ? "ALL PASSED" : "SOME CRITERIA FAILED") << "\n";
  }
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_analyze(const AnalyzeArgs& a, const units::PhysicalConstants& constants, std::ostream& out) {
  const AtomParams atom{1.0, 1.0};
  const auto env = ThermalEnvironment::from_theta(atom, a.theta.value_or(constants.default_theta));
  std::vector<std::pair<double, double>> windows;
  if (a.windows.empty()) {
    windows = {{0.2, 0.45}, {0.5, 0.75}};
  } else {
    if (a.windows.size() % 2 != 0) throw DomainError("analyze: --fit-window takes lo hi pairs");
    for (std::size_t i = 0; i < a.windows.size(); i += 2) windows.emplace_back(a.windows[i], a.windows[i + 1]);
  }

  const auto eq = analysis::find_thermal_equilibrium(atom, env);
  const double crossover = analysis::dominance_crossover(atom, env) / env.lambda_T;
  std::vector<analysis::QuadraticFit> fits;
  for (const auto& [lo, hi] : windows) fits.push_back(analysis::quadratic_fit(atom, env, lo, hi));
  std::vector<double> grid;
  for (double u : {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    grid.push_back(u * env.lambda_T);
  }
  const auto rows = analysis::regime_error_table(atom, env, grid);

  if (a.format == "json") {
    json j;
    j["theta"] = env.theta;
    j["equilibrium"] = {{"z_over_lambdaT", eq.z_star_over_lambdaT},
                        {"curvature", eq.curvature},
                        {"stable", eq.curvature_positive}};
    j["crossover_z_over_lambdaT"] = crossover;
    json fj = json::array();
    for (const auto& f : fits) {
      fj.push_back({{"u_lo", f.u_lo}, {"u_hi", f.u_hi}, {"a", f.a}, {"b", f.b}, {"c", f.c},
                    {"vertex", f.vertex()}, {"rms_residual_relative", f.rms_residual_relative}});
    }
    j["fits"] = fj;
    json rj = json::array();
    for (const auto& r : rows) {
      rj.push_back({{"z_over_lambdaT", r.u}, {"x0", r.x0}, {"vacuum", r.vacuum}, {"thermal", r.thermal},
                    {"total", r.total}, {"nonretarded", optional_json(r.nonretarded)},
                    {"retarded", optional_json(r.retarded)}, {"short_leading", optional_json(r.short_leading)},
                    {"long_expansion", optional_json(r.long_expansion)}, {"lifshitz", optional_json(r.lifshitz)}});
    }
    j["regime_errors"] = rj;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "theta = " << text_number(env.theta) << "\n";
  out << "equilibrium z*/lambda_T = " << text_number(eq.z_star_over_lambdaT) << " (d2V/du2 = "
      << text_number(eq.curvature) << ", " << (eq.curvature_positive ? "stable" : "unstable") << ")\n";
  out << "thermal overtakes vacuum at z/lambda_T = " << text_number(crossover) << "\n";
  for (const auto& f : fits) {
    out << "fit [" << text_number(f.u_lo) << ", " << text_number(f.u_hi) << "]: V = " << text_number(f.a) << " + "
        << text_number(f.b) << " u + " << text_number(f.c) << " u^2, vertex " << text_number(f.vertex())
        << ", rms residual " << text_number(f.rms_residual_relative) << "\n";
  }
  const auto cell = [](const std::optional<double>& v) { return v ? text_number(*v) : std::string("-"); };
  out << "z/lambda_T  x0  V0  V_T  nonretarded  retarded  short_leading  long_expansion  lifshitz\n";
  for (const auto& r : rows) {
    out << text_number(r.u) << "  " << text_number(r.x0) << "  " << text_number(r.vacuum) << "  "
        << text_number(r.thermal) << "  " << cell(r.nonretarded) << "  " << cell(r.retarded) << "  "
        << cell(r.short_leading) << "  " << cell(r.long_expansion) << "  " << cell(r.lifshitz) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir-Polder energy of a two-level atom near a perfect mirror"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Energy at one distance");
  auto* k0_opt = eval->add_option("--k0", ev.k0, "transition wavenumber, 1/um")->check(CLI::PositiveNumber);
  auto* l0_opt = eval->add_option("--lambda0", ev.lambda0, "transition wavelength, um")->check(CLI::PositiveNumber);
  k0_opt->excludes(l0_opt);
  eval->add_option("--alpha0", ev.alpha0_nm3, "static polarizability volume, nm^3")->capture_default_str();
  eval->add_option("--z", ev.z, "atom-wall distance, um")->required();
  auto* t_opt = eval->add_option("--temperature", ev.temperature, "kelvin; 0 means vacuum");
  auto* th_opt = eval->add_option("--theta", ev.theta, "k0 lambda_T (default preset 100)");
  t_opt->excludes(th_opt);
  eval->add_option("--units", ev.units)->check(CLI::IsMember({"si", "natural"}))->capture_default_str();
  eval->add_option("--format", ev.format)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();

  CurveArgs cv;
  auto* curve = app.add_subcommand("curve", "Scaled curve data of figures 1-3 as CSV");
  curve->alias("figure");
  curve->add_option("--figure", cv.figure)->check(CLI::IsMember({1, 2, 3}))->capture_default_str();
  curve->add_option("--theta", cv.theta, "k0 lambda_T");
  curve->add_option("--points", cv.points)->capture_default_str();
  curve->add_option("--lo", cv.lo, "abscissa start (exclusive)");
  curve->add_option("--hi", cv.hi, "abscissa end");

  bool quick = false;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Acceptance suite");
  verify_cmd->add_flag("--quick", quick, "reduced grids");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Equilibrium, crossover, fits and regime errors");
  analyze->add_option("--theta", an.theta, "k0 lambda_T");
  analyze->add_option("--fit-window", an.windows, "lo hi (repeatable)")->expected(2)->allow_extra_args(false);
  analyze->add_option("--format", an.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*eval && !ev.k0 && !ev.lambda0) throw CLI::RequiredError("--k0 or --lambda0");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFlags;
  }

  try {
    const auto constants = units::constants_from_environment();
    if (*eval) return cmd_eval(ev, out);
    if (*curve) return cmd_curve(cv, constants, out);
    if (*verify_cmd) return cmd_verify(quick, verify_format, out);
    return cmd_analyze(an, constants, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConvergence;
  }
}

}  // namespace cpwall::cli
