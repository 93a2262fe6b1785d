#include "adsosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "adsosc/error.hpp"
#include "adsosc/oracle.hpp"
#include "adsosc/params.hpp"
#include "adsosc/quadrature.hpp"
#include "adsosc/spectrum.hpp"
#include "adsosc/table.hpp"
#include "adsosc/thermo.hpp"
#include "adsosc/wavefn.hpp"

namespace adsosc::cli {

namespace {

const std::vector<std::string> kCommands = {"spectrum", "wavefunction", "thermo", "verify", "bound"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string units = "hartree";
  double mass = 1.0;
  double omega = 1.0;
  double b_field = 1.0;
  double lambda = 0.01;
  std::string format = "csv";
  std::string output = "-";
};

void add_output_options(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output", c.output, "Output file ('-' for stdout)")->capture_default_str();
}

void add_physics_options(CLI::App* sub, Common& c) {
  sub->add_option("--units", c.units, "Unit system")
      ->check(CLI::IsMember({"hartree", "natural", "si"}))
      ->capture_default_str();
  sub->add_option("--mass", c.mass, "Particle mass (electron masses; kg with --units si)")
      ->capture_default_str();
  sub->add_option("--omega", c.omega, "Oscillator frequency")->capture_default_str();
  sub->add_option("--B", c.b_field, "Magnetic field")->capture_default_str();
  sub->add_option("--lambda", c.lambda, "Deformation parameter")->capture_default_str();
}

PhysicalParams params_of(const Common& c) {
  return make_params(*parse_unit_system(c.units), c.mass, c.omega, c.b_field, c.lambda);
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": cannot parse '" + item + "'");
    }
  }
  if (values.empty()) throw UsageError(what + ": empty list");
  return values;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) words.push_back(item);
  return words;
}

table::Format format_of(const Common& c) {
  return c.format == "json" ? table::Format::Json : table::Format::Csv;
}

std::string branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

// ---- spectrum ----

struct SpectrumArgs {
  int n_max = 4;
  int l_max = 0;
  std::string schemes = "kg";
  std::string branch = "plus";
  std::string m_s = "-1,0,1";
};

table::Table spectrum_table(const PhysicalParams& p, const SpectrumArgs& a) {
  if (a.n_max < 0 || a.l_max < 0) throw UsageError("--n-max and --l-max must be >= 0");
  std::vector<Branch> branches;
  if (a.branch == "plus" || a.branch == "both") branches.push_back(Branch::Plus);
  if (a.branch == "minus" || a.branch == "both") branches.push_back(Branch::Minus);
  std::vector<int> spins;
  for (double v : parse_list(a.m_s, "--m-s")) {
    if (v != -1.0 && v != 0.0 && v != 1.0) throw UsageError("--m-s values must be -1, 0 or 1");
    spins.push_back(static_cast<int>(v));
  }

  table::Table t{{"n", "l", "m_s", "scheme", "branch", "energy"}, {}};
  auto emit = [&](int n, int l, int m_s, std::string_view scheme, const std::string& branch,
                  double e) {
    t.add_row({static_cast<long long>(n), static_cast<long long>(l), static_cast<long long>(m_s),
               std::string(scheme), branch, e});
  };
  for (const std::string& scheme : split_words(a.schemes)) {
    for (int n = 0; n <= a.n_max; ++n) {
      for (int l = 0; l <= a.l_max; ++l) {
        if (scheme == "kg" || scheme == "dkp_scalar") {
          for (Branch b : branches) {
            const QuantumNumbers qn{n, l, 0, b};
            const auto level = scheme == "kg" ? spectrum::kg_energy(p, qn)
                                              : spectrum::dkp_scalar_energy(p, qn);
            emit(n, l, 0, scheme, branch_name(b), level.value);
          }
        } else if (scheme == "kg_nonrel") {
          emit(n, l, 0, scheme, "none", spectrum::kg_nonrel_energy(p, {n, l, 0, Branch::Plus}).value);
        } else if (scheme == "dkp_vector_nonrel") {
          for (int m_s : spins) {
            emit(n, l, m_s, scheme, "none",
                 spectrum::dkp_vector_nonrel_energy(p, {n, l, m_s, Branch::Plus}).value);
          }
        } else if (scheme == "flat_first_order") {
          if (l != 0) throw UsageError("flat_first_order is defined for l = 0 only (use --l-max 0)");
          const auto fo = spectrum::first_order_expansion(p, n);
          emit(n, l, 0, scheme, "plus", fo.e0 + fo.delta_e());
        } else {
          throw UsageError("unknown scheme '" + scheme + "'");
        }
      }
    }
  }
  return t;
}

// ---- wavefunction ----

struct WaveArgs {
  int n = 0;
  int l = 0;
  std::string kind = "kg";
  int points = 1024;
};

table::Table wavefunction_table(const PhysicalParams& p, const WaveArgs& a) {
  if (a.points < 1) throw UsageError("--points must be >= 1");
  const QuantumNumbers qn{a.n, a.l, 0, Branch::Plus};
  const auto points = static_cast<std::size_t>(a.points);
  if (a.kind == "kg") {
    table::Table t{{"r", "value"}, {}};
    for (const auto& g : wavefn::kg_state(p, qn).sample(points)) t.add_row({g.r, g.value});
    return t;
  }
  // psi2 is purely imaginary; its imaginary part is written
  table::Table t{{"r", "phi", "chi", "psi1", "psi2", "psi3"}, {}};
  for (const auto& row : wavefn::dkp_scalar_spinor(p, qn).sample(points)) {
    const auto& v = row.values;
    t.add_row({row.r, v[0].real(), v[1].real(), v[2].real(), v[3].imag(), v[4].real()});
  }
  return t;
}

// ---- thermo ----

struct ThermoArgs {
  std::string lambdas = "0,0.005,0.01,0.02";
  double t_min = 0.05;
  double t_max = 10.0;
  int steps = 200;
  std::string scheme = "closed_form";
  int l = 0;
};

void add_thermo_row(table::Table& t, double lambda, const thermo::ThermoPoint& pt,
                    const std::string& flag) {
  t.add_row({lambda, pt.T, pt.Z, pt.F, pt.U, pt.C, pt.S, std::string(thermo::to_string(pt.scheme)),
             flag});
}

table::Table thermo_table(const PhysicalParams& base, const ThermoArgs& a) {
  const std::vector<double> lambdas = parse_list(a.lambdas, "--lambdas");
  table::Table t{{"lambda", "T", "Z", "F", "U", "C", "S", "scheme", "flag"}, {}};
  if (a.scheme == "closed_form") {
    for (const auto& row : thermo::figure_sweep(base, lambdas, a.t_min, a.t_max, a.steps)) {
      add_thermo_row(t, row.lambda, row.point, row.flag);
    }
    return t;
  }
  if (a.steps < 1 || !(a.t_min > 0.0) || !(a.t_max >= a.t_min)) {
    throw UsageError("need --steps >= 1 and 0 < --t-min <= --t-max");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const bool direct = a.scheme == "direct";
  for (double lambda : lambdas) {
    PhysicalParams p = base;
    p.lambda = lambda;
    for (int i = 0; i < a.steps; ++i) {
      const double T = a.steps == 1 ? a.t_min : a.t_min + (a.t_max - a.t_min) * i / (a.steps - 1.0);
      try {
        const auto pt = direct ? thermo::thermo_direct(p, a.l, T)
                               : thermo::thermo_euler_maclaurin(p, a.l, T);
        add_thermo_row(t, lambda, pt, "");
      } catch (const NumericError& e) {
        const auto scheme = direct ? thermo::Scheme::Direct : thermo::Scheme::EulerMaclaurin;
        add_thermo_row(t, lambda, {T, nan, nan, nan, nan, nan, scheme, false},
                       std::string(to_string(e.code())));
      }
    }
  }
  return t;
}

// ---- verify ----

struct VerifyArgs {
  std::string suite = "oracle";
  std::string lambdas = "0.001,0.01,0.1";
  std::string fields = "0,1";
  int n_max = 4;
  int l_max = 3;
  int grid = 2000;
  double tol = 1e-6;
};

struct VerifyOutcome {
  table::Table table;
  bool passed;
};

VerifyOutcome verify_table(const VerifyArgs& a) {
  const std::vector<double> lambdas = parse_list(a.lambdas, "--lambda");
  const std::vector<double> fields = parse_list(a.fields, "--B");
  if (a.n_max < 0 || a.l_max < 0) throw UsageError("--n-max and --l-max must be >= 0");
  const bool all = a.suite == "all";
  VerifyOutcome res{{{"suite", "lambda", "B", "l", "max_rel_error", "tolerance", "status"}, {}}, true};
  auto emit = [&](const std::string& suite, double lambda, double b, int l, double err,
                  double tol) {
    const bool ok = err <= tol;
    res.passed = res.passed && ok;
    res.table.add_row({suite, lambda, b, static_cast<long long>(l), err, tol,
                       std::string(ok ? "pass" : "fail")});
  };

  std::vector<oracle::GridCase> cases;
  for (double lambda : lambdas) {
    for (double b : fields) {
      for (int l = 0; l <= a.l_max; ++l) cases.push_back({lambda, b, l});
    }
  }
  if (all || a.suite == "oracle") {
    const auto rows = oracle::verify_grid(cases, a.n_max, a.grid);
    const std::size_t per_case = static_cast<std::size_t>(a.n_max) + 1;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      double worst = 0.0;
      for (std::size_t k = 0; k < per_case; ++k) worst = std::max(worst, rows[i * per_case + k].rel_error);
      emit("oracle", cases[i].lambda, cases[i].b_field, cases[i].l, worst, a.tol);
    }
  }
  if (all || a.suite == "quadrature") {
    const int n_top = std::min(a.n_max, 3);
    for (const auto& c : cases) {
      const PhysicalParams p = make_params(UnitSystem::Hartree, 1.0, 1.0, c.b_field, c.lambda);
      std::vector<wavefn::RadialFunction> states;
      for (int n = 0; n <= n_top; ++n) states.push_back(wavefn::kg_wavefunction(p, {n, c.l, 0, Branch::Plus}));
      double norm_err = 0.0;
      double overlap = 0.0;
      for (int n = 0; n <= n_top; ++n) {
        for (int m = n; m <= n_top; ++m) {
          const double v = quad::quad_inner(states[n], states[m], Measure::AdS, c.lambda).value;
          if (m == n) {
            norm_err = std::max(norm_err, std::abs(v - 1.0));
          } else {
            overlap = std::max(overlap, std::abs(v));
          }
        }
      }
      emit("norm", c.lambda, c.b_field, c.l, norm_err, 1e-8);
      emit("orthogonality", c.lambda, c.b_field, c.l, overlap, 1e-7);
    }
  }
  return res;
}

// ---- bound ----

table::Table bound_table(double b, double n) {
  const auto r = spectrum::lambda_upper_bound(b, n);
  table::Table t{{"B", "n", "lambda_max", "delta_p_min"}, {}};
  t.add_row({r.b_tesla, r.n_level, r.lambda_max, r.delta_p_min});
  return t;
}

// Pulls --config out of the argument list and splices its tokens in right
// after the subcommand, so flags given explicitly come later and win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> injected;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      const auto tokens = config_tokens(args[++i]);
      injected.insert(injected.end(), tokens.begin(), tokens.end());
    } else if (a.rfind("--config=", 0) == 0) {
      const auto tokens = config_tokens(a.substr(9));
      injected.insert(injected.end(), tokens.begin(), tokens.end());
    } else {
      rest.push_back(a);
    }
  }
  if (injected.empty()) return rest;
  auto sub = std::find_if(rest.begin(), rest.end(), [](const std::string& s) {
    return std::find(kCommands.begin(), kCommands.end(), s) != kCommands.end();
  });
  if (sub == rest.end()) throw UsageError("--config needs a subcommand");
  rest.insert(sub + 1, injected.begin(), injected.end());
  return rest;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(text.substr(0, eq));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
    tokens.push_back("--" + key);
    tokens.push_back(trim(text.substr(eq + 1)));
  }
  return tokens;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klein-Gordon and DKP oscillators in a magnetic field with AdS deformation", "adsosc"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value file of defaults (explicit flags win)");

  Common spectrum_c, wave_c, thermo_c, bound_c, verify_c;
  thermo_c.units = "natural";

  SpectrumArgs sa;
  auto* spec = app.add_subcommand("spectrum", "Energy levels");
  add_physics_options(spec, spectrum_c);
  add_output_options(spec, spectrum_c);
  spec->add_option("--n-max", sa.n_max, "Largest radial quantum number")->capture_default_str();
  spec->add_option("--l-max", sa.l_max, "Largest angular quantum number")->capture_default_str();
  spec->add_option("--scheme", sa.schemes,
                   "Comma list of kg, dkp_scalar, kg_nonrel, dkp_vector_nonrel, flat_first_order")
      ->capture_default_str();
  spec->add_option("--branch", sa.branch, "Energy branch")
      ->check(CLI::IsMember({"plus", "minus", "both"}))
      ->capture_default_str();
  spec->add_option("--m-s", sa.m_s, "Spin projections for dkp_vector_nonrel")->capture_default_str();

  WaveArgs wa;
  auto* wave = app.add_subcommand("wavefunction", "Sampled radial wavefunction");
  add_physics_options(wave, wave_c);
  add_output_options(wave, wave_c);
  wave->add_option("--n", wa.n, "Radial quantum number")->capture_default_str();
  wave->add_option("--l", wa.l, "Angular quantum number")->capture_default_str();
  wave->add_option("--kind", wa.kind, "kg radial function or scalar dkp spinor")
      ->check(CLI::IsMember({"kg", "dkp"}))
      ->capture_default_str();
  wave->add_option("--points", wa.points, "Number of samples")->capture_default_str();

  ThermoArgs ta;
  auto* thermo_cmd = app.add_subcommand("thermo", "Thermodynamic sweep over T and lambda");
  add_physics_options(thermo_cmd, thermo_c);
  add_output_options(thermo_cmd, thermo_c);
  thermo_cmd->add_option("--lambdas", ta.lambdas, "Comma list of lambda values")->capture_default_str();
  thermo_cmd->add_option("--t-min", ta.t_min, "Lowest temperature")->capture_default_str();
  thermo_cmd->add_option("--t-max", ta.t_max, "Highest temperature")->capture_default_str();
  thermo_cmd->add_option("--steps", ta.steps, "Temperature grid points")->capture_default_str();
  thermo_cmd->add_option("--scheme", ta.scheme, "Partition function route")
      ->check(CLI::IsMember({"closed_form", "direct", "euler_maclaurin"}))
      ->capture_default_str();
  thermo_cmd->add_option("--l", ta.l, "Angular quantum number of the summed levels")
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Oracle and quadrature checks of the closed forms");
  add_output_options(verify, verify_c);
  verify->add_option("--suite", va.suite, "Check suite")
      ->check(CLI::IsMember({"oracle", "quadrature", "all"}))
      ->capture_default_str();
  verify->add_option("--lambda", va.lambdas, "Comma list of lambda values")->capture_default_str();
  verify->add_option("--B", va.fields, "Comma list of field values")->capture_default_str();
  verify->add_option("--n-max", va.n_max, "Largest n checked")->capture_default_str();
  verify->add_option("--l-max", va.l_max, "Largest l checked")->capture_default_str();
  verify->add_option("--grid", va.grid, "Initial oracle grid size")->capture_default_str();
  verify->add_option("--tol", va.tol, "Oracle relative tolerance")->capture_default_str();

  double bound_b = 6.0;
  double bound_n = 1e10;
  auto* bound = app.add_subcommand("bound", "Penning-trap upper bound on lambda (SI)");
  add_output_options(bound, bound_c);
  bound->add_option("--B", bound_b, "Field in tesla")->capture_default_str();
  bound->add_option("--n", bound_n, "Level index")->capture_default_str();

  try {
    std::vector<std::string> expanded = expand_config(args);
    std::reverse(expanded.begin(), expanded.end());
    app.parse(expanded);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    table::Table t;
    Common* c = nullptr;
    bool passed = true;
    if (spec->parsed()) {
      c = &spectrum_c;
      t = spectrum_table(params_of(spectrum_c), sa);
    } else if (wave->parsed()) {
      c = &wave_c;
      t = wavefunction_table(params_of(wave_c), wa);
    } else if (thermo_cmd->parsed()) {
      c = &thermo_c;
      t = thermo_table(params_of(thermo_c), ta);
    } else if (verify->parsed()) {
      c = &verify_c;
      auto outcome = verify_table(va);
      t = std::move(outcome.table);
      passed = outcome.passed;
    } else {
      c = &bound_c;
      t = bound_table(bound_b, bound_n);
    }

    if (c->output == "-") {
      table::write(out, t, format_of(*c));
    } else {
      std::ofstream file(c->output, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + c->output + "'");
      table::write(file, t, format_of(*c));
    }
    if (!passed) {
      err << "verification failed\n";
      return kNumericFailure;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericError& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::InvalidArgument ? kUsageError : kNumericFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
}

}  // namespace adsosc::cli
