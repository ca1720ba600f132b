#include "stratmhd/cli/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "stratmhd/background/background.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"
#include "stratmhd/sim/initial.hpp"
#include "stratmhd/sim/rhs.hpp"
#include "stratmhd/sim/run.hpp"
#include "stratmhd/sim/snapshot.hpp"

#ifndef STRATMHD_VERSION
#define STRATMHD_VERSION "unknown"
#endif

namespace stratmhd::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string utc_stamp(std::chrono::system_clock::time_point tp, const char* fmt) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[64];
  std::strftime(buf, sizeof(buf), fmt, &tm);
  return buf;
}

fs::path make_run_dir(const ExperimentConfig& cfg, std::chrono::system_clock::time_point now) {
  const std::string base = "run-" + utc_stamp(now, "%Y%m%dT%H%M%SZ") + "-" +
                           to_string(cfg.mode) + "-seed" + std::to_string(cfg.seed);
  fs::create_directories(cfg.out_dir);
  fs::path dir = fs::path(cfg.out_dir) / base;
  for (int n = 1; fs::exists(dir); ++n) {
    dir = fs::path(cfg.out_dir) / (base + "-" + std::to_string(n));
  }
  fs::create_directory(dir);
  return dir;
}

Eigen::VectorXd padded(const std::vector<double>& v, int ny) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(ny);
  for (size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

std::vector<double> to_vec(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

struct Resolved {
  Eigen::VectorXd phi0, psi0;
  std::string source;
};

Resolved resolve_background(const ExperimentConfig& cfg, sim::Rng& rng) {
  const auto& p = cfg.sim.params;
  const int ny = p.grid.ny;
  const bool explicit_phi = !cfg.phi0.empty() || !cfg.phi0_csv.empty();
  const bool explicit_psi = !cfg.psi0.empty() || !cfg.psi0_csv.empty();
  Resolved r;
  if (!explicit_phi && !explicit_psi) {
    std::tie(r.phi0, r.psi0) = sim::random_background(ny, cfg.bg_amplitude, p.k_order, rng);
    r.source = cfg.bg_amplitude > 0.0 ? "random" : "zero";
    return r;
  }
  r.phi0 = cfg.phi0_csv.empty() ? padded(cfg.phi0, ny) : load_profile_csv(cfg.phi0_csv, ny);
  r.psi0 = cfg.psi0_csv.empty() ? padded(cfg.psi0, ny) : load_profile_csv(cfg.psi0_csv, ny);
  r.source = "explicit";
  return r;
}

json config_json(const ExperimentConfig& cfg, const Resolved& bg) {
  const auto& s = cfg.sim;
  const auto& p = s.params;
  return json{
      {"physics",
       {{"kappa", p.kappa},
        {"c0", p.c0},
        {"k_order", p.k_order},
        {"allow_low_k", p.allow_low_order},
        {"mode", to_string(cfg.mode)}}},
      {"grid", {{"l_x", p.grid.lx}, {"n_x", p.grid.nx}, {"n_y", p.grid.ny}, {"dealias", s.dealias}}},
      {"time", {{"dt", s.dt}, {"t_end", s.t_end}, {"integrating_factor", s.integrating_factor}}},
      {"init",
       {{"epsilon0", s.epsilon0},
        {"seed", cfg.seed},
        {"bg_amplitude", cfg.bg_amplitude},
        {"background_source", bg.source},
        {"phi0", to_vec(bg.phi0)},
        {"psi0", to_vec(bg.psi0)}}},
      {"output",
       {{"output_stride", s.output_stride},
        {"snapshots", cfg.snapshots},
        {"snapshot_stride", cfg.snapshot_stride}}},
  };
}

json fit_json(const std::vector<double>& t, const std::vector<double>& v, double t0, double t1) {
  try {
    const auto f = diagnostics::fit_decay(t, v, t0, t1);
    return json{{"rate", f.rate},       {"intercept", f.intercept}, {"r_squared", f.r_squared},
                {"t_start", f.t_start}, {"t_end", f.t_end},         {"samples", f.samples}};
  } catch (const Error& e) {
    return json{{"error", e.what()}};
  }
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream os(path);
  os << j.dump(2) << '\n';
  if (!os) throw Error("failed writing " + path.string());
}

struct Series {
  std::vector<diagnostics::EnergyReport> rows;
  sim::Termination termination = sim::Termination::Completed;
  std::string message;
  std::optional<double> first_violation;
  double max_divergence = 0.0;
  int weight_failures = 0;
};

Series run_nonlinear(const ExperimentConfig& cfg, const background::BackgroundModal& bg,
                     sim::Rng& rng, const sim::Observer& obs) {
  const auto& p = cfg.sim.params;
  sim::PerturbationState init;
  init.fields = sim::random_initial(p.grid, cfg.sim.epsilon0, p.k_order, rng);
  auto traj = sim::run(cfg.sim, bg, init, obs);
  Series s;
  s.rows = std::move(traj.reports);
  s.termination = traj.termination;
  s.message = traj.message;
  s.first_violation = traj.first_smallness_violation;
  s.max_divergence = traj.max_divergence;
  return s;
}

std::vector<double> output_times(const sim::SimConfig& c) {
  const long steps = std::max(1L, std::lround(c.t_end / c.dt));
  std::vector<double> t;
  for (long n = 0; n <= steps; ++n) {
    if (n % c.output_stride == 0 || n == steps) t.push_back(n == steps ? c.t_end : n * c.dt);
  }
  return t;
}

Series run_linear(const ExperimentConfig& cfg, sim::Rng& rng, const sim::Observer& obs) {
  const auto& p = cfg.sim.params;
  const auto zero = background::zero_background(p.grid.ny, p.kappa, p.c0);
  const Fields init = sim::random_initial(p.grid, cfg.sim.epsilon0, p.k_order, rng);
  Series s;
  for (double t : output_times(cfg.sim)) {
    sim::PerturbationState st;
    st.t = t;
    st.fields = linear::evolve_linear(init, p.kappa, p.c0, t);
    st.cached_rhs = sim::linear_rhs(st.fields, p);
    s.rows.push_back(diagnostics::energy_report(st, zero, p.k_order));
    s.max_divergence = std::max(s.max_divergence, s.rows.back().divergence);
    if (obs) obs(st);
  }
  return s;
}

Series run_background(const ExperimentConfig& cfg, const background::BackgroundModal& bg,
                      const sim::Observer& obs) {
  const auto& p = cfg.sim.params;
  Series s;
  for (double t : output_times(cfg.sim)) {
    sim::PerturbationState st;
    st.t = t;
    st.fields = Fields::zeros(p.grid);
    st.cached_rhs = Fields::zeros(p.grid);
    s.rows.push_back(diagnostics::energy_report(st, bg, p.k_order));
    if (obs) obs(st);
  }
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const std::vector<std::string>& energy_columns() {
  static const std::vector<std::string> cols = {
      "t",          "E_k",           "E_4",           "Gamma_kp1",
      "norm_u_Hk",  "norm_dtu_Hk",   "norm_rho_Hkp1", "norm_dtrho_Hkp1",
      "smallness_ok", "bg_phi_norm", "bg_psi_norm"};
  return cols;
}

void write_energy_csv(const std::string& path,
                      const std::vector<diagnostics::EnergyReport>& rows) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error("cannot open " + path + " for writing");
  const auto& cols = energy_columns();
  for (size_t i = 0; i < cols.size(); ++i) {
    std::fprintf(f, "%s%s", cols[i].c_str(), i + 1 < cols.size() ? "," : "\n");
  }
  for (const auto& r : rows) {
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%.17g\n", r.t,
                 r.E_k, r.E_4, r.Gamma_kp1, r.norm_u_Hk, r.norm_dtu_Hk, r.norm_rho_Hkp1,
                 r.norm_dtrho_Hkp1, r.smallness_ok ? 1 : 0, r.bg_phi_norm, r.bg_psi_norm);
  }
  const bool bad = std::ferror(f) != 0;
  if (std::fclose(f) != 0 || bad) throw Error("failed writing " + path);
}

RunResult run_experiment(const std::string& config_path, std::ostream& log) {
  ExperimentConfig cfg;
  std::string text;
  try {
    text = slurp(config_path);
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return {"", kExitConfig, e.what()};
  }
  return run_experiment(cfg, text, log);
}

RunResult run_experiment(const ExperimentConfig& cfg, const std::string& config_text,
                         std::ostream& log) {
  const auto& p = cfg.sim.params;
  const int k = p.k_order;
  sim::Rng rng(cfg.seed);
  Resolved bgdata;
  background::BackgroundModal bg;
  try {
    bgdata = resolve_background(cfg, rng);
    bg = background::init_background(bgdata.phi0, bgdata.psi0, p);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return {"", kExitConfig, e.what()};
  } catch (const InvalidArgument& e) {
    log << "config error: " << e.what() << '\n';
    return {"", kExitConfig, e.what()};
  }

  const auto wall_start = std::chrono::system_clock::now();
  fs::path dir;
  try {
    dir = make_run_dir(cfg, wall_start);
  } catch (const fs::filesystem_error& e) {
    log << "cannot create run directory: " << e.what() << '\n';
    return {"", 1, e.what()};
  }
  log << "run directory: " << dir.string() << '\n';

  RunResult result{dir.string(), kExitOk, "completed"};
  std::vector<std::string> files;
  int outputs = 0;
  sim::Observer obs;
  if (cfg.snapshots) {
    fs::create_directory(dir / "snapshots");
    obs = [&](const sim::PerturbationState& st) {
      if (outputs++ % cfg.snapshot_stride != 0) return;
      char name[64];
      std::snprintf(name, sizeof(name), "snapshots/snap_%06d.bin", outputs - 1);
      sim::write_snapshot((dir / name).string(), st);
      files.emplace_back(name);
    };
  }

  Series series;
  try {
    switch (cfg.mode) {
      case Mode::Nonlinear: series = run_nonlinear(cfg, bg, rng, obs); break;
      case Mode::Linear: series = run_linear(cfg, rng, obs); break;
      case Mode::Background: series = run_background(cfg, bg, obs); break;
    }
  } catch (const NumericalAbort& e) {
    series.termination = sim::Termination::NumericalAbort;
    series.message = e.what();
  } catch (const HypothesisViolation& e) {
    series.termination = sim::Termination::SmallnessViolation;
    series.message = e.what();
  }
  for (const auto& r : series.rows) series.weight_failures += r.weight_positive ? 0 : 1;

  switch (series.termination) {
    case sim::Termination::Completed: break;
    case sim::Termination::NumericalAbort:
      result.exit_code = kExitNumerical;
      result.message = "numerical abort: " + series.message;
      break;
    case sim::Termination::SmallnessViolation:
      result.exit_code = kExitHypothesis;
      result.message = "hypothesis violation: " + series.message;
      break;
  }

  try {
    write_energy_csv((dir / "energy.csv").string(), series.rows);
    files.emplace_back("energy.csv");

    const double alpha = background::background_decay_rate(p);
    const double ckappa = linear::spectral_abscissa(p);
    const double beta = linear::bootstrap_rate(p.kappa, p.c0);
    std::vector<double> t, ek, e4, phin;
    for (const auto& r : series.rows) {
      t.push_back(r.t);
      ek.push_back(r.E_k);
      e4.push_back(r.E_4);
      phin.push_back(r.bg_phi_norm);
    }
    const double t0 = cfg.sim.t_end / 4.0, t1 = cfg.sim.t_end;
    json decay{{"mode", to_string(cfg.mode)},
               {"alpha", alpha},
               {"c_kappa", ckappa},
               {"beta", beta},
               {"fit_window", {t0, t1}}};
    json verdicts{{"termination", sim::to_string(series.termination)}};
    auto rate_verdict = [&](const char* name, const std::vector<double>& v, double target,
                            bool two_sided) {
      json f = fit_json(t, v, t0, t1);
      decay["fits"][name] = f;
      decay["fits"][name]["target"] = target;
      if (f.contains("rate")) {
        const double r = f["rate"].get<double>();
        verdicts["rate_ok"] = two_sided ? std::abs(r - target) <= 0.02 : r >= target - 0.02;
      } else {
        verdicts["rate_ok"] = false;
      }
    };
    switch (cfg.mode) {
      case Mode::Nonlinear: rate_verdict("E_4", e4, beta, false); break;
      case Mode::Linear: rate_verdict("E_k", ek, ckappa, true); break;
      case Mode::Background: rate_verdict("bg_phi_norm", phin, alpha, false); break;
    }
    bool smallness_ok = true;
    for (const auto& r : series.rows) smallness_ok = smallness_ok && r.smallness_ok;
    verdicts["smallness_ok"] = smallness_ok;
    verdicts["first_smallness_violation"] =
        series.first_violation ? json(*series.first_violation) : json(nullptr);
    verdicts["max_divergence"] = series.max_divergence;
    verdicts["divergence_ok"] = series.max_divergence < 1e-10;
    verdicts["weight_positive"] = series.weight_failures == 0;
    verdicts["differential_monitor"] = diagnostics::differential_monitor(series.rows);
    double m0 = 0.0;
    if (cfg.mode == Mode::Nonlinear && bg.size() > 0) m0 = diagnostics::bootstrap_m0(bg, k);
    if (m0 > 0.0 && beta > 0.0 && !series.rows.empty()) {
      const auto b = diagnostics::bootstrap_monitor(t, e4, m0, beta);
      verdicts["bootstrap"] = {{"m0", m0}, {"max_ratio", b.max_ratio},
                               {"bound_satisfied", b.bound_satisfied}};
    } else {
      verdicts["bootstrap"] = {{"m0", m0}, {"max_ratio", nullptr}, {"bound_satisfied", nullptr}};
    }
    decay["verdicts"] = verdicts;
    write_json(dir / "decay.json", decay);
    files.emplace_back("decay.json");

    const auto wall_end = std::chrono::system_clock::now();
    json manifest{
        {"version", STRATMHD_VERSION},
        {"generator", sim::Rng::kName},
        {"start_time", utc_stamp(wall_start, "%Y-%m-%dT%H:%M:%SZ")},
        {"end_time", utc_stamp(wall_end, "%Y-%m-%dT%H:%M:%SZ")},
        {"wall_seconds", std::chrono::duration<double>(wall_end - wall_start).count()},
        {"exit_code", result.exit_code},
        {"message", result.message},
        {"config", config_json(cfg, bgdata)},
        {"config_text", config_text},
        {"files", files},
        {"verdicts", verdicts},
    };
    for (const auto& f : files) {
      if (!fs::exists(dir / f)) throw Error("listed output missing: " + f);
    }
    const fs::path tmp = dir / "manifest.json.tmp";
    write_json(tmp, manifest);
    fs::rename(tmp, dir / "manifest.json");
  } catch (const std::exception& e) {
    log << "write failure: " << e.what() << '\n';
    return {dir.string(), 1, e.what()};
  }
  log << result.message << '\n';
  return result;
}

}  // namespace stratmhd::cli
