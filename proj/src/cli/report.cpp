#include "stratmhd/cli/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "stratmhd/background/background.hpp"
#include "stratmhd/cli/experiment.hpp"
#include "stratmhd/error.hpp"
#include "stratmhd/linear/linear.hpp"
#include "stratmhd/params.hpp"

namespace stratmhd::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::vector<diagnostics::EnergyReport> read_energy_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("missing energy.csv in " + path.parent_path().string());
  std::string line;
  if (!std::getline(in, line)) throw Error("corrupt energy.csv: empty file");
  std::string expected;
  for (const auto& c : energy_columns()) expected += (expected.empty() ? "" : ",") + c;
  if (line != expected) throw Error("corrupt energy.csv: unexpected header '" + line + "'");

  std::vector<diagnostics::EnergyReport> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        v.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error("corrupt energy.csv: bad value '" + cell + "' on line " +
                    std::to_string(lineno));
      }
    }
    if (v.size() != energy_columns().size()) {
      throw Error("corrupt energy.csv: wrong column count on line " + std::to_string(lineno));
    }
    diagnostics::EnergyReport r;
    r.t = v[0];
    r.E_k = v[1];
    r.E_4 = v[2];
    r.Gamma_kp1 = v[3];
    r.norm_u_Hk = v[4];
    r.norm_dtu_Hk = v[5];
    r.norm_rho_Hkp1 = v[6];
    r.norm_dtrho_Hkp1 = v[7];
    r.smallness_ok = v[8] != 0.0;
    r.bg_phi_norm = v[9];
    r.bg_psi_norm = v[10];
    r.weight_positive = std::isfinite(r.Gamma_kp1);
    rows.push_back(r);
  }
  return rows;
}

json fit_or_throw(const std::vector<double>& t, const std::vector<double>& v, double t0,
                  double t1) {
  diagnostics::DecayFit f;
  try {
    f = diagnostics::fit_decay(t, v, t0, t1);
  } catch (const InvalidArgument& e) {
    const std::string what = e.what();
    if (what.find("too few") != std::string::npos) throw Error("too few samples: " + what);
    if (what.find("non-positive") != std::string::npos) {
      throw Error("non-positive energy sample: " + what);
    }
    throw Error(what);
  }
  return json{{"rate", f.rate},       {"intercept", f.intercept}, {"r_squared", f.r_squared},
              {"t_start", f.t_start}, {"t_end", f.t_end},         {"samples", f.samples}};
}

}  // namespace

std::string emit_report(const std::string& run_dir, std::ostream& out) {
  const fs::path dir(run_dir);
  const auto rows = read_energy_csv(dir / "energy.csv");
  if (rows.size() < 2) {
    throw Error("too few samples: energy.csv has " + std::to_string(rows.size()) + " row(s)");
  }
  for (const auto& r : rows) {
    if (!(r.E_4 >= 0.0) || !(r.E_k >= 0.0)) {
      throw Error("non-positive energy sample at t=" + std::to_string(r.t));
    }
  }

  Params p;
  std::string mode = "nonlinear";
  double m0 = 0.0;
  bool have_manifest = false;
  if (std::ifstream mf(dir / "manifest.json"); mf) {
    json m;
    try {
      m = json::parse(mf);
      const auto& c = m.at("config");
      p.kappa = c.at("physics").at("kappa").get<double>();
      p.c0 = c.at("physics").at("c0").get<double>();
      p.k_order = c.at("physics").at("k_order").get<int>();
      mode = c.at("physics").at("mode").get<std::string>();
      if (m.contains("verdicts") && m["verdicts"].contains("bootstrap")) {
        m0 = m["verdicts"]["bootstrap"].value("m0", 0.0);
      }
    } catch (const json::exception& e) {
      throw Error(std::string("corrupt manifest.json: ") + e.what());
    }
    have_manifest = true;
  }

  const double alpha = background::background_decay_rate(p);
  const double ckappa = linear::spectral_abscissa(p);
  const double beta = linear::bootstrap_rate(p.kappa, p.c0);
  const double t1 = rows.back().t;
  const double t0 = t1 / 4.0;

  std::vector<double> t, ek, e4, phin;
  bool smallness_ok = true, weight_ok = true;
  for (const auto& r : rows) {
    t.push_back(r.t);
    ek.push_back(r.E_k);
    e4.push_back(r.E_4);
    phin.push_back(r.bg_phi_norm);
    smallness_ok = smallness_ok && r.smallness_ok;
    weight_ok = weight_ok && r.weight_positive;
  }

  json fits;
  json verdicts;
  if (mode == "background") {
    fits["bg_phi_norm"] = fit_or_throw(t, phin, t0, t1);
    verdicts["rate_ok"] = fits["bg_phi_norm"]["rate"].get<double>() >= alpha - 0.02;
  } else if (mode == "linear") {
    fits["E_k"] = fit_or_throw(t, ek, t0, t1);
    verdicts["rate_ok"] = std::abs(fits["E_k"]["rate"].get<double>() - ckappa) <= 0.02;
  } else {
    fits["E_4"] = fit_or_throw(t, e4, t0, t1);
    fits["E_k"] = fit_or_throw(t, ek, t0, t1);
    verdicts["rate_ok"] = fits["E_4"]["rate"].get<double>() >= beta - 0.02;
  }
  verdicts["smallness_ok"] = smallness_ok;
  verdicts["weight_positive"] = weight_ok;
  verdicts["differential_monitor"] = diagnostics::differential_monitor(rows);
  if (m0 > 0.0 && beta > 0.0) {
    const auto b = diagnostics::bootstrap_monitor(t, e4, m0, beta);
    verdicts["bootstrap_max_ratio"] = b.max_ratio;
    verdicts["bootstrap_bound_satisfied"] = b.bound_satisfied;
  } else {
    verdicts["bootstrap_max_ratio"] = nullptr;
    verdicts["bootstrap_bound_satisfied"] = nullptr;
  }

  json j{{"run_dir", run_dir},
         {"mode", mode},
         {"parameters_from", have_manifest ? "manifest.json" : "defaults"},
         {"kappa", p.kappa},
         {"c0", p.c0},
         {"k_order", p.k_order},
         {"alpha", alpha},
         {"c_kappa", ckappa},
         {"beta", beta},
         {"samples", rows.size()},
         {"fit_window", {t0, t1}},
         {"fits", fits},
         {"verdicts", verdicts}};

  out << "run:        " << run_dir << " (" << mode << ")\n";
  out << "alpha:      " << alpha << '\n';
  out << "c_kappa:    " << ckappa << '\n';
  out << "beta:       " << beta << '\n';
  for (const auto& [name, f] : fits.items()) {
    out << "rate " << name << ": " << f["rate"].get<double>() << " (r^2 "
        << f["r_squared"].get<double>() << ", " << f["samples"].get<int>() << " samples on ["
        << t0 << ", " << t1 << "])\n";
  }
  for (const auto& [name, v] : verdicts.items()) out << name << ": " << v.dump() << '\n';
  const std::string text = j.dump(2);
  out << text << '\n';
  return text;
}

}  // namespace stratmhd::cli
