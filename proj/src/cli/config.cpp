#include "stratmhd/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "stratmhd/background/background.hpp"
#include "stratmhd/error.hpp"

namespace stratmhd::cli {

namespace pt = boost::property_tree;

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Nonlinear: return "nonlinear";
    case Mode::Linear: return "linear";
    case Mode::Background: return "background";
  }
  return "?";
}

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, std::string v) {
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("key '" + key + "': expected a boolean, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, std::string v) {
  std::replace(v.begin(), v.end(), ',', ' ');
  std::istringstream is(v);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) out.push_back(to_double(key, tok));
  return out;
}

std::string resolve(const std::string& base, const std::string& p) {
  if (p.empty()) return p;
  std::filesystem::path path(p);
  if (path.is_absolute()) return p;
  return (std::filesystem::path(base) / path).string();
}

void validate(const ExperimentConfig& c) {
  const auto& p = c.sim.params;
  if (!(p.kappa > 0.0)) throw ConfigError("physics.kappa must be positive");
  if (p.c0 == 0.0 || !std::isfinite(p.c0)) throw ConfigError("physics.c0 must be nonzero");
  if (p.k_order < 7 && !p.allow_low_order) {
    throw ConfigError("physics.k_order must be >= 7 unless allow_low_k = true");
  }
  if (c.mode != Mode::Background && !(c.sim.epsilon0 > 0.0)) {
    throw ConfigError("init.epsilon0 must be positive");
  }
  if (!(c.bg_amplitude >= 0.0)) throw ConfigError("init.bg_amplitude must be non-negative");
  if (c.snapshot_stride < 1) throw ConfigError("output.snapshot_stride must be >= 1");
  if (static_cast<int>(c.phi0.size()) > p.grid.ny || static_cast<int>(c.psi0.size()) > p.grid.ny) {
    throw ConfigError("init.phi0/psi0 have more coefficients than n_y");
  }
  try {
    c.sim.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& base_dir) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  ExperimentConfig c;
  auto& s = c.sim;
  auto& p = s.params;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, std::map<std::string, Setter>> table = {
      {"physics",
       {{"kappa", [&](auto& k, auto& v) { p.kappa = to_double(k, v); }},
        {"c0", [&](auto& k, auto& v) { p.c0 = to_double(k, v); }},
        {"k_order", [&](auto& k, auto& v) { p.k_order = static_cast<int>(to_int(k, v)); }},
        {"allow_low_k", [&](auto& k, auto& v) { p.allow_low_order = to_bool(k, v); }},
        {"mode", [&](auto& k, auto& v) {
           if (v == "nonlinear") c.mode = Mode::Nonlinear;
           else if (v == "linear") c.mode = Mode::Linear;
           else if (v == "background") c.mode = Mode::Background;
           else throw ConfigError("key '" + k + "': unknown mode '" + v + "'");
         }}}},
      {"grid",
       {{"l_x", [&](auto& k, auto& v) { p.grid.lx = to_double(k, v); }},
        {"n_x", [&](auto& k, auto& v) { p.grid.nx = static_cast<int>(to_int(k, v)); }},
        {"n_y", [&](auto& k, auto& v) { p.grid.ny = static_cast<int>(to_int(k, v)); }},
        {"dealias", [&](auto& k, auto& v) { s.dealias = to_bool(k, v); }}}},
      {"time",
       {{"dt", [&](auto& k, auto& v) { s.dt = to_double(k, v); }},
        {"t_end", [&](auto& k, auto& v) { s.t_end = to_double(k, v); }},
        {"integrating_factor", [&](auto& k, auto& v) { s.integrating_factor = to_bool(k, v); }}}},
      {"init",
       {{"epsilon0", [&](auto& k, auto& v) { s.epsilon0 = to_double(k, v); }},
        {"seed", [&](auto& k, auto& v) {
           const long long seed = to_int(k, v);
           if (seed < 0) throw ConfigError("init.seed must be non-negative");
           c.seed = static_cast<std::uint64_t>(seed);
         }},
        {"bg_amplitude", [&](auto& k, auto& v) { c.bg_amplitude = to_double(k, v); }},
        {"phi0", [&](auto& k, auto& v) { c.phi0 = to_list(k, v); }},
        {"psi0", [&](auto& k, auto& v) { c.psi0 = to_list(k, v); }},
        {"phi0_csv", [&](auto&, auto& v) { c.phi0_csv = resolve(base_dir, v); }},
        {"psi0_csv", [&](auto&, auto& v) { c.psi0_csv = resolve(base_dir, v); }}}},
      {"output",
       {{"dir", [&](auto&, auto& v) { c.out_dir = v; }},
        {"output_stride", [&](auto& k, auto& v) { s.output_stride = static_cast<int>(to_int(k, v)); }},
        {"snapshots", [&](auto& k, auto& v) { c.snapshots = to_bool(k, v); }},
        {"snapshot_stride", [&](auto& k, auto& v) { c.snapshot_stride = static_cast<int>(to_int(k, v)); }}}},
  };

  for (const auto& [section, body] : tree) {
    auto sec = table.find(section);
    if (sec == table.end()) {
      if (body.empty() && !body.data().empty()) {
        throw ConfigError("key '" + section + "' outside of any section");
      }
      throw ConfigError("unknown config section [" + section + "]");
    }
    for (const auto& [key, node] : body) {
      auto it = sec->second.find(key);
      if (it == sec->second.end()) {
        throw ConfigError("unknown config key '" + section + "." + key + "'");
      }
      it->second(section + "." + key, trim(node.data()));
    }
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  const auto base = std::filesystem::path(path).parent_path().string();
  return parse_config(in, base.empty() ? "." : base);
}

Eigen::VectorXd load_profile_csv(const std::string& path, int ny) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read profile CSV '" + path + "'");
  std::vector<std::pair<double, double>> pts;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream is(line);
    double y, v;
    if (!(is >> y >> v)) {
      if (pts.empty()) continue;  // header row
      throw ConfigError("malformed row in '" + path + "': " + line);
    }
    pts.emplace_back(y, v);
  }
  if (pts.size() < 2) throw ConfigError("profile CSV '" + path + "' needs at least two rows");
  std::sort(pts.begin(), pts.end());
  if (pts.front().first > 1e-12 || pts.back().first < 1.0 - 1e-12) {
    throw ConfigError("profile CSV '" + path + "' must cover y in [0, 1]");
  }
  const size_t rows = pts.size();
  bool uniform = rows >= 3;
  for (size_t i = 0; uniform && i < rows; ++i) {
    uniform = std::abs(pts[i].first - static_cast<double>(i) / (rows - 1)) < 1e-9;
  }
  if (uniform) {
    Eigen::VectorXd raw(rows);
    for (size_t i = 0; i < rows; ++i) raw[i] = pts[i].second;
    if (!background::check_compatibility_samples(raw)) {
      throw ConfigError("profile '" + path +
                        "' has nonzero odd y-derivatives at the walls (incompatible data)");
    }
    const Eigen::VectorXd c = background::cosine_coefficients(raw);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(ny);
    const int keep = std::min<int>(ny, static_cast<int>(rows));
    out.head(keep) = c.head(keep);
    return out;
  }
  Eigen::VectorXd samples(ny);
  for (int m = 0; m < ny; ++m) {
    const double y = static_cast<double>(m) / (ny - 1);
    auto hi = std::lower_bound(pts.begin(), pts.end(), std::make_pair(y, -HUGE_VAL));
    if (hi == pts.begin()) {
      samples[m] = hi->second;
    } else if (hi == pts.end()) {
      samples[m] = pts.back().second;
    } else {
      auto lo = hi - 1;
      const double w = (y - lo->first) / (hi->first - lo->first);
      samples[m] = (1.0 - w) * lo->second + w * hi->second;
    }
  }
  return background::cosine_coefficients(samples);
}

}  // namespace stratmhd::cli
