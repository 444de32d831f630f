#include "lagns/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lagns/mms.hpp"

namespace lagns {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown key '" + where + key + "'");
    }
  }
}

template <typename T>
void read_key(const json& obj, const char* key, T& target, const std::string& where) {
  if (!obj.contains(key)) return;
  try {
    target = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("key '" + where + key + "': " + e.what());
  }
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

}  // namespace

InitialProfile make_profile(const ProfileSpec& spec) {
  InitialProfile p;
  if (spec.name == "cosine") {
    p.v0 = [spec](double x) { return spec.v_mean + spec.v_amp * std::cos(kPi * x); };
    p.theta0 = [spec](double x) { return spec.theta_mean + spec.theta_amp * std::cos(kPi * x); };
    p.u0 = [spec](double x) { return x <= 0.0 || x >= 1.0 ? 0.0 : spec.u_amp * std::sin(kPi * x); };
  } else if (spec.name == "constant") {
    p.v0 = [spec](double) { return spec.v_mean; };
    p.theta0 = [spec](double) { return spec.theta_mean; };
    p.u0 = [](double) { return 0.0; };
  } else {
    throw ConfigError("unknown profile name '" + spec.name + "' (expected cosine or constant)");
  }
  return p;
}

void Scenario::validate() const {
  try {
    params.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("material: ") + e.what() +
                      " (admissible regime is alpha >= 0, beta > 0)");
  }
  if (n_cells < 8) throw ConfigError("n_cells must be at least 8");
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  if (!(output_every > 0.0)) throw ConfigError("output_every must be positive");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(dt_min > 0.0)) throw ConfigError("dt_min must be positive");
  if (dt && !(*dt >= dt_min)) throw ConfigError("dt must be at least dt_min");
  if (max_picard < 1) throw ConfigError("max_picard must be at least 1");
  if (!(picard_tol > 0.0)) throw ConfigError("picard_tol must be positive");
  if (max_coupling_passes < 1) throw ConfigError("max_coupling_passes must be at least 1");
  if (!(coupling_tol > 0.0)) throw ConfigError("coupling_tol must be positive");
  if (mms) {
    try {
      const auto c = mms_case_by_name(*mms);
      if (bc == BoundaryKind::NoSlip && (c.u.value(0.0, 0.0) != 0.0 || c.u.value(1.0, 0.0) != 0.0)) {
        throw ConfigError("manufactured velocity must vanish at no-slip walls");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("mms: ") + e.what());
    }
  } else {
    make_profile(profile);
    const bool cosine = profile.name == "cosine";
    const double v_floor = profile.v_mean - (cosine ? std::abs(profile.v_amp) : 0.0);
    const double theta_floor = profile.theta_mean - (cosine ? std::abs(profile.theta_amp) : 0.0);
    if (!(v_floor > 0.0)) {
      throw ConfigError("profile: initial specific volume must satisfy inf v0 > 0, got minimum " +
                        std::to_string(v_floor));
    }
    if (!(theta_floor > 0.0)) {
      throw ConfigError("profile: initial temperature must satisfy inf theta0 > 0, got minimum " +
                        std::to_string(theta_floor));
    }
  }
}

StepControls Scenario::controls() const {
  StepControls c;
  c.cfl = cfl;
  c.dt_min = dt_min;
  c.max_picard = max_picard;
  c.picard_tol = picard_tol;
  c.max_coupling_passes = max_coupling_passes;
  c.coupling_tol = coupling_tol;
  return c;
}

Problem Scenario::problem() const {
  Problem p;
  p.params = params;
  p.bc = bc;
  p.controls = controls();
  if (mms) p.mms = mms_case_by_name(*mms);
  return p;
}

Scenario parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("syntax error at line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!root.is_object()) throw ConfigError("configuration must be a JSON object");

  reject_unknown_keys(root,
                      {"material", "bc", "profile", "n_cells", "cfl", "t_end", "dt_min", "output_every",
                       "dt", "mms", "max_picard", "picard_tol", "max_coupling_passes", "coupling_tol"},
                      "");

  Scenario s;
  if (root.contains("material")) {
    const auto& m = root.at("material");
    if (!m.is_object()) throw ConfigError("key 'material' must be an object");
    reject_unknown_keys(m, {"R", "c_v", "mu_tilde", "kappa_tilde", "alpha", "beta"}, "material.");
    read_key(m, "R", s.params.R, "material.");
    read_key(m, "c_v", s.params.c_v, "material.");
    read_key(m, "mu_tilde", s.params.mu_tilde, "material.");
    read_key(m, "kappa_tilde", s.params.kappa_tilde, "material.");
    read_key(m, "alpha", s.params.alpha, "material.");
    read_key(m, "beta", s.params.beta, "material.");
  }
  if (root.contains("bc")) {
    std::string bc;
    read_key(root, "bc", bc, "");
    if (bc == "stress_free") {
      s.bc = BoundaryKind::StressFree;
    } else if (bc == "no_slip") {
      s.bc = BoundaryKind::NoSlip;
    } else {
      throw ConfigError("key 'bc': expected \"stress_free\" or \"no_slip\", got \"" + bc + "\"");
    }
  }
  if (root.contains("profile")) {
    const auto& p = root.at("profile");
    if (!p.is_object()) throw ConfigError("key 'profile' must be an object");
    reject_unknown_keys(p, {"name", "v_mean", "v_amp", "theta_mean", "theta_amp", "u_amp"}, "profile.");
    read_key(p, "name", s.profile.name, "profile.");
    read_key(p, "v_mean", s.profile.v_mean, "profile.");
    read_key(p, "v_amp", s.profile.v_amp, "profile.");
    read_key(p, "theta_mean", s.profile.theta_mean, "profile.");
    read_key(p, "theta_amp", s.profile.theta_amp, "profile.");
    read_key(p, "u_amp", s.profile.u_amp, "profile.");
  }
  if (root.contains("n_cells")) {
    const auto& n = root.at("n_cells");
    if (!n.is_number_integer() || n.get<long long>() < 0) {
      throw ConfigError("key 'n_cells' must be a non-negative integer");
    }
    s.n_cells = n.get<std::size_t>();
  }
  read_key(root, "cfl", s.cfl, "");
  read_key(root, "t_end", s.t_end, "");
  read_key(root, "dt_min", s.dt_min, "");
  read_key(root, "output_every", s.output_every, "");
  read_key(root, "max_picard", s.max_picard, "");
  read_key(root, "picard_tol", s.picard_tol, "");
  read_key(root, "max_coupling_passes", s.max_coupling_passes, "");
  read_key(root, "coupling_tol", s.coupling_tol, "");
  if (root.contains("dt") && !root.at("dt").is_null()) {
    double dt = 0.0;
    read_key(root, "dt", dt, "");
    s.dt = dt;
  }
  if (root.contains("mms") && !root.at("mms").is_null()) {
    std::string name;
    read_key(root, "mms", name, "");
    s.mms = name;
  }

  s.validate();
  return s;
}

Scenario load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_config(const Scenario& s) {
  json root;
  root["material"] = {{"R", s.params.R},         {"c_v", s.params.c_v},
                      {"mu_tilde", s.params.mu_tilde}, {"kappa_tilde", s.params.kappa_tilde},
                      {"alpha", s.params.alpha}, {"beta", s.params.beta}};
  root["bc"] = to_string(s.bc);
  root["profile"] = {{"name", s.profile.name},         {"v_mean", s.profile.v_mean},
                     {"v_amp", s.profile.v_amp},       {"theta_mean", s.profile.theta_mean},
                     {"theta_amp", s.profile.theta_amp}, {"u_amp", s.profile.u_amp}};
  root["n_cells"] = s.n_cells;
  root["cfl"] = s.cfl;
  root["t_end"] = s.t_end;
  root["dt_min"] = s.dt_min;
  root["output_every"] = s.output_every;
  root["max_picard"] = s.max_picard;
  root["picard_tol"] = s.picard_tol;
  root["max_coupling_passes"] = s.max_coupling_passes;
  root["coupling_tol"] = s.coupling_tol;
  if (s.dt) root["dt"] = *s.dt;
  if (s.mms) root["mms"] = *s.mms;
  return root.dump(2);
}

State initial_state(const Scenario& scenario, const Grid& grid) {
  if (scenario.mms) return mms_state(mms_case_by_name(*scenario.mms), grid, 0.0);
  return compatible_initial_data(make_profile(scenario.profile), scenario.params, scenario.bc, grid);
}

}  // namespace lagns
