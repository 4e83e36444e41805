#include "fembem/harness/experiment_config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "fembem/common/errors.hpp"

namespace fembem {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

void read_solver(const json& j, SolverConfig& s, const std::string& where) {
  check_keys(j, {"method", "tolerance", "max_iterations", "preconditioner", "restart"}, where);
  if (j.contains("method")) s.method = j.at("method").get<std::string>();
  if (j.contains("tolerance")) s.tolerance = j.at("tolerance").get<double>();
  if (j.contains("max_iterations")) s.max_iterations = j.at("max_iterations").get<int>();
  if (j.contains("preconditioner")) s.preconditioner = j.at("preconditioner").get<std::string>();
  if (j.contains("restart")) s.restart = j.at("restart").get<int>();
}

json solver_json(const SolverConfig& s) {
  return {{"method", s.method},
          {"tolerance", s.tolerance},
          {"max_iterations", s.max_iterations},
          {"preconditioner", s.preconditioner},
          {"restart", s.restart}};
}

}  // namespace

void ExperimentConfig::validate() const {
  if (case_name != "sphere" && case_name != "cube") throw ConfigError("unknown case '" + case_name + "'");
  if (levels.empty()) throw ConfigError("at least one mesh level is required");
  for (int l : levels) {
    if (l < 1 || l > 10) throw ConfigError("mesh levels must lie in [1, 10]");
  }
  if (base_subdivisions && *base_subdivisions < 1) throw ConfigError("base_subdivisions must be positive");
  if (degrees.j != 1 && degrees.j != 2) throw ConfigError("volume degree j must be 1 or 2");
  if (degrees.k != 1) throw ConfigError("W-space degree k must be 1");
  if (degrees.l && *degrees.l != 0 && *degrees.l != 1) throw ConfigError("Lambda degree l must be 0 or 1");
  if (degrees.m != 0 && degrees.m != 1) throw ConfigError("trace degree m must be 0 or 1");
  if (!(tau > 0.0)) throw ConfigError("tau must be positive");
  for (double t : tau_list) {
    if (!(t > 0.0)) throw ConfigError("tau_list entries must be positive");
  }
  if (!(sigma > 0.0)) throw ConfigError("sigma must be positive");
  for (double s : sigma_list) {
    if (!(s > 0.0)) throw ConfigError("sigma_list entries must be positive");
  }
  if (!(sigma_min > 0.0 && sigma_min < sigma_max)) throw ConfigError("need 0 < sigma_min < sigma_max");
  if (!(epsilon >= 0.0)) throw ConfigError("epsilon must be nonnegative");
  parse_method(method);
  solvers.outer.validate();
  solvers.interior.validate();
  solvers.exterior.validate();
  jacobi.iteration.validate();
  quadrature.validate();
}

ExperimentConfig parse_experiment_config(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed experiment config: ") + e.what());
  }
  ExperimentConfig c;
  try {
    check_keys(j,
               {"case", "levels", "base_subdivisions", "degrees", "tau", "tau_list", "sigma", "sigma_list",
                "sigma_min", "sigma_max", "epsilon", "method", "solvers", "quadrature", "output", "seed"},
               "experiment config");
    if (j.contains("case")) c.case_name = j.at("case").get<std::string>();
    if (j.contains("levels")) c.levels = j.at("levels").get<std::vector<int>>();
    if (j.contains("base_subdivisions")) c.base_subdivisions = j.at("base_subdivisions").get<int>();
    if (j.contains("degrees")) {
      const json& d = j.at("degrees");
      check_keys(d, {"j", "k", "l", "m"}, "degrees");
      if (d.contains("j")) c.degrees.j = d.at("j").get<int>();
      if (d.contains("k")) c.degrees.k = d.at("k").get<int>();
      if (d.contains("l")) c.degrees.l = d.at("l").get<int>();
      if (d.contains("m")) c.degrees.m = d.at("m").get<int>();
    }
    if (j.contains("tau")) c.tau = j.at("tau").get<double>();
    if (j.contains("tau_list")) c.tau_list = j.at("tau_list").get<std::vector<double>>();
    if (j.contains("sigma")) c.sigma = j.at("sigma").get<double>();
    if (j.contains("sigma_list")) c.sigma_list = j.at("sigma_list").get<std::vector<double>>();
    if (j.contains("sigma_min")) c.sigma_min = j.at("sigma_min").get<double>();
    if (j.contains("sigma_max")) c.sigma_max = j.at("sigma_max").get<double>();
    if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
    if (j.contains("method")) c.method = j.at("method").get<std::string>();
    if (j.contains("solvers")) {
      const json& s = j.at("solvers");
      check_keys(s, {"outer", "interior", "exterior", "jacobi"}, "solvers");
      if (s.contains("outer")) read_solver(s.at("outer"), c.solvers.outer, "solvers.outer");
      if (s.contains("interior")) read_solver(s.at("interior"), c.solvers.interior, "solvers.interior");
      if (s.contains("exterior")) read_solver(s.at("exterior"), c.solvers.exterior, "solvers.exterior");
      if (s.contains("jacobi")) read_solver(s.at("jacobi"), c.jacobi.iteration, "solvers.jacobi");
    }
    if (j.contains("quadrature")) {
      const json& q = j.at("quadrature");
      check_keys(q, {"singular_points", "regular_points", "near_ratio", "mid_ratio", "far_ratio"}, "quadrature");
      if (q.contains("singular_points")) c.quadrature.singular_points = q.at("singular_points").get<int>();
      if (q.contains("regular_points")) c.quadrature.regular_points = q.at("regular_points").get<std::array<int, 4>>();
      if (q.contains("near_ratio")) c.quadrature.near_ratio = q.at("near_ratio").get<double>();
      if (q.contains("mid_ratio")) c.quadrature.mid_ratio = q.at("mid_ratio").get<double>();
      if (q.contains("far_ratio")) c.quadrature.far_ratio = q.at("far_ratio").get<double>();
    }
    if (j.contains("output")) c.output = j.at("output").get<std::string>();
    if (j.contains("seed")) c.seed = j.at("seed").get<unsigned>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid experiment config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  return parse_experiment_config(f);
}

void write_experiment_config(const ExperimentConfig& c, std::ostream& out) {
  json j;
  j["case"] = c.case_name;
  j["levels"] = c.levels;
  if (c.base_subdivisions) j["base_subdivisions"] = *c.base_subdivisions;
  j["degrees"] = {{"j", c.degrees.j}, {"k", c.degrees.k}, {"m", c.degrees.m}};
  if (c.degrees.l) j["degrees"]["l"] = *c.degrees.l;
  j["tau"] = c.tau;
  j["tau_list"] = c.tau_list;
  j["sigma"] = c.sigma;
  j["sigma_list"] = c.sigma_list;
  j["sigma_min"] = c.sigma_min;
  j["sigma_max"] = c.sigma_max;
  j["epsilon"] = c.epsilon;
  j["method"] = c.method;
  j["solvers"] = {{"outer", solver_json(c.solvers.outer)},
                  {"interior", solver_json(c.solvers.interior)},
                  {"exterior", solver_json(c.solvers.exterior)},
                  {"jacobi", solver_json(c.jacobi.iteration)}};
  j["quadrature"] = {{"singular_points", c.quadrature.singular_points},
                     {"regular_points", c.quadrature.regular_points},
                     {"near_ratio", c.quadrature.near_ratio},
                     {"mid_ratio", c.quadrature.mid_ratio},
                     {"far_ratio", c.quadrature.far_ratio}};
  j["output"] = c.output;
  j["seed"] = c.seed;
  out << j.dump(2) << '\n';
}

}  // namespace fembem
