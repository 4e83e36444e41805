#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fembem/common/errors.hpp"
#include "fembem/coupling/bundle_io.hpp"
#include "fembem/coupling/norms.hpp"
#include "fembem/harness/experiments.hpp"
#include "fembem/harness/invariant_checks.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out;
  std::string method;
  std::string case_name;
  std::optional<double> tau;
  std::optional<double> sigma;
  std::vector<int> levels;
  std::optional<unsigned> seed;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config_path, "Experiment config JSON")->check(CLI::ExistingFile);
  app->add_option("--out", o.out, "Output CSV path (default: stdout)");
  app->add_option("--method", o.method, "schur-cg, schur-gmres or direct")
      ->check(CLI::IsMember({"schur-cg", "schur-gmres", "direct"}));
  app->add_option("--case", o.case_name, "sphere or cube")->check(CLI::IsMember({"sphere", "cube"}));
  app->add_option("--tau", o.tau, "Nitsche penalty parameter");
  app->add_option("--sigma", o.sigma, "Jacobi relaxation parameter");
  app->add_option("--levels", o.levels, "Mesh levels, e.g. --levels 1 2 3")->delimiter(',');
  app->add_option("--seed", o.seed, "Seed for randomized checks");
}

fembem::ExperimentConfig resolve(const CommonOptions& o) {
  fembem::ExperimentConfig c;
  if (!o.config_path.empty()) c = fembem::load_experiment_config(o.config_path);
  if (!o.case_name.empty()) c.case_name = o.case_name;
  if (!o.method.empty()) c.method = o.method;
  if (o.tau) c.tau = *o.tau;
  if (o.sigma) {
    c.sigma = *o.sigma;
    c.sigma_list = {*o.sigma};
  }
  if (!o.levels.empty()) c.levels = o.levels;
  if (o.seed) c.seed = *o.seed;
  if (!o.out.empty()) c.output = o.out;
  c.validate();
  return c;
}

void emit(const fembem::ResultTable& table, const std::string& path) {
  if (path.empty()) {
    table.write_csv(std::cout);
  } else {
    table.write_csv(path);
    std::cerr << "wrote " << path << '\n';
  }
}

void report_slopes(const fembem::ResultTable& t, bool exact) {
  if (t.rows().size() < 2) return;
  try {
    if (exact) {
      std::cerr << "slope interior L2: " << t.slope([](const auto& r) { return r.err_L2_interior; }) << '\n';
      std::cerr << "slope boundary L2 (u+ + lambda): "
                << t.slope([](const auto& r) { return r.err_L2_uplus + r.err_L2_lambda; }) << '\n';
    }
    std::cerr << "slope interface mismatch: " << t.slope([](const auto& r) { return r.err_mismatch; }) << '\n';
  } catch (const fembem::Error& e) {
    std::cerr << "slope unavailable: " << e.what() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybridized Nitsche FEM-BEM coupling solver and experiments"};
  app.require_subcommand(1);

  CommonOptions conv_o, sweep_o, jac_o, pre_o, solve_o, check_o;
  auto* conv = app.add_subcommand("convergence", "Error and iteration table over mesh levels");
  add_common(conv, conv_o);
  auto* sweep = app.add_subcommand("tau-sweep", "Errors and outer iterations over the tau list");
  add_common(sweep, sweep_o);
  auto* jac = app.add_subcommand("jacobi", "Relaxed Jacobi sigma study with threshold bisection");
  add_common(jac, jac_o);
  auto* pre = app.add_subcommand("precond", "Inner iteration counts with and without preconditioning");
  add_common(pre, pre_o);
  auto* solve = app.add_subcommand("solve", "Single solve on one level");
  add_common(solve, solve_o);
  std::string bundle_path;
  solve->add_option("--bundle", bundle_path, "Write the solution bundle as JSON");
  auto* check = app.add_subcommand("check", "Run the invariant suite on coarse meshes");
  add_common(check, check_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*conv) {
      const auto c = resolve(conv_o);
      const auto table = fembem::run_convergence(c);
      emit(table, c.output);
      report_slopes(table, fembem::case_by_name(c.case_name).has_exact);
    } else if (*sweep) {
      const auto c = resolve(sweep_o);
      emit(fembem::run_tau_sweep(c), c.output);
    } else if (*jac) {
      const auto c = resolve(jac_o);
      const auto study = fembem::run_jacobi_study(c);
      emit(study.table, c.output);
      if (!c.output.empty()) {
        for (std::size_t i = 0; i < study.traces.size() && i < c.sigma_list.size(); ++i) {
          const std::string path = c.output + ".sigma_" + std::to_string(i) + ".csv";
          std::ofstream f(path);
          study.traces[i].write_csv(f);
        }
      }
      if (study.threshold_found) {
        std::cerr << "empirical sigma*: " << study.sigma_star
                  << (study.converges_everywhere ? " (every tested sigma converged)" : "") << '\n';
      } else {
        std::cerr << "no converging sigma up to " << c.sigma_max << '\n';
      }
    } else if (*pre) {
      const auto c = resolve(pre_o);
      emit(fembem::run_preconditioning_study(c), c.output);
    } else if (*solve) {
      auto c = resolve(solve_o);
      const auto kase = fembem::case_by_name(c.case_name);
      const auto setup = fembem::build_level(kase, c, c.levels.front());
      const auto system = fembem::build_system(setup, kase, c, c.tau);
      fembem::SolutionBundle bundle;
      fembem::ResultTable table;
      table.add(fembem::solve_row(setup, system, kase, c, &bundle));
      emit(table, c.output);
      if (!bundle_path.empty()) fembem::write_bundle_json(bundle, bundle_path);
    } else if (*check) {
      const auto c = resolve(check_o);
      const bool ok = fembem::print_checks(fembem::run_invariant_checks(c.seed), std::cout);
      return ok ? 0 : 1;
    }
  } catch (const fembem::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
