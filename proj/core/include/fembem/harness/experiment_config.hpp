#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fembem/bem/pair_quadrature.hpp"
#include "fembem/coupling/schur.hpp"
#include "fembem/solvers/relaxed_jacobi.hpp"

namespace fembem {

/// Polynomial degrees: j (volume), k (W, continuous), l (Lambda) and m
/// (trace variable, discontinuous). l = 1 means continuous P1 (the W space),
/// l = 0 piecewise constants. An absent l takes the case default.
struct Degrees {
  int j = 1;
  int k = 1;
  std::optional<int> l;
  int m = 1;
};

struct ExperimentConfig {
  std::string case_name = "sphere";
  std::vector<int> levels{1, 2, 3};
  /// Overrides the case's level-1 generator argument.
  std::optional<int> base_subdivisions;
  Degrees degrees;
  double tau = 10.0;
  std::vector<double> tau_list{0.01, 0.1, 1.0, 10.0, 100.0, 1000.0};
  double sigma = 10.0;
  std::vector<double> sigma_list{0.1, 1.0, 10.0, 100.0, 1000.0, 10000.0};
  /// Bisection interval for the empirical Jacobi threshold.
  double sigma_min = 0.1;
  double sigma_max = 1e4;
  double epsilon = 1.0;
  std::string method = "schur-cg";
  CoupledSolverConfig solvers;
  JacobiConfig jacobi;
  BemQuadrature quadrature;
  std::string output;
  unsigned seed = 0;

  /// Throws ConfigError on empty levels, unsupported degrees, nonpositive
  /// tau/sigma values or invalid solver settings.
  void validate() const;
};

/// JSON with the same field names as ExperimentConfig; absent fields keep
/// their defaults. Unknown keys are rejected.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::string& path);
void write_experiment_config(const ExperimentConfig& config, std::ostream& out);

}  // namespace fembem
