#include <iomanip>
#include <ostream>

#include "fembem/common/errors.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw ConfigError("solver tolerance must be positive");
  if (max_iterations < 1) throw ConfigError("solver max_iterations must be at least 1");
  if (restart < 1) throw ConfigError("GMRES restart must be at least 1");
}

void IterationTrace::write_csv(std::ostream& out) const {
  out << "iteration,residual,increment,time\n";
  const std::size_t n = std::max(residuals.size(), increments.size());
  out << std::setprecision(12);
  for (std::size_t i = 0; i < n; ++i) {
    out << i << ',';
    if (i < residuals.size()) out << residuals[i];
    out << ',';
    if (i < increments.size()) out << increments[i];
    out << ',';
    if (i + 1 == n) out << wall_time;
    out << '\n';
  }
}

}  // namespace fembem
