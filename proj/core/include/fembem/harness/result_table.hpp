#pragma once

#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace fembem {

struct ResultRow {
  int level = 0;
  double h = 0.0;
  long dofs_interior = 0;
  /// Dense boundary-element unknowns (u+ and lambda).
  long dofs_boundary = 0;
  double err_L2_interior = std::numeric_limits<double>::quiet_NaN();
  double err_L2_uplus = std::numeric_limits<double>::quiet_NaN();
  double err_L2_lambda = std::numeric_limits<double>::quiet_NaN();
  double err_mismatch = std::numeric_limits<double>::quiet_NaN();
  int outer_iters = 0;
  /// Mean iterations per inner solve.
  double inner_iters_interior = 0.0;
  double inner_iters_exterior = 0.0;
  double time_s = 0.0;
  double tau = std::numeric_limits<double>::quiet_NaN();
  double sigma = std::numeric_limits<double>::quiet_NaN();
  std::string status = "ok";
};

/// Least-squares slope of log(e) against log(h). Needs two distinct h and
/// positive errors; throws InvalidArgument otherwise.
double fit_slope(const std::vector<double>& h, const std::vector<double>& e);

class ResultTable {
 public:
  /// Sweep tables append tau, sigma and status columns.
  explicit ResultTable(bool sweep_columns = false) : sweep_columns_(sweep_columns) {}

  /// Inserts keeping rows ordered by decreasing h (stable for equal h).
  void add(ResultRow row);
  const std::vector<ResultRow>& rows() const noexcept { return rows_; }
  bool sweep_columns() const noexcept { return sweep_columns_; }

  /// Slope of a column against h over rows with status "ok".
  double slope(const std::function<double(const ResultRow&)>& column) const;

  static std::string header(bool sweep_columns);
  void write_csv(std::ostream& out) const;
  void write_csv(const std::string& path) const;

 private:
  bool sweep_columns_;
  std::vector<ResultRow> rows_;
};

}  // namespace fembem
