#include "fembem/harness/result_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "fembem/common/errors.hpp"

namespace fembem {

double fit_slope(const std::vector<double>& h, const std::vector<double>& e) {
  if (h.size() != e.size() || h.size() < 2) throw InvalidArgument("slope fit needs at least two (h, error) pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0) || !(e[i] > 0.0)) throw InvalidArgument("slope fit needs positive h and errors");
    const double x = std::log(h[i]), y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (std::abs(den) < 1e-14) throw InvalidArgument("slope fit needs distinct mesh sizes");
  return (n * sxy - sx * sy) / den;
}

void ResultTable::add(ResultRow row) {
  auto pos = std::upper_bound(rows_.begin(), rows_.end(), row,
                              [](const ResultRow& a, const ResultRow& b) { return a.h > b.h; });
  rows_.insert(pos, std::move(row));
}

double ResultTable::slope(const std::function<double(const ResultRow&)>& column) const {
  std::vector<double> h, e;
  for (const auto& r : rows_) {
    if (r.status != "ok") continue;
    h.push_back(r.h);
    e.push_back(column(r));
  }
  return fit_slope(h, e);
}

std::string ResultTable::header(bool sweep) {
  std::string s =
      "level,h,dofs_interior,dofs_boundary,err_L2_interior,err_L2_uplus,err_L2_lambda,err_mismatch,outer_iters,"
      "inner_iters_interior,inner_iters_exterior,time_s";
  if (sweep) s += ",tau,sigma,status";
  return s;
}

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

void ResultTable::write_csv(std::ostream& out) const {
  out << header(sweep_columns_) << '\n';
  for (const auto& r : rows_) {
    char inner[64];
    std::snprintf(inner, sizeof inner, "%.2f,%.2f", r.inner_iters_interior, r.inner_iters_exterior);
    char time[32];
    std::snprintf(time, sizeof time, "%.3f", r.time_s);
    out << r.level << ',' << num(r.h) << ',' << r.dofs_interior << ',' << r.dofs_boundary << ','
        << num(r.err_L2_interior) << ',' << num(r.err_L2_uplus) << ',' << num(r.err_L2_lambda) << ','
        << num(r.err_mismatch) << ',' << r.outer_iters << ',' << inner << ',' << time;
    if (sweep_columns_) out << ',' << num(r.tau) << ',' << num(r.sigma) << ',' << r.status;
    out << '\n';
  }
}

void ResultTable::write_csv(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path + " for writing");
  write_csv(f);
}

}  // namespace fembem
