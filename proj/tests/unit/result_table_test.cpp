#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fembem/common/errors.hpp"
#include "fembem/harness/result_table.hpp"

using namespace fembem;

namespace {

ResultRow row(int level, double h, double err, const std::string& status = "ok") {
  ResultRow r;
  r.level = level;
  r.h = h;
  r.err_L2_interior = err;
  r.status = status;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(ResultTable, RowsSortedByDecreasingH) {
  ResultTable t;
  t.add(row(2, 0.25, 1.0));
  t.add(row(1, 0.5, 2.0));
  t.add(row(3, 0.125, 0.5));
  t.add(row(4, 0.25, 0.9));
  ASSERT_EQ(t.rows().size(), 4u);
  EXPECT_EQ(t.rows()[0].level, 1);
  EXPECT_EQ(t.rows()[1].level, 2);
  EXPECT_EQ(t.rows()[2].level, 4);
  EXPECT_EQ(t.rows()[3].level, 3);
}

TEST(ResultTable, SlopeOfExactPowerLaw) {
  ResultTable t;
  for (int l = 1; l <= 4; ++l) {
    const double h = std::pow(0.5, l);
    t.add(row(l, h, 3.0 * h * h));
  }
  t.add(row(9, 0.01, 100.0, "failed"));
  EXPECT_NEAR(t.slope([](const ResultRow& r) { return r.err_L2_interior; }), 2.0, 1e-12);
}

// Least squares through (log h, log e) against the closed-form normal equations.
TEST(ResultTable, SlopeFitMatchesNormalEquations) {
  const std::vector<double> h{1.0, 0.5, 0.2}, e{1.0, 0.3, 0.05};
  double mx = 0, my = 0;
  for (int i = 0; i < 3; ++i) {
    mx += std::log(h[i]) / 3;
    my += std::log(e[i]) / 3;
  }
  double num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += (std::log(h[i]) - mx) * (std::log(e[i]) - my);
    den += (std::log(h[i]) - mx) * (std::log(h[i]) - mx);
  }
  EXPECT_NEAR(fit_slope(h, e), num / den, 1e-12);
  EXPECT_THROW(fit_slope({1.0}, {1.0}), InvalidArgument);
  EXPECT_THROW(fit_slope({1.0, 1.0}, {1.0, 2.0}), InvalidArgument);
  EXPECT_THROW(fit_slope({1.0, 0.5}, {1.0, 0.0}), InvalidArgument);
}

TEST(ResultTable, CsvColumns) {
  ResultTable t;
  t.add(row(1, 0.5, 0.1));
  std::ostringstream out;
  t.write_csv(out);
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0],
            "level,h,dofs_interior,dofs_boundary,err_L2_interior,err_L2_uplus,err_L2_lambda,err_mismatch,"
            "outer_iters,inner_iters_interior,inner_iters_exterior,time_s");
  EXPECT_EQ(std::count(l[1].begin(), l[1].end(), ','), 11);
  EXPECT_NE(l[1].find("nan"), std::string::npos);

  ResultTable s(true);
  ResultRow r = row(1, 0.5, 0.1, "direct-fallback");
  r.tau = 0.1;
  s.add(r);
  std::ostringstream o2;
  s.write_csv(o2);
  const auto l2 = lines(o2.str());
  EXPECT_EQ(l2[0].substr(l2[0].size() - 17), ",tau,sigma,status");
  EXPECT_EQ(l2[1].substr(l2[1].size() - 16), ",direct-fallback");
}
