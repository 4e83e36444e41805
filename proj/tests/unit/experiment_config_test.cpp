#include <gtest/gtest.h>

#include <sstream>

#include "fembem/common/errors.hpp"
#include "fembem/harness/experiment_config.hpp"

using namespace fembem;

namespace {

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_experiment_config(in);
}

}  // namespace

TEST(ExperimentConfig, DefaultsAreValid) {
  const ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.case_name, "sphere");
  EXPECT_EQ(c.method, "schur-cg");
  EXPECT_DOUBLE_EQ(c.tau, 10.0);
  EXPECT_DOUBLE_EQ(c.solvers.outer.tolerance, 1e-8);
  EXPECT_DOUBLE_EQ(c.solvers.interior.tolerance, 1e-10);
}

TEST(ExperimentConfig, JsonRoundTrip) {
  ExperimentConfig c;
  c.case_name = "cube";
  c.levels = {1, 2};
  c.base_subdivisions = 3;
  c.degrees.j = 2;
  c.degrees.l = 0;
  c.tau = 4.5;
  c.tau_list = {1.0, 2.0};
  c.sigma_list = {0.5};
  c.epsilon = 0.0;
  c.method = "schur-gmres";
  c.solvers.outer.max_iterations = 77;
  c.solvers.exterior.restart = 33;
  c.quadrature.singular_points = 6;
  c.quadrature.regular_points = {8, 6, 4, 2};
  c.seed = 42;
  std::ostringstream out;
  write_experiment_config(c, out);
  const ExperimentConfig r = parse(out.str());
  EXPECT_EQ(r.case_name, "cube");
  EXPECT_EQ(r.levels, c.levels);
  EXPECT_EQ(r.base_subdivisions, 3);
  EXPECT_EQ(r.degrees.j, 2);
  EXPECT_EQ(r.degrees.l, 0);
  EXPECT_DOUBLE_EQ(r.tau, 4.5);
  EXPECT_EQ(r.tau_list, c.tau_list);
  EXPECT_EQ(r.sigma_list, c.sigma_list);
  EXPECT_DOUBLE_EQ(r.epsilon, 0.0);
  EXPECT_EQ(r.method, "schur-gmres");
  EXPECT_EQ(r.solvers.outer.max_iterations, 77);
  EXPECT_EQ(r.solvers.exterior.restart, 33);
  EXPECT_EQ(r.quadrature.singular_points, 6);
  EXPECT_EQ(r.quadrature.regular_points, c.quadrature.regular_points);
  EXPECT_EQ(r.seed, 42u);
}

TEST(ExperimentConfig, PartialJsonKeepsDefaults) {
  const ExperimentConfig r = parse(R"({"tau": 2.0, "solvers": {"outer": {"tolerance": 1e-6}}})");
  EXPECT_DOUBLE_EQ(r.tau, 2.0);
  EXPECT_DOUBLE_EQ(r.solvers.outer.tolerance, 1e-6);
  EXPECT_EQ(r.solvers.outer.preconditioner, "mass");
  EXPECT_EQ(r.case_name, "sphere");
}

TEST(ExperimentConfig, UnknownKeysRejected) {
  EXPECT_THROW(parse(R"({"taus": [1]})"), ConfigError);
  EXPECT_THROW(parse(R"({"solvers": {"outer": {"tol": 1}}})"), ConfigError);
  EXPECT_THROW(parse(R"({"quadrature": {"points": 3}})"), ConfigError);
}

TEST(ExperimentConfig, MalformedAndInvalidValuesRejected) {
  EXPECT_THROW(parse("{ not json"), ConfigError);
  EXPECT_THROW(parse(R"({"tau": -1})"), ConfigError);
  EXPECT_THROW(parse(R"({"tau_list": [1, 0]})"), ConfigError);
  EXPECT_THROW(parse(R"({"levels": []})"), ConfigError);
  EXPECT_THROW(parse(R"({"levels": [11]})"), ConfigError);
  EXPECT_THROW(parse(R"({"case": "torus"})"), ConfigError);
  EXPECT_THROW(parse(R"({"degrees": {"k": 2}})"), ConfigError);
  EXPECT_THROW(parse(R"({"sigma_min": 10, "sigma_max": 1})"), ConfigError);
  EXPECT_THROW(parse(R"({"epsilon": -0.5})"), ConfigError);
  EXPECT_THROW(parse(R"({"tau": "ten"})"), ConfigError);
  EXPECT_THROW(parse(R"({"solvers": {"inner": {}}})"), ConfigError);
  EXPECT_THROW(load_experiment_config("/nonexistent/config.json"), ConfigError);
}
