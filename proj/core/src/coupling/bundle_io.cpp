#include "fembem/coupling/bundle_io.hpp"

#include <fstream>
#include <vector>

#include <json.hpp>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

nlohmann::json inner_summary(const std::vector<IterationTrace>& traces) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : traces) {
    out.push_back({{"iterations", t.iterations},
                   {"final_residual", t.residuals.empty() ? 0.0 : t.residuals.back()},
                   {"converged", t.converged}});
  }
  return out;
}

}  // namespace

void write_bundle_json(const SolutionBundle& b, std::ostream& out) {
  nlohmann::json j;
  j["method"] = b.method;
  j["u_minus"] = to_std(b.u_minus);
  j["u_plus"] = to_std(b.u_plus);
  j["lambda"] = to_std(b.lambda);
  j["u_tilde"] = to_std(b.u_tilde);
  j["outer"] = {{"residuals", b.outer.residuals},
                {"increments", b.outer.increments},
                {"iterations", b.outer.iterations},
                {"converged", b.outer.converged},
                {"wall_time", b.outer.wall_time}};
  j["interior_solves"] = inner_summary(b.interior_solves);
  j["exterior_solves"] = inner_summary(b.exterior_solves);
  out << j.dump(1) << '\n';
}

void write_bundle_json(const SolutionBundle& bundle, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open " + path + " for writing");
  write_bundle_json(bundle, f);
}

}  // namespace fembem
