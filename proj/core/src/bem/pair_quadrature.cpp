#include "fembem/bem/pair_quadrature.hpp"

#include <algorithm>

#include "fembem/common/errors.hpp"

namespace fembem {

void BemQuadrature::validate() const {
  if (singular_points < 2) throw ConfigError("singular quadrature needs at least 2 points per direction");
  for (int p : regular_points) {
    if (p < 1) throw ConfigError("regular quadrature needs at least 1 point per direction");
  }
  if (!(near_ratio > 0.0 && near_ratio < mid_ratio && mid_ratio < far_ratio)) {
    throw ConfigError("quadrature distance ratios must be positive and increasing");
  }
}

BemQuadrature BemQuadrature::doubled() const {
  BemQuadrature q = *this;
  q.singular_points *= 2;
  for (int& p : q.regular_points) p *= 2;
  return q;
}

int BemQuadrature::regular_points_for(double ratio) const {
  if (ratio < near_ratio) return regular_points[0];
  if (ratio < mid_ratio) return regular_points[1];
  if (ratio < far_ratio) return regular_points[2];
  return regular_points[3];
}

PairKind classify_pair(const std::array<int, 3>& tx, const std::array<int, 3>& ty) {
  int shared = 0;
  for (int a : tx) {
    if (std::find(ty.begin(), ty.end(), a) != ty.end()) ++shared;
  }
  switch (shared) {
    case 3:
      return PairKind::Coincident;
    case 2:
      return PairKind::Edge;
    case 1:
      return PairKind::Vertex;
    default:
      return PairKind::Regular;
  }
}

PairQuadrature::PairQuadrature(BemQuadrature config) : config_(config) {
  config_.validate();
  const LineRule g = gauss_legendre(config_.singular_points);
  const std::size_t n = g.points.size();
  auto add = [](Reference& r, double w, double x1, double x2, double y1, double y2) {
    r.points.push_back({x1, x2, y1, y2});
    r.weights.push_back(w);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const double xi = g.points[a], e1 = g.points[b], e2 = g.points[c], e3 = g.points[d];
          const double w4 = g.weights[a] * g.weights[b] * g.weights[c] * g.weights[d];

          const double wc = w4 * xi * xi * xi * e1 * e1 * e2;
          add(coincident_, wc, xi, xi * (1 - e1 + e1 * e2), xi * (1 - e1 * e2 * e3), xi * (1 - e1));
          add(coincident_, wc, xi * (1 - e1 * e2 * e3), xi * (1 - e1), xi, xi * (1 - e1 + e1 * e2));
          add(coincident_, wc, xi, xi * e1 * (1 - e2 + e2 * e3), xi * (1 - e1 * e2), xi * e1 * (1 - e2));
          add(coincident_, wc, xi * (1 - e1 * e2), xi * e1 * (1 - e2), xi, xi * e1 * (1 - e2 + e2 * e3));
          add(coincident_, wc, xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3), xi, xi * e1 * (1 - e2));
          add(coincident_, wc, xi, xi * e1 * (1 - e2), xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3));

          const double we0 = w4 * xi * xi * xi * e1 * e1;
          const double we = we0 * e2;
          add(edge_, we0, xi, xi * e1 * e3, xi * (1 - e1 * e2), xi * e1 * (1 - e2));
          add(edge_, we, xi, xi * e1, xi * (1 - e1 * e2 * e3), xi * e1 * e2 * (1 - e3));
          add(edge_, we, xi * (1 - e1 * e2), xi * e1 * (1 - e2), xi, xi * e1 * e2 * e3);
          add(edge_, we, xi * (1 - e1 * e2 * e3), xi * e1 * e2 * (1 - e3), xi, xi * e1);
          add(edge_, we, xi * (1 - e1 * e2 * e3), xi * e1 * (1 - e2 * e3), xi, xi * e1 * e2);

          const double wv = w4 * xi * xi * xi * e2;
          add(vertex_, wv, xi, xi * e1, xi * e2, xi * e2 * e3);
          add(vertex_, wv, xi * e2, xi * e2 * e1, xi, xi * e3);
        }
      }
    }
  }
  int max_points = 0;
  for (int p : config_.regular_points) max_points = std::max(max_points, p);
  triangle_rules_.resize(static_cast<std::size_t>(max_points) + 1);
  for (int p : config_.regular_points) triangle_rules_[p] = triangle_rule_points(p);
}

const TriangleRule& PairQuadrature::triangle(int points) const {
  if (points < 1 || static_cast<std::size_t>(points) >= triangle_rules_.size() ||
      triangle_rules_[points].size() == 0) {
    throw ConfigError("regular quadrature order " + std::to_string(points) + " not prepared");
  }
  return triangle_rules_[points];
}

void PairQuadrature::regular_rule(int points, double jac_x, double jac_y, PairRule& out) const {
  const TriangleRule& r = triangle(points);
  out.kind = PairKind::Regular;
  out.bary_x.clear();
  out.bary_y.clear();
  out.weights.clear();
  const std::size_t n = r.size();
  out.bary_x.reserve(n * n);
  out.bary_y.reserve(n * n);
  out.weights.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::array<double, 3> bx{1.0 - r.points[i][0] - r.points[i][1], r.points[i][0], r.points[i][1]};
    for (std::size_t j = 0; j < n; ++j) {
      out.bary_x.push_back(bx);
      out.bary_y.push_back({1.0 - r.points[j][0] - r.points[j][1], r.points[j][0], r.points[j][1]});
      out.weights.push_back(r.weights[i] * r.weights[j] * jac_x * jac_y);
    }
  }
}

void PairQuadrature::rule(const SurfaceMesh& mesh, std::size_t tx, std::size_t ty, PairRule& out) const {
  const auto& vx = mesh.triangles()[tx];
  const auto& vy = mesh.triangles()[ty];
  const double jx = 2.0 * mesh.areas()[tx];
  const double jy = 2.0 * mesh.areas()[ty];
  const PairKind kind = classify_pair(vx, vy);
  if (kind == PairKind::Regular) {
    const double h = std::max(mesh.diameters()[tx], mesh.diameters()[ty]);
    const double ratio = (mesh.centroid(tx) - mesh.centroid(ty)).norm() / h;
    regular_rule(config_.regular_points_for(ratio), jx, jy, out);
    return;
  }

  // Local permutations putting the shared vertices first, in matching order.
  std::array<int, 3> px{0, 1, 2}, py{0, 1, 2};
  const Reference* ref = &coincident_;
  auto local_index = [](const std::array<int, 3>& t, int v) {
    return static_cast<int>(std::find(t.begin(), t.end(), v) - t.begin());
  };
  if (kind == PairKind::Coincident) {
    ref = &coincident_;
  } else if (kind == PairKind::Edge) {
    ref = &edge_;
    int k = 0;
    int xs[2] = {0, 0}, ys[2] = {0, 0};
    for (int a = 0; a < 3; ++a) {
      const int b = local_index(vy, vx[a]);
      if (b < 3) {
        xs[k] = a;
        ys[k] = b;
        ++k;
      }
    }
    px = {xs[0], xs[1], 3 - xs[0] - xs[1]};
    py = {ys[0], ys[1], 3 - ys[0] - ys[1]};
  } else {
    ref = &vertex_;
    for (int a = 0; a < 3; ++a) {
      const int b = local_index(vy, vx[a]);
      if (b < 3) {
        px = {a, (a + 1) % 3, (a + 2) % 3};
        py = {b, (b + 1) % 3, (b + 2) % 3};
        break;
      }
    }
  }

  out.kind = kind;
  const std::size_t n = ref->weights.size();
  out.bary_x.resize(n);
  out.bary_y.resize(n);
  out.weights.resize(n);
  const double jac = jx * jy;
  for (std::size_t q = 0; q < n; ++q) {
    const auto& p = ref->points[q];
    auto& bx = out.bary_x[q];
    auto& by = out.bary_y[q];
    bx[px[0]] = 1.0 - p[0];
    bx[px[1]] = p[0] - p[1];
    bx[px[2]] = p[1];
    by[py[0]] = 1.0 - p[2];
    by[py[1]] = p[2] - p[3];
    by[py[2]] = p[3];
    out.weights[q] = ref->weights[q] * jac;
  }
}

}  // namespace fembem
