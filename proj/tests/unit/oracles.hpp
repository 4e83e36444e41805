#pragma once

// Reference computations that do not go through the library's quadrature
// or assembly code.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Vec3 = Eigen::Vector3d;

struct Line {
  std::vector<double> x, w;
};

// Gauss-Legendre on [0,1] by Newton iteration on P_n.
inline Line gauss(int n) {
  Line r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[i] = 0.5 * (1.0 - z);
    r.w[i] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

struct Tri {
  Vec3 a, b, c;
  Vec3 at(double s, double t) const { return a + s * (b - a) + t * (c - a); }
  double area() const { return 0.5 * (b - a).cross(c - a).norm(); }
  Vec3 normal() const { return (b - a).cross(c - a).normalized(); }
};

// Integral over a triangle by the collapsed (Duffy) tensor Gauss rule with
// n x n points; f receives barycentric (1-s-t, s, t) and the point.
inline double integrate(const Tri& T, int n, const std::function<double(double, double, const Vec3&)>& f) {
  const Line g = gauss(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = g.x[i], v = g.x[j];
      const double s = u * (1.0 - v), t = u * v;
      sum += g.w[i] * g.w[j] * u * f(s, t, T.at(s, t));
    }
  }
  return 2.0 * T.area() * sum;
}

// Same, split into 4^levels congruent subtriangles (for integrands with
// weak singularities on edges).
inline double integrate_split(const Tri& T, int n, int levels,
                              const std::function<double(const Vec3&)>& f) {
  if (levels == 0) return integrate(T, n, [&](double, double, const Vec3& x) { return f(x); });
  const Vec3 ab = 0.5 * (T.a + T.b), bc = 0.5 * (T.b + T.c), ca = 0.5 * (T.c + T.a);
  return integrate_split({T.a, ab, ca}, n, levels - 1, f) + integrate_split({ab, T.b, bc}, n, levels - 1, f) +
         integrate_split({ca, bc, T.c}, n, levels - 1, f) + integrate_split({ab, bc, ca}, n, levels - 1, f);
}

// int_T 1/|x - y| dy in closed form (uniform density on a flat triangle).
inline double triangle_potential(const Tri& T, const Vec3& x) {
  const Vec3 P[3] = {T.a, T.b, T.c};
  const Vec3 n = T.normal();
  const double d = (x - P[0]).dot(n);
  const Vec3 rho = x - d * n;
  const double ad = std::abs(d);
  double I = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Vec3& a = P[i];
    const Vec3& b = P[(i + 1) % 3];
    const Vec3 l = (b - a).normalized();
    const Vec3 u = l.cross(n);
    const double t = (a - rho).dot(u);
    const double lp = (b - rho).dot(l), lm = (a - rho).dot(l);
    const double Rp = (x - b).norm(), Rm = (x - a).norm();
    const double R0sq = t * t + d * d;
    double log_term = 0.0;
    if (std::abs(t) > 1e-300) log_term = t * std::log((Rp + lp) / (Rm + lm));
    I += log_term - ad * (std::atan2(t * lp, R0sq + ad * Rp) - std::atan2(t * lm, R0sq + ad * Rm));
  }
  return I;
}

// Signed solid angle of triangle (a, b, c) seen from x (Van Oosterom-Strackee).
inline double solid_angle(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 r1 = a - x, r2 = b - x, r3 = c - x;
  const double n1 = r1.norm(), n2 = r2.norm(), n3 = r3.norm();
  const double num = r1.dot(r2.cross(r3));
  const double den = n1 * n2 * n3 + r1.dot(r2) * n3 + r1.dot(r3) * n2 + r2.dot(r3) * n1;
  return 2.0 * std::atan2(num, den);
}

inline double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// int over {x, y >= 0, x + y <= 1} of x^a y^b.
inline double triangle_monomial(int a, int b) { return factorial(a) * factorial(b) / factorial(a + b + 2); }

// int over the reference tet of x^a y^b z^c.
inline double tet_monomial(int a, int b, int c) {
  return factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3);
}

// Inverse of the n x n Hilbert matrix, entry (i, j), 1-based.
inline double hilbert_inverse(int n, int i, int j) {
  auto binom = [](int p, int q) {
    double r = 1.0;
    for (int k = 1; k <= q; ++k) r = r * (p - q + k) / k;
    return r;
  };
  const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
  return sign * (i + j - 1) * binom(n + i - 1, n - j) * binom(n + j - 1, n - i) * binom(i + j - 2, i - 1) *
         binom(i + j - 2, i - 1);
}

// Barycentric P1 basis value `k` at (s, t).
inline double p1(int k, double s, double t) { return k == 0 ? 1.0 - s - t : (k == 1 ? s : t); }

// Four-dimensional tensor quadrature of int_Tx int_Ty F(x, y) for well
// separated triangles.
inline double pair_integral(const Tri& Tx, const Tri& Ty, int n,
                            const std::function<double(double, double, const Vec3&, double, double, const Vec3&)>& F) {
  return integrate(Tx, n, [&](double sx, double tx, const Vec3& x) {
    return integrate(Ty, n, [&](double sy, double ty, const Vec3& y) { return F(sx, tx, x, sy, ty, y); });
  });
}

// Integral over the tetrahedron (p0..p3) through the collapsed cube map with
// n^3 Gauss points; f receives the barycentric coordinates and the point.
inline double integrate_tet(const std::array<Vec3, 4>& p, int n,
                            const std::function<double(const std::array<double, 4>&, const Vec3&)>& f) {
  const Line g = gauss(n);
  const double vol = std::abs((p[1] - p[0]).dot((p[2] - p[0]).cross(p[3] - p[0]))) / 6.0;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double a = g.x[i], b = g.x[j], c = g.x[k];
        const double xi = a, eta = (1.0 - a) * b, zeta = (1.0 - a) * (1.0 - b) * c;
        const std::array<double, 4> l{1.0 - xi - eta - zeta, xi, eta, zeta};
        const Vec3 x = l[0] * p[0] + l[1] * p[1] + l[2] * p[2] + l[3] * p[3];
        sum += g.w[i] * g.w[j] * g.w[k] * (1.0 - a) * (1.0 - a) * (1.0 - b) * f(l, x);
      }
    }
  }
  return 6.0 * vol * sum;
}

}  // namespace oracle
