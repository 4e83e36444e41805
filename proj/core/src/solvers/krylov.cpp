#include "fembem/solvers/krylov.hpp"

#include <chrono>
#include <cmath>
#include <memory>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void apply_or_copy(const LinearOperator& op, const Vector& x, Vector& y) {
  if (op) {
    op(x, y);
  } else {
    y = x;
  }
}

}  // namespace

KrylovResult cg(const LinearOperator& op, const Vector& rhs, const SolverConfig& config,
                const LinearOperator& preconditioner, const Vector* initial) {
  config.validate();
  const auto start = Clock::now();
  KrylovResult result;
  auto& trace = result.trace;
  Vector& x = result.solution;
  x = initial ? *initial : Vector::Zero(rhs.size());

  Vector r = rhs;
  Vector ax(rhs.size());
  if (initial) {
    op(x, ax);
    r -= ax;
  }
  Vector z(rhs.size());
  apply_or_copy(preconditioner, rhs, z);
  const double ref2 = rhs.dot(z);
  if (!(ref2 > 0.0)) {
    if (rhs.squaredNorm() == 0.0) {
      x.setZero();
      trace.residuals.push_back(0.0);
      trace.converged = true;
      trace.wall_time = seconds_since(start);
      return result;
    }
    throw SolverError("cg: preconditioner is not positive definite", {});
  }
  const double ref = std::sqrt(ref2);

  apply_or_copy(preconditioner, r, z);
  double rz = r.dot(z);
  trace.residuals.push_back(std::sqrt(std::max(rz, 0.0)) / ref);
  if (trace.residuals.back() <= config.tolerance) {
    trace.converged = true;
    trace.wall_time = seconds_since(start);
    return result;
  }
  Vector p = z;
  for (int it = 1; it <= config.max_iterations; ++it) {
    op(p, ax);
    const double pap = p.dot(ax);
    if (!std::isfinite(pap) || pap <= 0.0) {
      trace.wall_time = seconds_since(start);
      throw SolverError("cg: breakdown (p'Ap = " + std::to_string(pap) +
                            "), operator is not positive definite",
                        trace.residuals);
    }
    const double alpha = rz / pap;
    x += alpha * p;
    r -= alpha * ax;
    apply_or_copy(preconditioner, r, z);
    const double rz_new = r.dot(z);
    const double res = std::sqrt(std::abs(rz_new)) / ref;
    trace.residuals.push_back(res);
    trace.iterations = it;
    if (!std::isfinite(res)) {
      throw SolverError("cg: residual is not finite", trace.residuals);
    }
    if (res <= config.tolerance) {
      trace.converged = true;
      trace.wall_time = seconds_since(start);
      return result;
    }
    p = z + (rz_new / rz) * p;
    rz = rz_new;
  }
  trace.wall_time = seconds_since(start);
  throw SolverError("cg: no convergence within " + std::to_string(config.max_iterations) +
                        " iterations (residual " + std::to_string(trace.residuals.back()) + ")",
                    trace.residuals);
}

KrylovResult gmres(const LinearOperator& op, const Vector& rhs, const SolverConfig& config,
                   const LinearOperator& preconditioner, const Vector* initial) {
  config.validate();
  const auto start = Clock::now();
  const Eigen::Index n = rhs.size();
  const int m = config.restart;
  KrylovResult result;
  auto& trace = result.trace;
  Vector& x = result.solution;
  x = initial ? *initial : Vector::Zero(n);

  Vector work(n);
  Vector pb(n);
  apply_or_copy(preconditioner, rhs, pb);
  const double ref = pb.norm();
  if (ref == 0.0) {
    x.setZero();
    trace.residuals.push_back(0.0);
    trace.converged = true;
    trace.wall_time = seconds_since(start);
    return result;
  }

  DenseMatrix basis(n, m + 1);
  DenseMatrix hess = DenseMatrix::Zero(m + 1, m);
  Vector cs(m), sn(m), g(m + 1);
  Vector w(n);
  int total = 0;

  auto residual_vector = [&](Vector& out) {
    op(x, work);
    work = rhs - work;
    apply_or_copy(preconditioner, work, out);
  };

  Vector r(n);
  residual_vector(r);
  double beta = r.norm();
  trace.residuals.push_back(beta / ref);
  if (beta / ref <= config.tolerance) {
    trace.converged = true;
    trace.wall_time = seconds_since(start);
    return result;
  }

  while (total < config.max_iterations) {
    basis.col(0) = r / beta;
    g.setZero();
    g(0) = beta;
    hess.setZero();
    int k = 0;
    for (; k < m && total < config.max_iterations; ++k) {
      op(basis.col(k), work);
      apply_or_copy(preconditioner, work, w);
      // modified Gram-Schmidt
      for (int i = 0; i <= k; ++i) {
        hess(i, k) = w.dot(basis.col(i));
        w -= hess(i, k) * basis.col(i);
      }
      hess(k + 1, k) = w.norm();
      if (hess(k + 1, k) > 0.0) basis.col(k + 1) = w / hess(k + 1, k);
      for (int i = 0; i < k; ++i) {
        const double t = cs(i) * hess(i, k) + sn(i) * hess(i + 1, k);
        hess(i + 1, k) = -sn(i) * hess(i, k) + cs(i) * hess(i + 1, k);
        hess(i, k) = t;
      }
      const double denom = std::hypot(hess(k, k), hess(k + 1, k));
      if (!(denom > 0.0) || !std::isfinite(denom)) {
        trace.wall_time = seconds_since(start);
        throw SolverError("gmres: breakdown", trace.residuals);
      }
      cs(k) = hess(k, k) / denom;
      sn(k) = hess(k + 1, k) / denom;
      hess(k, k) = denom;
      hess(k + 1, k) = 0.0;
      g(k + 1) = -sn(k) * g(k);
      g(k) = cs(k) * g(k);
      ++total;
      const double res = std::abs(g(k + 1)) / ref;
      trace.residuals.push_back(res);
      trace.iterations = total;
      if (res <= config.tolerance) {
        ++k;
        break;
      }
    }
    // x += V_k y, with H_k y = g_k upper triangular
    Vector y = hess.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
    x += basis.leftCols(k) * y;
    if (trace.residuals.back() <= config.tolerance) {
      trace.converged = true;
      trace.wall_time = seconds_since(start);
      return result;
    }
    residual_vector(r);
    beta = r.norm();
    if (beta / ref <= config.tolerance) {
      trace.residuals.back() = beta / ref;
      trace.converged = true;
      trace.wall_time = seconds_since(start);
      return result;
    }
  }
  trace.wall_time = seconds_since(start);
  throw SolverError("gmres: no convergence within " + std::to_string(config.max_iterations) +
                        " iterations (residual " + std::to_string(trace.residuals.back()) + ")",
                    trace.residuals);
}

LinearOperator as_operator(const SparseMatrix& matrix) {
  auto m = std::make_shared<const SparseMatrix>(matrix);
  return [m](const Vector& x, Vector& y) { y.noalias() = (*m) * x; };
}

LinearOperator as_operator(const DenseMatrix& matrix) {
  auto m = std::make_shared<const DenseMatrix>(matrix);
  return [m](const Vector& x, Vector& y) { y.noalias() = (*m) * x; };
}

LinearOperator jacobi_preconditioner(const SparseMatrix& matrix) {
  auto inv = std::make_shared<Vector>(matrix.diagonal());
  for (Eigen::Index i = 0; i < inv->size(); ++i) {
    const double d = (*inv)(i);
    if (!(d > 0.0)) throw SolverError("jacobi preconditioner: non-positive diagonal entry", {});
    (*inv)(i) = 1.0 / d;
  }
  return [inv](const Vector& x, Vector& y) { y = inv->cwiseProduct(x); };
}

}  // namespace fembem
