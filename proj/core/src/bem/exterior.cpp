#include "fembem/bem/exterior.hpp"

#include <memory>

#include "fembem/bem/surface_mass.hpp"
#include "fembem/common/errors.hpp"

namespace fembem {

ExteriorBlocks assemble_exterior(const BoundaryOperators& ops, std::shared_ptr<const TraceSpace> w_space,
                                 std::shared_ptr<const TraceSpace> lambda_space,
                                 std::shared_ptr<const TraceSpace> trace_space, double tau) {
  if (!w_space || !lambda_space || !trace_space) throw InvalidArgument("exterior assembly needs all three spaces");
  if (!(tau > 0.0)) throw InvalidArgument("penalty parameter tau must be positive");
  if (!same_surface(w_space->surface(), lambda_space->surface()) ||
      !same_surface(w_space->surface(), trace_space->surface())) {
    throw StructuralError("exterior spaces live on different triangulations");
  }
  const auto nw = static_cast<Eigen::Index>(w_space->num_dofs());
  const auto nl = static_cast<Eigen::Index>(lambda_space->num_dofs());
  if (ops.V.rows() != nl || ops.V.cols() != nl || ops.W.rows() != nw || ops.W.cols() != nw ||
      ops.K.rows() != nl || ops.K.cols() != nw) {
    throw StructuralError("boundary operator sizes do not match the spaces");
  }
  ExteriorBlocks e;
  e.tau = tau;
  e.V = ops.V;
  e.W = ops.W;
  e.K = ops.K;
  e.mass_ww = surface_mass(*w_space, *w_space);
  e.mass_ll = surface_mass(*lambda_space, *lambda_space);
  e.mass_lw = surface_mass(*lambda_space, *w_space);
  e.C = surface_mass(*lambda_space, *trace_space);
  e.B = 0.5 * DenseMatrix(e.mass_lw) + e.K;
  e.penalty_ww = penalty_mass(*w_space, *w_space, tau);
  e.penalty_wm = penalty_mass(*w_space, *trace_space, tau);
  e.penalty_mm = penalty_mass(*trace_space, *trace_space, tau);
  e.w_space = std::move(w_space);
  e.lambda_space = std::move(lambda_space);
  e.trace_space = std::move(trace_space);
  return e;
}

DenseMatrix ExteriorBlocks::matrix() const {
  const auto nw = static_cast<Eigen::Index>(num_w());
  const auto nl = static_cast<Eigen::Index>(num_lambda());
  const auto nm = static_cast<Eigen::Index>(num_trace());
  DenseMatrix m = DenseMatrix::Zero(nw + nl + nm, nw + nl + nm);
  m.block(0, 0, nw, nw) = W + DenseMatrix(penalty_ww);
  m.block(0, nw, nw, nl) = B.transpose();
  m.block(0, nw + nl, nw, nm) = -DenseMatrix(penalty_wm);
  m.block(nw, 0, nl, nw) = -B;
  m.block(nw, nw, nl, nl) = V;
  m.block(nw, nw + nl, nl, nm) = DenseMatrix(C);
  m.block(nw + nl, 0, nm, nw) = -DenseMatrix(penalty_wm).transpose();
  m.block(nw + nl, nw, nm, nl) = -DenseMatrix(C).transpose();
  m.block(nw + nl, nw + nl, nm, nm) = DenseMatrix(penalty_mm);
  return m;
}

Vector ExteriorBlocks::apply(const Vector& u, const Vector& lambda, const Vector& ut) const {
  const auto nw = static_cast<Eigen::Index>(num_w());
  const auto nl = static_cast<Eigen::Index>(num_lambda());
  const auto nm = static_cast<Eigen::Index>(num_trace());
  if (u.size() != nw || lambda.size() != nl || ut.size() != nm) throw StructuralError("exterior block sizes");
  Vector y(nw + nl + nm);
  y.segment(0, nw) = W * u + penalty_ww * u + B.transpose() * lambda - penalty_wm * ut;
  y.segment(nw, nl) = -B * u + V * lambda + C * ut;
  y.segment(nw + nl, nm) = -(penalty_wm.transpose() * u) - C.transpose() * lambda + penalty_mm * ut;
  return y;
}

ReducedExterior::ReducedExterior(const ExteriorBlocks& blocks) : blocks_(&blocks), v_factor_(blocks.V) {
  if (v_factor_.info() != Eigen::Success) {
    throw SolverError("single layer matrix is not positive definite (quadrature or mesh defect)", {});
  }
  v_inv_b_ = v_factor_.solve(blocks.B);
  r_ww_ = blocks.W + DenseMatrix(blocks.penalty_ww) + blocks.B.transpose() * v_inv_b_;
  r_ww_ = 0.5 * (r_ww_ + r_ww_.transpose()).eval();
}

Vector ReducedExterior::solve_v(const Vector& rhs) const { return v_factor_.solve(rhs); }

Vector ReducedExterior::apply_wm(const Vector& ut) const {
  const Vector cu = blocks_->C * ut;
  return -(blocks_->penalty_wm * ut + v_inv_b_.transpose() * cu);
}

Vector ReducedExterior::apply_mw(const Vector& u) const {
  const Vector vb = v_inv_b_ * u;
  return -(blocks_->penalty_wm.transpose() * u + blocks_->C.transpose() * vb);
}

Vector ReducedExterior::apply_mm(const Vector& ut) const {
  const Vector cu = blocks_->C * ut;
  return blocks_->penalty_mm * ut + blocks_->C.transpose() * solve_v(cu);
}

Vector ReducedExterior::recover_lambda(const Vector& u, const Vector& ut) const {
  return solve_v(blocks_->B * u - blocks_->C * ut);
}

DenseMatrix ReducedExterior::matrix() const {
  const auto nw = static_cast<Eigen::Index>(blocks_->num_w());
  const auto nm = static_cast<Eigen::Index>(blocks_->num_trace());
  const DenseMatrix c = DenseMatrix(blocks_->C);
  const DenseMatrix v_inv_c = v_factor_.solve(c);
  DenseMatrix m(nw + nm, nw + nm);
  m.block(0, 0, nw, nw) = r_ww_;
  const DenseMatrix wm = -(DenseMatrix(blocks_->penalty_wm) + blocks_->B.transpose() * v_inv_c);
  m.block(0, nw, nw, nm) = wm;
  m.block(nw, 0, nm, nw) = wm.transpose();
  m.block(nw, nw, nm, nm) = DenseMatrix(blocks_->penalty_mm) + c.transpose() * v_inv_c;
  return m;
}

ReducedExterior symmetric_reduce(const ExteriorBlocks& blocks) { return ReducedExterior(blocks); }

namespace {

LinearOperator sparse_inverse(const SparseMatrix& m) {
  auto ldlt = std::make_shared<Eigen::SimplicialLDLT<SparseMatrix>>(m);
  if (ldlt->info() != Eigen::Success) throw SolverError("mass preconditioner factorization failed", {});
  return [ldlt](const Vector& x, Vector& y) { y = ldlt->solve(x); };
}

}  // namespace

ExteriorDirichletSolver::ExteriorDirichletSolver(const ExteriorBlocks& blocks, bool reduced, SolverConfig config)
    : blocks_(&blocks), config_(std::move(config)) {
  config_.validate();
  if (config_.preconditioner != "none" && config_.preconditioner != "mass") {
    throw ConfigError("exterior preconditioner must be none or mass, got " + config_.preconditioner);
  }
  const bool mass = config_.preconditioner == "mass";
  if (reduced) {
    reduced_ = std::make_unique<ReducedExterior>(blocks);
    if (mass) precond_ = sparse_inverse(blocks.mass_ww);
    return;
  }
  const auto nw = static_cast<Eigen::Index>(blocks.num_w());
  const auto nl = static_cast<Eigen::Index>(blocks.num_lambda());
  const ExteriorBlocks* b = blocks_;
  auto top = std::make_shared<DenseMatrix>(b->W + DenseMatrix(b->penalty_ww));
  block_op_ = [b, top, nw, nl](const Vector& x, Vector& y) {
    y.resize(nw + nl);
    const auto u = x.segment(0, nw);
    const auto l = x.segment(nw, nl);
    y.segment(0, nw) = *top * u + b->B.transpose() * l;
    y.segment(nw, nl) = -b->B * u + b->V * l;
  };
  if (mass) {
    LinearOperator pw = sparse_inverse(blocks.mass_ww);
    LinearOperator pl = sparse_inverse(blocks.mass_ll);
    precond_ = [pw, pl, nw, nl](const Vector& x, Vector& y) {
      y.resize(nw + nl);
      Vector a, c;
      pw(x.segment(0, nw), a);
      pl(x.segment(nw, nl), c);
      y.segment(0, nw) = a;
      y.segment(nw, nl) = c;
    };
  }
}

ExteriorSolution ExteriorDirichletSolver::solve(const Vector& ut) const {
  if (ut.size() != static_cast<Eigen::Index>(blocks_->num_trace())) {
    throw StructuralError("trace data does not match the trace space");
  }
  ExteriorSolution s;
  if (reduced_) {
    const Vector rhs = -reduced_->apply_wm(ut);
    KrylovResult r = cg(as_operator(reduced_->r_ww()), rhs, config_, precond_);
    s.u_plus = std::move(r.solution);
    s.lambda = reduced_->recover_lambda(s.u_plus, ut);
    s.trace = std::move(r.trace);
    return s;
  }
  const auto nw = static_cast<Eigen::Index>(blocks_->num_w());
  const auto nl = static_cast<Eigen::Index>(blocks_->num_lambda());
  Vector rhs(nw + nl);
  rhs.segment(0, nw) = blocks_->penalty_wm * ut;
  rhs.segment(nw, nl) = -(blocks_->C * ut);
  KrylovResult r = gmres(block_op_, rhs, config_, precond_);
  s.u_plus = r.solution.segment(0, nw);
  s.lambda = r.solution.segment(nw, nl);
  s.trace = std::move(r.trace);
  return s;
}

ExteriorSolution solve_exterior_dirichlet(const ExteriorBlocks& blocks, const Vector& trace_data,
                                          const SolverConfig& config, bool reduced) {
  return ExteriorDirichletSolver(blocks, reduced, config).solve(trace_data);
}

}  // namespace fembem
