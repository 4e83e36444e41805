#pragma once

#include <iosfwd>
#include <string>

#include "fembem/bem/trace_space.hpp"
#include "fembem/coupling/coupled_system.hpp"
#include "fembem/fem/volume_space.hpp"

namespace fembem {

/// Analytic fields of a manufactured solution. Any member may be empty.
struct ExactSolution {
  ScalarField u_minus;
  VectorField grad_u_minus;
  ScalarField u_plus;
  NormalField lambda;
};

/// Named error and diagnostic norms. Entries that need an absent exact field
/// are NaN. The fractional norms are replaced by operator-induced surrogates:
/// <V e, e>^{1/2} for H^{-1/2} and (<W e, e> + |Gamma| mean(e)^2)^{1/2} for
/// H^{1/2}, applied to the difference between the L2 projection of the
/// exact field and the discrete field.
struct ErrorNorms {
  double l2_interior;
  double l2_u_plus;
  double l2_lambda;
  /// ||u-_h|_Gamma - u+_h|| / ||u+_h||, always available.
  double mismatch;
  /// (sum_E tau/h_E ||u-_h - u~_h||_E^2)^{1/2}
  double penalty_interior;
  /// (sum_E tau/h_E ||u+_h - u~_h||_E^2)^{1/2}
  double penalty_exterior;
  /// (sum_E h_E ||d_n (u- - u-_h)||_E^2)^{1/2}
  double flux_weighted;
  /// (sum_E h_E ||lambda - lambda_h||_E^2)^{1/2}
  double lambda_weighted;
  double v_surrogate;
  double w_surrogate;

  static std::string csv_header();
  std::string csv_row() const;
};

ErrorNorms error_norms(const CoupledSystem& system, const SolutionBundle& bundle, const ExactSolution& exact);

/// ||u - u_h||_{L2(Omega)} with a rule of the given degree.
double l2_error_interior(const VolumeSpace& space, const Vector& u, const ScalarField& exact, int degree = 8);
/// ||f - f_h||_{L2(Gamma_h)}; an empty `exact` gives ||f_h||.
double l2_error_surface(const TraceSpace& space, const Vector& f, const NormalField& exact, int degree = 6);
/// ||u_h|_Gamma - w_h||_{L2(Gamma_h)} between a volume trace and a surface field.
double trace_difference(const VolumeSpace& volume, const Vector& u, const TraceSpace& surface, const Vector& w,
                        int degree = 4);

}  // namespace fembem
