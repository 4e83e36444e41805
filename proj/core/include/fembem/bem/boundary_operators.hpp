#pragma once

#include "fembem/bem/pair_quadrature.hpp"
#include "fembem/bem/trace_space.hpp"
#include "fembem/common/types.hpp"

namespace fembem {

/// Dense Galerkin matrices of the boundary integral operators, rows indexed
/// by the test space:
///   V  (Lambda x Lambda)  <V phi_j, zeta_i>
///   K  (Lambda x W)       <K w_j, zeta_i>
///   Kp (W x Lambda)       <K' phi_j, v_i> = K^T
///   W  (W x W)            <W w_j, v_i> = int int G curl w_j . curl v_i
struct BoundaryOperators {
  DenseMatrix V;
  DenseMatrix K;
  DenseMatrix Kp;
  DenseMatrix W;
};

enum OperatorMask : unsigned {
  kSingleLayer = 1u,
  kDoubleLayer = 2u,
  kHypersingular = 4u,
  kAllOperators = 7u,
};

/// One pass over all triangle pairs. `w_space` must be continuous when the
/// hypersingular operator is requested; both spaces share one triangulation.
BoundaryOperators assemble_boundary_operators(const TraceSpace& w_space, const TraceSpace& lambda_space,
                                              const BemQuadrature& quadrature = {},
                                              unsigned mask = kAllOperators);

DenseMatrix assemble_single_layer(const TraceSpace& trial, const TraceSpace& test,
                                  const BemQuadrature& quadrature = {});
DenseMatrix assemble_double_layer(const TraceSpace& trial, const TraceSpace& test,
                                  const BemQuadrature& quadrature = {});
/// Transpose of the double layer with the roles of the spaces swapped.
DenseMatrix assemble_adjoint_double_layer(const TraceSpace& trial, const TraceSpace& test,
                                          const BemQuadrature& quadrature = {});
/// Throws UnsupportedSpace for discontinuous spaces.
DenseMatrix assemble_hypersingular(const TraceSpace& trial, const TraceSpace& test,
                                   const BemQuadrature& quadrature = {});

}  // namespace fembem
