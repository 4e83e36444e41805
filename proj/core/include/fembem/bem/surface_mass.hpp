#pragma once

#include <vector>

#include "fembem/bem/trace_space.hpp"
#include "fembem/common/types.hpp"

namespace fembem {

/// <trial_j, test_i>_Gamma as a (test x trial) sparse matrix. Both spaces
/// must share the triangulation.
SparseMatrix surface_mass(const TraceSpace& test, const TraceSpace& trial);

/// Penalty-weighted mass: sum over triangles E of tau / h_E <trial_j, test_i>_E
/// with h_E the triangle diameter.
SparseMatrix penalty_mass(const TraceSpace& test, const TraceSpace& trial, double tau);

/// Per-triangle weighted variant used by both of the above.
SparseMatrix weighted_surface_mass(const TraceSpace& test, const TraceSpace& trial,
                                   const std::vector<double>& triangle_weights);

}  // namespace fembem
