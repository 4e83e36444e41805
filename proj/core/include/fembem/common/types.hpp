#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fembem {

using Vec3 = Eigen::Vector3d;
using Vector = Eigen::VectorXd;
using DenseMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Scalar field on R^3.
using ScalarField = std::function<double(const Vec3&)>;
/// Vector field on R^3.
using VectorField = std::function<Vec3(const Vec3&)>;
/// Field that also depends on the local unit normal (Neumann data).
using NormalField = std::function<double(const Vec3&, const Vec3&)>;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace fembem
