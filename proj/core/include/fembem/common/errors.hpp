#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fembem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Mesh or space layout does not satisfy a structural requirement
/// (non-manifold boundary, mismatched meshes, inconsistent block sizes).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidCoefficient : public Error {
 public:
  using Error::Error;
};

class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpace : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Iterative or direct solver failure. Carries the residual history of the
/// failed run so callers can report it.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::vector<double> residuals);
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class DivergenceError : public Error {
 public:
  DivergenceError(double sigma, std::vector<double> increments);
  double sigma() const noexcept { return sigma_; }
  const std::vector<double>& increments() const noexcept { return increments_; }

 private:
  double sigma_;
  std::vector<double> increments_;
};

}  // namespace fembem
