#include "fembem/common/errors.hpp"

#include <utility>

namespace fembem {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

SolverError::SolverError(const std::string& what, std::vector<double> residuals)
    : Error(what), residuals_(std::move(residuals)) {}

DivergenceError::DivergenceError(double sigma, std::vector<double> increments)
    : Error("relaxed Jacobi iteration diverged for sigma = " + std::to_string(sigma)),
      sigma_(sigma),
      increments_(std::move(increments)) {}

}  // namespace fembem
