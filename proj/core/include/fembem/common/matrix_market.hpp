#pragma once

#include <iosfwd>
#include <string>

#include "fembem/common/types.hpp"

namespace fembem {

/// Matrix Market "coordinate real general" writer for sparse operators.
void write_matrix_market(std::ostream& out, const SparseMatrix& matrix);
/// Matrix Market "array real general" writer for dense operators.
void write_matrix_market(std::ostream& out, const DenseMatrix& matrix);

void write_matrix_market(const std::string& path, const SparseMatrix& matrix);
void write_matrix_market(const std::string& path, const DenseMatrix& matrix);

/// Reads either flavour back into a dense matrix.
DenseMatrix read_matrix_market(std::istream& in);

}  // namespace fembem
