#include "fembem/common/matrix_market.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "fembem/common/errors.hpp"

namespace fembem {

void write_matrix_market(std::ostream& out, const SparseMatrix& matrix) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << matrix.rows() << ' ' << matrix.cols() << ' ' << matrix.nonZeros() << '\n';
  out << std::setprecision(17);
  for (int k = 0; k < matrix.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(matrix, k); it; ++it) {
      out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
    }
  }
}

void write_matrix_market(std::ostream& out, const DenseMatrix& matrix) {
  out << "%%MatrixMarket matrix array real general\n";
  out << matrix.rows() << ' ' << matrix.cols() << '\n';
  out << std::setprecision(17);
  // column-major, as the format prescribes
  for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) out << matrix(i, j) << '\n';
  }
}

namespace {

template <class M>
void write_file(const std::string& path, const M& matrix) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path + " for writing");
  write_matrix_market(out, matrix);
}

}  // namespace

void write_matrix_market(const std::string& path, const SparseMatrix& matrix) {
  write_file(path, matrix);
}

void write_matrix_market(const std::string& path, const DenseMatrix& matrix) {
  write_file(path, matrix);
}

DenseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0) {
    throw ParseError(line_no, "missing %%MatrixMarket banner");
  }
  const bool coordinate = line.find("coordinate") != std::string::npos;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream header(line);
  Eigen::Index rows = 0, cols = 0, nnz = 0;
  header >> rows >> cols;
  if (coordinate) header >> nnz;
  if (!header) throw ParseError(line_no, "malformed size line");
  DenseMatrix result = DenseMatrix::Zero(rows, cols);
  if (coordinate) {
    for (Eigen::Index k = 0; k < nnz; ++k) {
      Eigen::Index i = 0, j = 0;
      double v = 0.0;
      if (!(in >> i >> j >> v)) throw ParseError(line_no + k + 1, "truncated entry list");
      result(i - 1, j - 1) += v;
    }
  } else {
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        if (!(in >> result(i, j))) throw ParseError(line_no + 1, "truncated array");
      }
    }
  }
  return result;
}

}  // namespace fembem
