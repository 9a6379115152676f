#pragma once

#include <optional>
#include <vector>

#include "lich/scalar.hpp"

namespace lich {

// Dense matrix of exact scalars. Small by construction (at most C(16, 8) rows).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const ScalarMode& mode);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ScalarMode& mode() const { return mode_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  // Rows of `top` followed by rows of `bottom`; column counts must agree.
  static Matrix stack(const Matrix& top, const Matrix& bottom);
  Matrix transpose() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  ScalarMode mode_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan with the first nonzero entry (top-down) of each column as pivot.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Kernel basis: one vector per free column, that column set to 1 and the
// other free columns to 0; ordered by free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);
// One solution of m x = rhs with every free column set to 0, or nullopt.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs);

bool is_zero_vector(const std::vector<Scalar>& v);

}  // namespace lich
