#include "lich/linalg.hpp"

#include "lich/error.hpp"

namespace lich {

Matrix::Matrix(std::size_t rows, std::size_t cols, const ScalarMode& mode)
    : rows_(rows), cols_(cols), mode_(mode), data_(rows * cols, mode.zero()) {}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DegreeMismatch, "matrix/vector size mismatch");
  std::vector<Scalar> out(rows_, mode_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
  return out;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw Error(ErrorKind::DegreeMismatch, "stacking mismatched matrices");
  Matrix m(top.rows_ + bottom.rows_, top.cols_, top.mode_);
  for (std::size_t r = 0; r < top.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows_; ++r)
    for (std::size_t c = 0; c < top.cols_; ++c) m(top.rows_ + r, c) = bottom(r, c);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, mode_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = m.mode().one() / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), m.mode().zero());
    v[free] = m.mode().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::DegreeMismatch, "right-hand side size mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.mode());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), m.mode().zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace lich
