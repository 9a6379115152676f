#pragma once

// Conversions from library objects to the plain gmpxx oracle types.

#include "lich/algebra.hpp"
#include "support/ce_oracle.hpp"

namespace support {

using namespace lich;

inline oracle::Q q(const Scalar& s) { return s.rational().value(); }

// Bracket table read off the structure data: d e^k = sum A^k_ij e^i^e^j
// gives [X_i, X_j] = -sum_k A^k_ij X_k.
inline oracle::BracketData bracket_data(const Algebra& alg) {
  oracle::BracketData b(static_cast<int>(alg.size()));
  for (std::size_t k = 0; k < alg.size(); ++k)
    for (const auto& [mask, c] : alg.dgen(k).terms()) {
      const auto idx = mask_indices(mask);
      b.brackets[idx[0]][idx[1]][k] -= q(c);
      b.brackets[idx[1]][idx[0]][k] += q(c);
    }
  return b;
}

inline std::vector<oracle::Q> one_form_values(const Form& omega, std::size_t n) {
  std::vector<oracle::Q> out(n, 0);
  for (const auto& [mask, c] : omega.terms()) out[mask_indices(mask)[0]] = q(c);
  return out;
}

inline oracle::QMatrix to_qmatrix(const Matrix& m) {
  oracle::QMatrix out(m.rows(), std::vector<oracle::Q>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = q(m(r, c));
  return out;
}

// Jacobi identity straight from bracket coefficients.
inline bool oracle_jacobi(const oracle::BracketData& b) {
  const int n = b.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int out = 0; out < n; ++out) {
          oracle::Q total = 0;
          const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
          for (const auto& t : cyc)
            for (int m = 0; m < n; ++m) total += b.brackets[t[1]][t[2]][m] * b.brackets[t[0]][m][out];
          if (total != 0) return false;
        }
  return true;
}

}  // namespace support
