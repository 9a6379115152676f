#pragma once

// Brute-force twisted Chevalley-Eilenberg ranks from a bracket table, using
// only gmpxx: forms are alternating functions on frame fields, d_omega is
// built from the bracket formula, ranks come from a plain elimination.

#include <gmpxx.h>

#include <algorithm>
#include <vector>

namespace oracle {

using Q = mpq_class;
using QMatrix = std::vector<std::vector<Q>>;

// brackets[i][j][k]: coefficient of X_k in [X_i, X_j].
struct BracketData {
  int n;
  std::vector<std::vector<std::vector<Q>>> brackets;

  explicit BracketData(int dim)
      : n(dim), brackets(dim, std::vector<std::vector<Q>>(dim, std::vector<Q>(dim, 0))) {}

  void set(int i, int j, int k, const Q& c) {
    brackets[i][j][k] = c;
    brackets[j][i][k] = -c;
  }
};

inline void tuples_rec(int n, int l, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == l) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    tuples_rec(n, l, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> tuples(int n, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (l >= 0 && l <= n) tuples_rec(n, l, 0, cur, out);
  return out;
}

// Value of the dual basis form e^target on frame fields X_args (any order).
inline Q basis_value(const std::vector<int>& target, std::vector<int> args) {
  if (args.size() != target.size()) return 0;
  int sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = 0; j + 1 < args.size() - i; ++j)
      if (args[j] > args[j + 1]) {
        std::swap(args[j], args[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == args[i + 1]) return 0;
  return args == target ? Q(sign) : Q(0);
}

// Matrix of d_omega on Lambda^l -> Lambda^(l+1); omega given by its values on X_i.
inline QMatrix twisted_matrix(const BracketData& b, const std::vector<Q>& omega, int l) {
  const auto cols = tuples(b.n, l);
  const auto rows = tuples(b.n, l + 1);
  QMatrix m(rows.size(), std::vector<Q>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& s = rows[r];
      Q value = 0;
      for (int i = 0; i <= l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
          std::vector<int> rest;
          for (int a = 0; a <= l; ++a)
            if (a != i && a != j) rest.push_back(s[a]);
          const Q sign = ((i + j) % 2 == 0) ? 1 : -1;
          for (int k = 0; k < b.n; ++k) {
            const Q& coeff = b.brackets[s[i]][s[j]][k];
            if (coeff == 0) continue;
            std::vector<int> args{k};
            args.insert(args.end(), rest.begin(), rest.end());
            value += sign * coeff * basis_value(cols[c], args);
          }
        }
        std::vector<int> rest;
        for (int a = 0; a <= l; ++a)
          if (a != i) rest.push_back(s[a]);
        const Q sign = (i % 2 == 0) ? 1 : -1;
        value += sign * omega[s[i]] * basis_value(cols[c], rest);
      }
      m[r][c] = value;
    }
  }
  return m;
}

inline std::size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t binomial(int n, int k) {
  return tuples(n, k).size();
}

inline std::vector<std::size_t> betti(const BracketData& b, const std::vector<Q>& omega) {
  std::vector<std::size_t> ranks(b.n + 1, 0);
  for (int l = 0; l < b.n; ++l) ranks[l] = rank(twisted_matrix(b, omega, l));
  std::vector<std::size_t> out;
  for (int l = 0; l <= b.n; ++l) out.push_back(binomial(b.n, l) - ranks[l] - (l > 0 ? ranks[l - 1] : 0));
  return out;
}

// The ACFM frame X, Y, Z, T with [X, Z] = kX, [X, Y] = -n lambda T,
// [Y, Z] = -kY and T central.
inline BracketData acfm_brackets(const Q& n, const Q& k, const Q& lambda) {
  BracketData b(4);
  b.set(0, 2, 0, k);
  b.set(0, 1, 3, -n * lambda);
  b.set(1, 2, 1, -k);
  return b;
}

}  // namespace oracle
