#include "oracles.hpp"

#include <Eigen/Dense>
#include <vector>

namespace oracles {

using omega6::Int;
using omega6::IntMatrix;

namespace {

Int det_rec(const IntMatrix& m, std::vector<int>& cols, int row) {
  const int n = m.dim();
  if (row == n) return 1;
  Int total = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int col = cols[k];
    if (m(row, col) != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      total += sign * m(row, col) * det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

Int det_cofactor(const IntMatrix& m) {
  std::vector<int> cols(m.dim());
  for (int j = 0; j < m.dim(); ++j) cols[j] = j;
  return det_rec(m, cols, 0);
}

int signature_eigen(const IntMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (int i = 0; i < n; ++i) {
    const double ev = solver.eigenvalues()(i);
    if (ev > 1e-9)
      ++sig;
    else if (ev < -1e-9)
      --sig;
  }
  return sig;
}

bool characteristic_brute(const omega6::IntersectionForm& q, std::span<const Int> v) {
  const int n = q.dim();
  std::vector<Int> x(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
    Int vqx = 0, xqx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        vqx += v[i] * q.matrix()(i, j) * x[j];
        xqx += x[i] * q.matrix()(i, j) * x[j];
      }
    if ((vqx - xqx) % 2 != 0) return false;
  }
  return true;
}

}  // namespace oracles
