#include "naimark/random.hpp"

#include <cmath>

namespace naimark {

namespace {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  return g;
}

}  // namespace

Ket random_ket(int d, Rng& rng) {
  Ket v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(d, d, rng));
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

ComplexMatrix random_density_matrix(int d, int n_pure, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  double total = 0.0;
  for (int i = 0; i < n_pure; ++i) {
    const double w = uniform(rng) + 1e-3;
    const Ket v = random_ket(d, rng);
    rho += w * (v * v.adjoint());
    total += w;
  }
  return rho / total;
}

}  // namespace naimark
