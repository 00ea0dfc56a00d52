#include "naimark/wh_core.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "naimark/error.hpp"

namespace naimark {

namespace {

void require_dim(int d, int min_dim, const char* what) {
  if (d < min_dim) {
    throw Error(ErrorCode::InvalidDimension,
                std::string(what) + " requires d >= " +
                    std::to_string(min_dim) + ", got " + std::to_string(d));
  }
}

}  // namespace

int mod(long m, int d) {
  long r = m % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

WHIndex::WHIndex(int d, long j, long k) : d_(d) {
  require_dim(d, 1, "WHIndex");
  j_ = mod(j, d);
  k_ = mod(k, d);
}

WHIndex WHIndex::from_flat(int d, int flat) {
  require_dim(d, 1, "WHIndex");
  if (flat < 0 || flat >= d * d) {
    throw Error(ErrorCode::IndexOutOfRange,
                "flat index " + std::to_string(flat) + " outside [0, d^2)");
  }
  return WHIndex(d, flat / d, flat % d);
}

Complex root_of_unity(int d) {
  require_dim(d, 1, "root_of_unity");
  return root_of_unity_pow(d, 1);
}

Complex root_of_unity_pow(int d, long m) {
  require_dim(d, 1, "root_of_unity_pow");
  const int r = mod(m, d);
  // Exact values on the axes keep small-d fixtures free of 1e-16 dust.
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * r / d);
}

ComplexMatrix shift_op(int d) {
  require_dim(d, 2, "shift_op");
  ComplexMatrix x = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

ComplexMatrix clock_op(int d) {
  require_dim(d, 2, "clock_op");
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = root_of_unity_pow(d, k);
  return z;
}

ComplexMatrix displacement(const WHIndex& idx) {
  const int d = idx.dim();
  require_dim(d, 2, "displacement");
  // X^j Z^k |l> = omega^{kl} |l + j>
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (int l = 0; l < d; ++l) {
    out((l + idx.j()) % d, l) = root_of_unity_pow(d, static_cast<long>(idx.k()) * l);
  }
  return out;
}

ComplexMatrix fourier(int d) {
  require_dim(d, 1, "fourier");
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      f(j, k) = norm * root_of_unity_pow(d, static_cast<long>(j) * k);
  return f;
}

Ket bell_vector(const WHIndex& idx) {
  const int d = idx.dim();
  require_dim(d, 2, "bell_vector");
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  Ket v = Ket::Zero(d * d);
  for (int l = 0; l < d; ++l) {
    v(((idx.j() + l) % d) * d + l) =
        norm * root_of_unity_pow(d, static_cast<long>(idx.k()) * l);
  }
  return v;
}

ComplexMatrix bell_change_of_basis(int d) {
  require_dim(d, 2, "bell_change_of_basis");
  ComplexMatrix out(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      out.row(j * d + k) = bell_vector(WHIndex(d, j, k)).adjoint();
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidInput, "max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_residual(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.cols());
  return ((a.adjoint() * a) - id).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return unitarity_residual(a) <= tol;
}

Ket conj(const Ket& v) { return v.conjugate(); }

}  // namespace naimark
