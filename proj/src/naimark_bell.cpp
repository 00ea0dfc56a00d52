#include "naimark/naimark_bell.hpp"

#include <cmath>
#include <string>

#include "naimark/error.hpp"

namespace naimark {

namespace {

ComplexMatrix ancilla_prep(const ComplexMatrix& m) {
  const auto d = m.rows();
  return kron(ComplexMatrix::Identity(d, d), m.transpose());
}

ComplexMatrix projector(int d, int j) {
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  p(j, j) = 1.0;
  return p;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, int n) {
  ComplexMatrix out = ComplexMatrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

}  // namespace

NaimarkExtension build_bell_naimark(const ComplexMatrix& m, double tol) {
  const double r = unitarity_residual(m);
  if (!(r <= tol)) {
    throw Error(ErrorCode::InvalidInput,
                "build_bell_naimark: M is not unitary (residual " + std::to_string(r) + ")");
  }
  const auto d = static_cast<int>(m.rows());
  return NaimarkExtension{d, m, bell_change_of_basis(d) * ancilla_prep(m), diagonal_blocks(m),
                          Construction::Bell};
}

Complex matrix_element(const ComplexMatrix& m, int r, int s, int t, int u) {
  const auto d = static_cast<int>(m.rows());
  for (int idx : {r, s, t, u}) {
    if (idx < 0 || idx >= d) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix_element index " + std::to_string(idx));
    }
  }
  const int q = mod(t - r, d);
  return root_of_unity_pow(d, -static_cast<long>(s) * q) * m(u, q) /
         std::sqrt(static_cast<double>(d));
}

ComplexMatrix controlled_shift(int d) {
  // X^{-j} = X^{d-j}
  const ComplexMatrix x = shift_op(d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) out += kron(matrix_power(x, mod(-j, d)), projector(d, j));
  return out;
}

ComplexMatrix shift_decomposition(int d) {
  return kron(ComplexMatrix::Identity(d, d), fourier(d).adjoint()) * controlled_shift(d);
}

ComplexMatrix controlled_clock(int d) {
  const ComplexMatrix z_inv = clock_op(d).adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) out += kron(projector(d, j), matrix_power(z_inv, j));
  return out;
}

ComplexMatrix clock_decomposition(const ComplexMatrix& m) {
  const auto d = static_cast<int>(m.rows());
  const ComplexMatrix f = fourier(d);
  const ComplexMatrix f_dag = f.adjoint();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return kron(f_dag, f_dag) * controlled_clock(d) * kron(f, id) * ancilla_prep(m);
}

Fiducial fiducial_for_embedding(const ComplexMatrix& m, int i, double tol) {
  if (i < 0 || i >= m.rows()) {
    throw Error(ErrorCode::IndexOutOfRange, "embedding index " + std::to_string(i));
  }
  return Fiducial::from_ket(m.row(i).adjoint(), "row-" + std::to_string(i), tol);
}

Ket bell_amplitudes(const Ket& psi, const Ket& phi) {
  if (psi.size() != phi.size()) {
    throw Error(ErrorCode::InvalidInput, "bell_amplitudes: dimension mismatch");
  }
  const auto d = static_cast<int>(psi.size());
  return bell_change_of_basis(d) * kron(psi, phi.conjugate());
}

}  // namespace naimark
