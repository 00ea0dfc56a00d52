#pragma once

// Weyl-Heisenberg operator family on C^d: shift, clock, displacements, the
// discrete Fourier transform, and the generalized Bell basis of C^d (x) C^d.
//
// Conventions used throughout the library:
//   * Outcome (j,k) is flattened to the linear index j*d + k.
//   * D_jk = X^j Z^k, no extra phase prefactor, for every d.
//   * In C^d (x) C^d the first factor is the system, the second the ancilla;
//     |a,b> sits at index a*d + b.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace naimark {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;

/// Default tolerance for physical checks (unitarity, probabilities).
inline constexpr double kPhysicalTol = 1e-10;
/// Default tolerance for exact-algebra fixtures.
inline constexpr double kExactTol = 1e-12;

/// A pair (j,k) in Z_d x Z_d. Construction reduces both entries mod d, so
/// negative or oversized inputs are accepted.
class WHIndex {
 public:
  WHIndex(int d, long j, long k);

  int dim() const noexcept { return d_; }
  int j() const noexcept { return j_; }
  int k() const noexcept { return k_; }
  int flat() const noexcept { return j_ * d_ + k_; }

  static WHIndex from_flat(int d, int flat);

  friend bool operator==(const WHIndex&, const WHIndex&) = default;

 private:
  int d_;
  int j_;
  int k_;
};

/// Reduce m into [0, d).
int mod(long m, int d);

/// omega = exp(2 pi i / d).
Complex root_of_unity(int d);
/// omega^m with the exponent reduced mod d before evaluation, so large powers
/// do not accumulate phase error.
Complex root_of_unity_pow(int d, long m);

ComplexMatrix shift_op(int d);
ComplexMatrix clock_op(int d);
ComplexMatrix displacement(const WHIndex& idx);
inline ComplexMatrix displacement(int d, long j, long k) {
  return displacement(WHIndex(d, j, k));
}

/// F = d^{-1/2} sum_jk omega^{jk} |j><k|.
ComplexMatrix fourier(int d);

/// |D_jk> = d^{-1/2} sum_l omega^{kl} |j+l, l>.
Ket bell_vector(const WHIndex& idx);
/// The d^2 x d^2 unitary whose row j*d+k is <D_jk|.
ComplexMatrix bell_change_of_basis(int d);

// Dense helpers shared by every module.

/// Kronecker product A (x) B.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Max-norm of A - B; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// ||A^dagger A - I||_max, or +inf if A is not square.
double unitarity_residual(const ComplexMatrix& a);
bool is_unitary(const ComplexMatrix& a, double tol = kExactTol);
/// Componentwise conjugate of a column vector.
Ket conj(const Ket& v);

}  // namespace naimark
