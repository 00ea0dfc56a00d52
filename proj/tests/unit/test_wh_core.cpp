#include <catch_amalgamated.hpp>

#include "naimark/error.hpp"
#include "naimark/wh_core.hpp"
#include "oracles.hpp"

using namespace naimark;
using Catch::Matchers::WithinAbs;

TEST_CASE("root_of_unity special values", "[wh_core]") {
  CHECK(root_of_unity(1) == Complex(1.0, 0.0));
  CHECK(std::abs(root_of_unity(2) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(root_of_unity(4) - Complex(0.0, 1.0)) < 1e-15);
  for (int d = 1; d <= 12; ++d) CHECK_THAT(std::abs(root_of_unity(d)), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_MATCHES(root_of_unity(0), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::InvalidDimension; }));
}

TEST_CASE("root_of_unity_pow reduces the exponent", "[wh_core]") {
  for (int d = 2; d <= 7; ++d)
    for (long m = -20; m <= 20; ++m)
      CHECK(std::abs(root_of_unity_pow(d, m) - oracle::omega_pow(d, m)) < 1e-13);
}

TEST_CASE("WHIndex arithmetic is mod d", "[wh_core]") {
  const WHIndex a(3, -1, 5);
  CHECK(a.j() == 2);
  CHECK(a.k() == 2);
  CHECK(a.flat() == 8);
  CHECK(WHIndex::from_flat(3, 8) == a);
  CHECK(mod(-7, 4) == 1);
}

TEST_CASE("shift and clock in small dimensions", "[wh_core]") {
  ComplexMatrix x2(2, 2);
  x2 << 0, 1, 1, 0;
  CHECK(max_abs_diff(shift_op(2), x2) == 0.0);

  ComplexMatrix z2 = ComplexMatrix::Zero(2, 2);
  z2(0, 0) = 1;
  z2(1, 1) = -1;
  CHECK(max_abs_diff(clock_op(2), z2) < 1e-15);

  const Complex w = std::polar(1.0, 2 * M_PI / 3);
  ComplexMatrix z3 = ComplexMatrix::Zero(3, 3);
  z3(0, 0) = 1;
  z3(1, 1) = w;
  z3(2, 2) = w * w;
  CHECK(max_abs_diff(clock_op(3), z3) < 1e-15);

  CHECK_THROWS_AS(shift_op(1), Error);
  CHECK_THROWS_AS(clock_op(0), Error);
}

TEST_CASE("displacement operators", "[wh_core]") {
  CHECK(max_abs_diff(displacement(2, 0, 0), ComplexMatrix::Identity(2, 2)) == 0.0);
  ComplexMatrix xz(2, 2);
  xz << 0, -1, 1, 0;
  CHECK(max_abs_diff(displacement(2, 1, 1), xz) < 1e-15);

  const ComplexMatrix d12 = displacement(3, 1, 2);
  const ComplexMatrix d10 = displacement(3, 1, 0);
  CHECK(std::abs((d12.adjoint() * d12).trace() - Complex(3.0)) < 1e-12);
  CHECK(std::abs((d12.adjoint() * d10).trace()) < 1e-12);
}

TEST_CASE("displacements match brute-force products and are unitary", "[wh_core][property]") {
  for (int d = 2; d <= 8; ++d)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const ComplexMatrix dj = displacement(d, j, k);
        CHECK(max_abs_diff(dj, oracle::displacement(d, j, k)) < 1e-12);
        CHECK(unitarity_residual(dj) < 1e-12);
      }
}

TEST_CASE("displacements form an orthogonal operator basis", "[wh_core][property]") {
  for (int d = 2; d <= 6; ++d) {
    std::vector<ComplexMatrix> ops;
    for (int a = 0; a < d * d; ++a) ops.push_back(displacement(d, a / d, a % d));
    double worst = 0.0;
    for (int a = 0; a < d * d; ++a)
      for (int b = 0; b < d * d; ++b) {
        const Complex expected = a == b ? Complex(d) : Complex(0.0);
        worst = std::max(worst, std::abs((ops[a].adjoint() * ops[b]).trace() - expected));
      }
    INFO("d = " << d);
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Fourier transform", "[wh_core]") {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  CHECK(max_abs_diff(fourier(2), h) < 1e-15);
  CHECK(max_abs_diff(fourier(1), ComplexMatrix::Identity(1, 1)) == 0.0);
  CHECK(max_abs_diff(shift_op(5), fourier(5).adjoint() * clock_op(5) * fourier(5)) < 1e-12);
  CHECK_THROWS_AS(fourier(0), Error);

  for (int d = 1; d <= 8; ++d) {
    CHECK(max_abs_diff(fourier(d), oracle::fourier(d)) < 1e-12);
    CHECK(unitarity_residual(fourier(d)) < 1e-12);
    if (d >= 2) CHECK(max_abs_diff(shift_op(d), fourier(d).adjoint() * clock_op(d) * fourier(d)) < 1e-12);
  }
}

TEST_CASE("Bell vectors in d = 2", "[wh_core]") {
  const Ket phi_plus = bell_vector(WHIndex(2, 0, 0));
  Ket expected = Ket::Zero(4);
  expected(0) = expected(3) = 1.0 / std::sqrt(2.0);
  CHECK((phi_plus - expected).cwiseAbs().maxCoeff() < 1e-15);

  // (1/sqrt2)(|1,0> + omega |0,1>) with omega = -1.
  const Ket v11 = bell_vector(WHIndex(2, 1, 1));
  Ket e11 = Ket::Zero(4);
  e11(2) = 1.0 / std::sqrt(2.0);
  e11(1) = -1.0 / std::sqrt(2.0);
  CHECK((v11 - e11).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Bell basis is orthonormal and complete", "[wh_core][property]") {
  for (int d = 2; d <= 6; ++d) {
    ComplexMatrix cols(d * d, d * d);
    for (int a = 0; a < d * d; ++a) {
      const Ket v = bell_vector(WHIndex::from_flat(d, a));
      CHECK((v - oracle::bell_vector(d, a / d, a % d)).cwiseAbs().maxCoeff() < 1e-12);
      cols.col(a) = v;
    }
    CHECK(max_abs_diff(cols.adjoint() * cols, ComplexMatrix::Identity(d * d, d * d)) < 1e-12);
    CHECK(max_abs_diff(cols * cols.adjoint(), ComplexMatrix::Identity(d * d, d * d)) < 1e-12);
  }
}

TEST_CASE("Bell reduced states are maximally mixed", "[wh_core][property]") {
  for (int d = 2; d <= 5; ++d)
    for (int a = 0; a < d * d; ++a) {
      const Ket v = bell_vector(WHIndex::from_flat(d, a));
      ComplexMatrix reduced = ComplexMatrix::Zero(d, d);
      for (int s = 0; s < d; ++s)
        for (int s2 = 0; s2 < d; ++s2)
          for (int anc = 0; anc < d; ++anc) reduced(s, s2) += v(s * d + anc) * std::conj(v(s2 * d + anc));
      CHECK(max_abs_diff(reduced, ComplexMatrix::Identity(d, d) / d) < 1e-12);
    }
}

TEST_CASE("Bell change of basis", "[wh_core]") {
  Ket phi_plus = Ket::Zero(4);
  phi_plus(0) = phi_plus(3) = 1.0 / std::sqrt(2.0);
  const Ket image = bell_change_of_basis(2) * phi_plus;
  CHECK(std::abs(image(0) - Complex(1.0)) < 1e-15);
  CHECK(image.tail(3).norm() < 1e-15);

  for (int d = 2; d <= 6; ++d) {
    const ComplexMatrix b = bell_change_of_basis(d);
    CHECK(max_abs_diff(b, oracle::bell_change(d)) < 1e-12);
    CHECK(unitarity_residual(b) < 1e-12);
  }
  CHECK_THROWS_AS(bell_change_of_basis(1), Error);
}

TEST_CASE("dense helpers", "[wh_core]") {
  const ComplexMatrix a = ComplexMatrix::Random(2, 3);
  const ComplexMatrix b = ComplexMatrix::Random(3, 2);
  CHECK(max_abs_diff(kron(a, b), oracle::kron(a, b)) == 0.0);
  CHECK_THROWS_AS(max_abs_diff(a, b), Error);
  CHECK(std::isinf(unitarity_residual(a)));
  CHECK(is_unitary(fourier(3)));
  CHECK_FALSE(is_unitary(2.0 * fourier(3)));
  Ket v(2);
  v << Complex(1, 2), Complex(3, -4);
  CHECK(conj(v)(0) == Complex(1, -2));
  CHECK(conj(v)(1) == Complex(3, 4));
}
