#include <catch_amalgamated.hpp>

#include "naimark/error.hpp"
#include "naimark/fiducials.hpp"
#include "naimark/naimark_bell.hpp"
#include "naimark/naimark_block.hpp"
#include "naimark/random.hpp"
#include "naimark/simulate.hpp"
#include "oracles.hpp"
#include "reference_matrices.hpp"

using namespace naimark;

TEST_CASE("Bell construction matches the printed unitaries", "[naimark_bell]") {
  const Fiducial q = builtin_fiducial("qubit-sic");
  const NaimarkExtension qubit = build_bell_naimark(catalog_M("qubit"));
  CHECK(qubit.provenance == Construction::Bell);
  CHECK(to_string(qubit.provenance) == "bell-construction");
  CHECK(max_abs_diff(qubit.u, fixtures::qubit_U(q.ket()(0), q.ket()(1))) < 1e-12);
  CHECK(max_abs_diff(build_bell_naimark(catalog_M("hesse")).u, fixtures::qutrit_U()) < 1e-12);
}

TEST_CASE("Bell construction with M = I is the change of basis", "[naimark_bell]") {
  const ComplexMatrix u = build_bell_naimark(ComplexMatrix::Identity(2, 2)).u;
  CHECK(max_abs_diff(u, bell_change_of_basis(2)) < 1e-15);
  for (int a = 0; a < 4; ++a)
    CHECK((u.row(a).transpose() - oracle::bell_vector(2, a / 2, a % 2).conjugate()).norm() < 1e-15);
}

TEST_CASE("Bell construction rejects non-unitary M", "[naimark_bell]") {
  CHECK_THROWS_MATCHES(build_bell_naimark(ComplexMatrix::Ones(2, 2)), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::InvalidInput; }));
}

TEST_CASE("block and Bell constructions coincide", "[naimark_bell][property]") {
  Rng rng(1234);
  for (int d = 2; d <= 6; ++d)
    for (int s = 0; s < 20; ++s) {
      const ComplexMatrix m = random_unitary(d, rng);
      const ComplexMatrix bell = build_bell_naimark(m).u;
      CHECK(max_abs_diff(bell, assemble_U(m).u) < 1e-10);
      CHECK(max_abs_diff(bell, oracle::naimark(m)) < 1e-10);
    }
}

TEST_CASE("matrix elements", "[naimark_bell]") {
  Rng rng(7);
  const ComplexMatrix m = random_unitary(4, rng);
  for (int r = 0; r < 4; ++r)
    CHECK(std::abs(matrix_element(m, r, 0, r, 0) - m(0, 0) / 2.0) < 1e-15);

  const ComplexMatrix printed = fixtures::qutrit_U();
  const ComplexMatrix hesse = catalog_M("hesse");
  const int spots[][4] = {{0, 0, 0, 1}, {0, 1, 1, 0}, {1, 2, 2, 0}, {2, 1, 1, 2}, {2, 2, 0, 2}};
  for (const auto& s : spots)
    CHECK(std::abs(matrix_element(hesse, s[0], s[1], s[2], s[3]) - printed(s[0] * 3 + s[1], s[2] * 3 + s[3])) <
          1e-12);
}

TEST_CASE("matrix elements agree with the full product", "[naimark_bell][property]") {
  Rng rng(77);
  for (int d = 2; d <= 5; ++d) {
    const ComplexMatrix m = random_unitary(d, rng);
    const ComplexMatrix u = oracle::naimark(m);
    double worst = 0.0;
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t)
          for (int v = 0; v < d; ++v)
            worst = std::max(worst, std::abs(matrix_element(m, r, s, t, v) - u(r * d + s, t * d + v)));
    CHECK(worst < 1e-12);
  }
  CHECK_THROWS_AS(matrix_element(ComplexMatrix::Identity(2, 2), 2, 0, 0, 0), Error);
}

TEST_CASE("controlled shift", "[naimark_bell]") {
  // Control on the second qubit, target the first.
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  // |t,c> -> |t + c, c>
  for (int t = 0; t < 2; ++t)
    for (int c = 0; c < 2; ++c) expected(((t + c) % 2) * 2 + c, t * 2 + c) = 1.0;
  CHECK(max_abs_diff(controlled_shift(2), expected) == 0.0);

  for (int d = 2; d <= 6; ++d) {
    ComplexMatrix cs = ComplexMatrix::Zero(d * d, d * d);
    for (int j = 0; j < d; ++j)
      cs += oracle::kron(oracle::power(oracle::shift(d).adjoint(), j),
                         oracle::basis(d, j) * oracle::basis(d, j).adjoint());
    CHECK(max_abs_diff(controlled_shift(d), cs) < 1e-15);
    CHECK(max_abs_diff(shift_decomposition(d), bell_change_of_basis(d)) < 1e-12);
  }
}

TEST_CASE("clock decomposition (control/target duality)", "[naimark_bell]") {
  const Fiducial q = builtin_fiducial("qubit-sic");
  CHECK(max_abs_diff(clock_decomposition(catalog_M("qubit")), fixtures::qubit_U(q.ket()(0), q.ket()(1))) < 1e-12);
  CHECK(max_abs_diff(clock_decomposition(ComplexMatrix::Identity(3, 3)), bell_change_of_basis(3)) < 1e-12);

  for (int d = 2; d <= 6; ++d) {
    ComplexMatrix cc = ComplexMatrix::Zero(d * d, d * d);
    for (int j = 0; j < d; ++j)
      cc += oracle::kron(oracle::basis(d, j) * oracle::basis(d, j).adjoint(),
                         oracle::power(oracle::clock(d).adjoint(), j));
    CHECK(max_abs_diff(controlled_clock(d), cc) < 1e-12);
  }

  Rng rng(31);
  for (int d = 2; d <= 5; ++d)
    for (int s = 0; s < 10; ++s) {
      const ComplexMatrix m = random_unitary(d, rng);
      CHECK(max_abs_diff(clock_decomposition(m), build_bell_naimark(m).u) < 1e-12);
    }
}

TEST_CASE("fiducial for each embedding", "[naimark_bell]") {
  const Fiducial q = builtin_fiducial("qubit-sic");
  const ComplexMatrix qm = catalog_M("qubit");
  CHECK((fiducial_for_embedding(qm, 0).ket() - q.ket()).norm() < 1e-15);

  const Fiducial second = fiducial_for_embedding(qm, 1);
  Ket expected(2);
  expected << -std::conj(q.ket()(1)), std::conj(q.ket()(0));
  CHECK((second.ket() - expected).norm() < 1e-15);
  CHECK(sic_report(second) < 1e-12);
  CHECK(second.label() == "row-1");

  const Fiducial e0 = fiducial_for_embedding(catalog_M("hesse"), 1);
  Ket basis = Ket::Zero(3);
  basis(0) = 1.0;
  CHECK((e0.ket() - basis).norm() < 1e-15);
  const ICReport ic = is_informationally_complete(e0);
  CHECK_FALSE(ic.informationally_complete);
  CHECK(ic.witness == WHIndex(3, 1, 0));

  CHECK_THROWS_MATCHES(fiducial_for_embedding(qm, 2), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.code() == ErrorCode::IndexOutOfRange; }));
}

TEST_CASE("embedding fiducials are orthonormal and reproduce the statistics", "[naimark_bell][property]") {
  Rng rng(55);
  for (int d = 2; d <= 6; ++d)
    for (int s = 0; s < 5; ++s) {
      const ComplexMatrix m = random_unitary(d, rng);
      const NaimarkExtension ext = build_bell_naimark(m);
      ComplexMatrix kets(d, d);
      const Ket psi = random_ket(d, rng);
      for (int i = 0; i < d; ++i) {
        const Fiducial fi = fiducial_for_embedding(m, i);
        kets.col(i) = fi.ket();
        const auto p = measure_probabilities(ext, psi, i).probs;
        const auto o = oracle::probabilities(fi.ket(), psi);
        for (std::size_t a = 0; a < p.size(); ++a) CHECK(std::abs(p[a] - o[a]) < 1e-10);
      }
      CHECK(max_abs_diff(kets.adjoint() * kets, ComplexMatrix::Identity(d, d)) < 1e-12);
    }
}

TEST_CASE("Bell amplitude law", "[naimark_bell][property]") {
  Rng rng(66);
  for (int d = 2; d <= 6; ++d)
    for (int s = 0; s < 10; ++s) {
      const Ket psi = random_ket(d, rng);
      const Ket phi = random_ket(d, rng);
      const Ket amps = bell_amplitudes(psi, phi);
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          const Ket prod = oracle::kron(psi, phi.conjugate());
          const Complex lhs = oracle::bell_vector(d, j, k).dot(prod);
          const Complex rhs = (oracle::displacement(d, j, k) * phi).dot(psi) / std::sqrt(d);
          CHECK(std::abs(lhs - rhs) < 1e-12);
          CHECK(std::abs(amps(j * d + k) - rhs) < 1e-12);
        }
    }
}
