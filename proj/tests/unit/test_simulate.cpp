#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "naimark/error.hpp"
#include "naimark/fiducials.hpp"
#include "naimark/naimark_bell.hpp"
#include "naimark/naimark_block.hpp"
#include "naimark/random.hpp"
#include "naimark/simulate.hpp"
#include "oracles.hpp"

using namespace naimark;

namespace {

Ket basis_ket(int d, int i) {
  Ket v = Ket::Zero(d);
  v(i) = 1.0;
  return v;
}

OutcomeDistribution born_oracle(const Fiducial& phi, const ComplexMatrix& rho) {
  const int d = phi.dim();
  std::vector<double> p;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const Ket v = oracle::displacement(d, j, k) * phi.ket();
      p.push_back(std::real(v.dot(rho * v)) / d);
    }
  return OutcomeDistribution::validated(d, p);
}

}  // namespace

TEST_CASE("embed", "[simulate]") {
  Ket psi(2);
  psi << Complex(0.6, 0), Complex(0, 0.8);
  Ket e0(4), e1(4);
  e0 << psi(0), 0, psi(1), 0;
  e1 << 0, psi(0), 0, psi(1);
  CHECK((embed(psi, 0, 2) - e0).norm() == 0.0);
  CHECK((embed(psi, 1, 2) - e1).norm() == 0.0);
  for (int i = 0; i < 3; ++i) CHECK((embed(basis_ket(3, 0), i, 3) - basis_ket(9, i)).norm() == 0.0);
  CHECK(std::abs(embed(psi, 1, 2).norm() - 1.0) < 1e-15);
  CHECK_THROWS_AS(embed(psi, 2, 2), Error);
  CHECK_THROWS_AS(embed(psi, 0, 3), Error);
}

TEST_CASE("direct probabilities", "[simulate]") {
  const Fiducial q = builtin_fiducial("qubit-sic");
  const auto self = direct_probabilities(q, q.ket());
  CHECK(std::abs(self.at(0, 0) - 0.5) < 1e-12);
  for (int a = 1; a < 4; ++a) CHECK(std::abs(self.probs[a] - 1.0 / 6.0) < 1e-12);

  const auto zero = direct_probabilities(q, basis_ket(2, 0));
  const double hi = (3 + std::sqrt(3.0)) / 12, lo = (3 - std::sqrt(3.0)) / 12;
  CHECK(std::abs(zero.at(0, 0) - hi) < 1e-12);
  CHECK(std::abs(zero.at(0, 1) - hi) < 1e-12);
  CHECK(std::abs(zero.at(1, 0) - lo) < 1e-12);
  CHECK(std::abs(zero.at(1, 1) - lo) < 1e-12);

  Ket perp(2);
  perp << -std::conj(q.ket()(1)), std::conj(q.ket()(0));
  CHECK(direct_probabilities(q, perp).at(0, 0) < 1e-15);

  CHECK_THROWS_AS(direct_probabilities(q, basis_ket(3, 0)), Error);
}

TEST_CASE("measure_probabilities", "[simulate]") {
  const Fiducial q = builtin_fiducial("qubit-sic");
  const auto via_u = measure_probabilities(assemble_U(catalog_M("qubit")), basis_ket(2, 0), 0);
  const auto direct = direct_probabilities(q, basis_ket(2, 0));
  for (int a = 0; a < 4; ++a) CHECK(std::abs(via_u.probs[a] - direct.probs[a]) < 1e-12);

  const Fiducial h = builtin_fiducial("hesse");
  const auto hp = measure_probabilities(assemble_U(catalog_M("hesse")), h.ket(), 0);
  CHECK(std::abs(hp.at(0, 0) - 1.0 / 3.0) < 1e-12);
  for (int a = 1; a < 9; ++a) CHECK(std::abs(hp.probs[a] - 1.0 / 12.0) < 1e-12);
  CHECK(std::abs(hp.total() - 1.0) < 1e-12);

  CHECK_THROWS_AS(measure_probabilities(assemble_U(catalog_M("hesse")), basis_ket(2, 0), 0), Error);
}

TEST_CASE("Naimark statistics equal the direct oracle", "[simulate][property]") {
  Rng rng(500);
  for (int d = 2; d <= 5; ++d)
    for (int s = 0; s < 50; ++s) {
      const ComplexMatrix m = random_unitary(d, rng);
      const Ket psi = random_ket(d, rng);
      const int i = static_cast<int>(rng() % static_cast<unsigned>(d));
      const auto oracle_p = oracle::probabilities(fiducial_for_embedding(m, i).ket(), psi);
      for (const auto& ext : {assemble_U(m), build_bell_naimark(m)}) {
        const auto p = measure_probabilities(ext, psi, i);
        CHECK(std::abs(p.total() - 1.0) < 1e-10);
        double worst = 0.0;
        for (std::size_t a = 0; a < p.probs.size(); ++a) worst = std::max(worst, std::abs(p.probs[a] - oracle_p[a]));
        CHECK(worst < 1e-10);
      }
    }
}

TEST_CASE("distribution validation", "[simulate]") {
  const auto ok = OutcomeDistribution::validated(2, {0.5, 0.5, -1e-15, 0.0});
  CHECK(ok.probs[2] == 0.0);
  CHECK_THROWS_AS(OutcomeDistribution::validated(2, {0.6, 0.5, -0.1, 0.0}), Error);
  CHECK_THROWS_AS(OutcomeDistribution::validated(2, {0.5, 0.4, 0.0, 0.0}), Error);
  CHECK_THROWS_AS(OutcomeDistribution::validated(2, {1.0}), Error);
}

TEST_CASE("sampling", "[simulate]") {
  const auto point = OutcomeDistribution::validated(2, {1.0, 0.0, 0.0, 0.0});
  const auto c = sample(point, 100, 1);
  CHECK(c.at(0, 0) == 100);
  CHECK(c.shots == 100);

  const auto uniform = OutcomeDistribution::validated(2, {0.25, 0.25, 0.25, 0.25});
  const std::uint64_t shots = 400000;
  const auto u = sample(uniform, shots, 42);
  const double sigma = std::sqrt(shots * 0.25 * 0.75);
  for (auto n : u.counts) CHECK(std::abs(static_cast<double>(n) - 1e5) < 5 * sigma);
  CHECK(std::accumulate(u.counts.begin(), u.counts.end(), std::uint64_t{0}) == shots);
  CHECK(sample(uniform, 1000, 9).counts == sample(uniform, 1000, 9).counts);
  CHECK(std::abs(u.frequencies().total() - 1.0) < 1e-12);
}

TEST_CASE("born probabilities match the frame formula", "[simulate]") {
  Rng rng(12);
  for (int d = 2; d <= 4; ++d) {
    const Fiducial phi = Fiducial::from_ket(random_ket(d, rng));
    const ComplexMatrix rho = random_density_matrix(d, 3, rng);
    const auto a = born_probabilities(phi, rho);
    const auto b = born_oracle(phi, rho);
    for (std::size_t i = 0; i < a.probs.size(); ++i) CHECK(std::abs(a.probs[i] - b.probs[i]) < 1e-12);
  }
}

TEST_CASE("tomography of pure states", "[simulate]") {
  Rng rng(13);
  std::vector<Fiducial> fids{builtin_fiducial("qubit-sic"), builtin_fiducial("hesse"),
                             builtin_fiducial("ququart-sic")};
  for (const auto& phi : fids)
    for (int s = 0; s < 5; ++s) {
      const Ket psi = random_ket(phi.dim(), rng);
      const DensityMatrix rho = tomography_reconstruct(phi, direct_probabilities(phi, psi));
      CHECK(max_abs_diff(rho.matrix, psi * psi.adjoint()) < 1e-8);
      CHECK(rho.min_eigenvalue > -1e-10);
      CHECK(std::isfinite(rho.gram_condition));
    }
}

TEST_CASE("tomography of the maximally mixed state", "[simulate]") {
  for (int d = 2; d <= 4; ++d) {
    Rng rng(d);
    const Fiducial phi = Fiducial::from_ket(random_ket(d, rng));
    const auto p = born_probabilities(phi, ComplexMatrix::Identity(d, d) / d);
    CHECK(max_abs_diff(tomography_reconstruct(phi, p).matrix, ComplexMatrix::Identity(d, d) / d) < 1e-8);
  }
}

TEST_CASE("tomography round trip for mixed states", "[simulate][property]") {
  Rng rng(14);
  for (const auto& e : fiducial_catalog()) {
    const Fiducial phi = builtin_fiducial(e.label);
    for (int s = 0; s < 10; ++s) {
      const ComplexMatrix rho = random_density_matrix(phi.dim(), 1 + s % 4, rng);
      const DensityMatrix back = tomography_reconstruct(phi, born_oracle(phi, rho));
      CHECK(max_abs_diff(back.matrix, rho) < 1e-8);
      CHECK(std::abs(back.matrix.trace() - Complex(1.0)) < 1e-10);
      CHECK(max_abs_diff(back.matrix, back.matrix.adjoint()) < 1e-10);
    }
  }
}

TEST_CASE("tomography rejects non-IC fiducials", "[simulate]") {
  const Fiducial zero = Fiducial::from_ket(basis_ket(2, 0));
  const auto p = direct_probabilities(zero, basis_ket(2, 0));
  try {
    tomography_reconstruct(zero, p);
    FAIL("expected RankDeficientFrame");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficientFrame);
    CHECK_THAT(std::string(e.what()), Catch::Matchers::ContainsSubstring("2 of 4"));
  }
  CHECK(oracle::povm_span(zero.ket()) == 2);
}

TEST_CASE("sampled tomography improves with shots", "[simulate][property]") {
  const Fiducial phi = builtin_fiducial("hesse");
  Rng rng(15);
  const ComplexMatrix rho = random_density_matrix(3, 2, rng);
  const auto exact = born_oracle(phi, rho);
  std::vector<double> medians;
  for (std::uint64_t shots : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    std::vector<double> errs;
    for (std::uint64_t seed = 0; seed < 9; ++seed) {
      const auto freq = sample(exact, shots, seed).frequencies();
      errs.push_back(max_abs_diff(tomography_reconstruct(phi, freq).matrix, rho));
    }
    std::nth_element(errs.begin(), errs.begin() + 4, errs.end());
    medians.push_back(errs[4]);
  }
  for (std::size_t i = 1; i < medians.size(); ++i) CHECK(medians[i] < medians[i - 1]);
}
