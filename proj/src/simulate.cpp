#include "naimark/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "naimark/error.hpp"

namespace naimark {

namespace {

constexpr double kClampDust = 1e-14;
constexpr double kRelativeRankTol = 1e-9;

void require_dims(const Fiducial& phi, const Ket& psi) {
  if (psi.size() != phi.dim()) {
    throw Error(ErrorCode::InvalidInput, "state dimension " + std::to_string(psi.size()) +
                                             " does not match fiducial dimension " +
                                             std::to_string(phi.dim()));
  }
}

}  // namespace

double OutcomeDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

OutcomeDistribution OutcomeDistribution::validated(int d, std::vector<double> probs, double tol) {
  if (d < 1 || probs.size() != static_cast<std::size_t>(d) * d) {
    throw Error(ErrorCode::InvalidInput, "distribution must have d^2 entries");
  }
  for (double& p : probs) {
    if (p < -kClampDust) {
      throw Error(ErrorCode::InvalidInput, "negative probability " + std::to_string(p));
    }
    p = std::max(p, 0.0);
  }
  OutcomeDistribution out{d, std::move(probs)};
  if (std::abs(out.total() - 1.0) > tol) {
    throw Error(ErrorCode::InvalidInput,
                "probabilities sum to " + std::to_string(out.total()));
  }
  return out;
}

OutcomeDistribution OutcomeCounts::frequencies() const {
  OutcomeDistribution out{dim, std::vector<double>(counts.size(), 0.0)};
  for (std::size_t a = 0; a < counts.size(); ++a) {
    out.probs[a] = static_cast<double>(counts[a]) / static_cast<double>(shots);
  }
  return out;
}

Ket embed(const Ket& psi, int i, int d) {
  if (psi.size() != d) throw Error(ErrorCode::InvalidInput, "embed: psi must have dim d");
  if (i < 0 || i >= d) {
    throw Error(ErrorCode::IndexOutOfRange, "embed: index " + std::to_string(i));
  }
  Ket out = Ket::Zero(static_cast<Eigen::Index>(d) * d);
  for (int t = 0; t < d; ++t) out(t * d + i) = psi(t);
  return out;
}

OutcomeDistribution direct_probabilities(const Fiducial& phi, const Ket& psi) {
  require_dims(phi, psi);
  const int d = phi.dim();
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      probs.push_back(std::norm((displacement(d, j, k) * phi.ket()).dot(psi)) / d);
  return OutcomeDistribution::validated(d, std::move(probs));
}

OutcomeDistribution measure_probabilities(const NaimarkExtension& ext, const Ket& psi, int i) {
  if (psi.size() != ext.dim) {
    throw Error(ErrorCode::InvalidInput, "measure_probabilities: state dimension mismatch");
  }
  const Ket out = ext.u * embed(psi, i, ext.dim);
  std::vector<double> probs(static_cast<std::size_t>(out.size()));
  for (Eigen::Index a = 0; a < out.size(); ++a) probs[a] = std::norm(out(a));
  return OutcomeDistribution::validated(ext.dim, std::move(probs));
}

OutcomeCounts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(dist.probs.begin(), dist.probs.end());
  OutcomeCounts out{dist.dim, shots, std::vector<std::uint64_t>(dist.probs.size(), 0)};
  for (std::uint64_t s = 0; s < shots; ++s) ++out.counts[pick(rng)];
  return out;
}

OutcomeDistribution born_probabilities(const Fiducial& phi, const ComplexMatrix& rho) {
  const int d = phi.dim();
  if (rho.rows() != d || rho.cols() != d) {
    throw Error(ErrorCode::InvalidInput, "born_probabilities: rho dimension mismatch");
  }
  const WHFrame frame = wh_orbit(phi);
  std::vector<double> probs;
  probs.reserve(frame.vectors.size());
  for (const Ket& v : frame.vectors) {
    probs.push_back(std::real(v.dot(rho * v)) / d);
  }
  return OutcomeDistribution::validated(d, std::move(probs));
}

DensityMatrix tomography_reconstruct(const Fiducial& phi, const OutcomeDistribution& dist) {
  const int d = phi.dim();
  if (dist.dim != d || dist.probs.size() != static_cast<std::size_t>(d) * d) {
    throw Error(ErrorCode::InvalidInput, "tomography_reconstruct: distribution dimension mismatch");
  }
  const WHFrame frame = wh_orbit(phi);
  const Eigen::MatrixXd g = frame_operator_gram(frame);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double smallest = sv(sv.size() - 1);
  const auto rank = static_cast<int>((sv.array() > kRelativeRankTol * largest).count());
  if (rank < d * d) {
    throw Error(ErrorCode::RankDeficientFrame, "frame spans " + std::to_string(rank) +
                                                   " of " + std::to_string(d * d) +
                                                   " operator dimensions");
  }
  if (!std::isfinite(largest / smallest)) {
    throw Error(ErrorCode::NumericalFailure, "singular frame Gram");
  }

  const Eigen::Map<const Eigen::VectorXd> p(dist.probs.data(),
                                            static_cast<Eigen::Index>(dist.probs.size()));
  const Eigen::VectorXd x = svd.solve(p);

  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (std::size_t a = 0; a < frame.vectors.size(); ++a) {
    const Ket& v = frame.vectors[a];
    rho += (x(static_cast<Eigen::Index>(a)) / d) * (v * v.adjoint());
  }

  const ComplexMatrix hermitian = (rho + rho.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian, Eigen::EigenvaluesOnly);
  return DensityMatrix{d, rho, eig.eigenvalues().minCoeff(), largest / smallest};
}

}  // namespace naimark
