#pragma once

// Outcome statistics of WH covariant POVMs: through a Naimark unitary, from
// the direct overlap formula, by finite sampling, and back to a state by
// linear inversion.

#include <cstdint>
#include <vector>

#include "naimark/fiducials.hpp"
#include "naimark/naimark_block.hpp"
#include "naimark/wh_core.hpp"

namespace naimark {

/// Probabilities of outcome (j,k) stored at j*d + k.
struct OutcomeDistribution {
  int dim = 0;
  std::vector<double> probs;

  double at(int j, int k) const { return probs[static_cast<std::size_t>(j * dim + k)]; }
  double total() const;

  /// Clamps entries in [-1e-14, 0) to zero; throws InvalidInput if an entry
  /// is more negative or the total is off by more than tol.
  static OutcomeDistribution validated(int d, std::vector<double> probs,
                                       double tol = kPhysicalTol);
};

struct OutcomeCounts {
  int dim = 0;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(int j, int k) const { return counts[static_cast<std::size_t>(j * dim + k)]; }
  /// counts / shots, as a distribution.
  OutcomeDistribution frequencies() const;
};

/// |psi, i>: amplitude psi_t at position t*d + i.
Ket embed(const Ket& psi, int i, int d);

/// P(j,k) = (1/d) |<phi_jk|psi>|^2.
OutcomeDistribution direct_probabilities(const Fiducial& phi, const Ket& psi);

/// P(j,k) = |<j,k| U |psi, i>|^2.
OutcomeDistribution measure_probabilities(const NaimarkExtension& ext, const Ket& psi, int i);

/// Multinomial sample; identical (dist, shots, seed) always give identical counts.
OutcomeCounts sample(const OutcomeDistribution& dist, std::uint64_t shots, std::uint64_t seed);

/// Density matrix with linear-inversion diagnostics.
struct DensityMatrix {
  int dim = 0;
  ComplexMatrix matrix;
  /// Smallest eigenvalue of the (Hermitian part of the) estimate; may be
  /// negative for sampled frequencies.
  double min_eigenvalue = 0.0;
  /// 2-norm condition number of the frame Gram system that was solved.
  double gram_condition = 0.0;
};

/// Finds rho with tr(rho E_jk) = P(j,k) by solving G x = p with
/// G_ab = tr(E_a E_b) and rho = sum_b x_b E_b. Throws RankDeficientFrame if the
/// orbit of phi does not span the operator space.
DensityMatrix tomography_reconstruct(const Fiducial& phi, const OutcomeDistribution& dist);

/// tr(rho E_jk) for every outcome; the forward model of tomography.
OutcomeDistribution born_probabilities(const Fiducial& phi, const ComplexMatrix& rho);

}  // namespace naimark
