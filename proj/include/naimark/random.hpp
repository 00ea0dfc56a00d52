#pragma once

// Seeded Haar-random states and unitaries for property checks.

#include <cstdint>
#include <random>

#include "naimark/wh_core.hpp"

namespace naimark {

using Rng = std::mt19937_64;

/// Haar-random unit vector (normalized complex Gaussian).
Ket random_ket(int d, Rng& rng);
/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal absorbed into Q.
ComplexMatrix random_unitary(int d, Rng& rng);
/// Convex combination of `n_pure` random pure states with random weights.
ComplexMatrix random_density_matrix(int d, int n_pure, Rng& rng);

}  // namespace naimark
