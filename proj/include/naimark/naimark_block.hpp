#pragma once

// Block-circulant Naimark extension of a rank-one WH covariant POVM.
//
// Given a d x d unitary M whose first row is <phi|, the d^2 x d^2 unitary
//
//   U = [ S_0     S_1  ...  S_{d-1} ]
//       [ S_{d-1} S_0  ...  S_{d-2} ]
//       [ ...                       ]
//
// with S_q = F^dagger |q><q| M^T realizes the POVM on inputs embedded as
// |psi, 0>. Block (r, t) of U depends only on (t - r) mod d. The 1/sqrt(d)
// normalization lives inside S_q (through F^dagger).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naimark/fiducials.hpp"
#include "naimark/wh_core.hpp"

namespace naimark {

enum class Construction { Block, Bell, Clock };

std::string_view to_string(Construction c);

struct NaimarkExtension {
  int dim;
  ComplexMatrix m;
  ComplexMatrix u;
  /// U_j = F^dagger Z^{-j} M^T, j = 0..d-1.
  std::vector<ComplexMatrix> diag_blocks;
  Construction provenance;
};

/// Deterministic unitary completion with <0|M = <phi|. The standard basis
/// vector with the largest overlap against phi is dropped; the remaining ones
/// are Gram-Schmidt orthonormalized, in index order, against row 0.
ComplexMatrix complete_unitary_M(const Fiducial& phi);

/// Labels "qubit", "hesse", "ququart".
std::vector<std::string> catalog_M_labels();
ComplexMatrix catalog_M(const std::string& label);
/// The catalog M paired with a catalog fiducial label, if one exists
/// ("qubit-sic" -> "qubit", "hesse" -> "hesse", "ququart-sic" -> "ququart").
std::optional<std::string> catalog_M_for_fiducial(const std::string& fiducial_label);

/// S_k = |f_k><m_k| with |f_k> = F^dagger|k>, <m_k| = <k|M^T.
ComplexMatrix block_S(const ComplexMatrix& m, int k);
std::vector<ComplexMatrix> all_blocks_S(const ComplexMatrix& m);

/// Lays out blocks as a block-circulant matrix with first block-row
/// [S_0 S_1 ... S_{d-1}].
ComplexMatrix block_circulant(const std::vector<ComplexMatrix>& first_row);

/// Builds U from M. Throws InvalidInput if M is not unitary within tol.
NaimarkExtension assemble_U(const ComplexMatrix& m, double tol = kPhysicalTol);

/// Closed form F^dagger Z^{-j} M^T.
std::vector<ComplexMatrix> diagonal_blocks(const ComplexMatrix& m);
/// Circulant-eigenvalue route sum_k omega^{-jk} S_k.
std::vector<ComplexMatrix> diagonal_blocks_from_S(const std::vector<ComplexMatrix>& blocks);

/// (F^dagger (x) I) diag(U_0, ..., U_{d-1}) (F (x) I).
ComplexMatrix reassemble_from_blocks(const std::vector<ComplexMatrix>& blocks);

/// max_k || sum_j S_j^dagger S_{j+k} - delta_{k0} I ||_max.
double verify_block_constraints(const std::vector<ComplexMatrix>& blocks);

/// Max deviation of U from invariance under block shift (r,t) -> (r+1,t+1).
/// U must be (d*d) x (d*d).
double block_circulant_residual(const ComplexMatrix& u, int d);

/// Blocks S_0..S_{d-1} read off the first block-row of U.
std::vector<ComplexMatrix> first_block_row(const ComplexMatrix& u, int d);

/// Recovers M from a candidate U by projecting each S_k onto the F^dagger|k>
/// column space. `residual` receives the max deviation of S_k from the outer
/// product form |f_k><m_k|.
ComplexMatrix implied_M(const ComplexMatrix& u, int d, double* residual = nullptr);

}  // namespace naimark
