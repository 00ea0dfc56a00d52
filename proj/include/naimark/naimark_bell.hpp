#pragma once

// The same Naimark unitary read as a generalized Bell measurement:
// U = Dcal (I (x) M^T), where Dcal is the change to the Bell basis and M^T
// prepares the conjugated fiducial on the ancilla (second tensor factor).

#include "naimark/fiducials.hpp"
#include "naimark/naimark_block.hpp"
#include "naimark/wh_core.hpp"

namespace naimark {

NaimarkExtension build_bell_naimark(const ComplexMatrix& m, double tol = kPhysicalTol);

/// <r,s|U|t,u> = d^{-1/2} omega^{-s(t-r)} <u|M|t-r>.
Complex matrix_element(const ComplexMatrix& m, int r, int s, int t, int u);

/// sum_j X^{-j} (x) |j><j|, control on the second factor.
ComplexMatrix controlled_shift(int d);
/// (I (x) F^dagger) controlled_shift(d); equals bell_change_of_basis(d).
ComplexMatrix shift_decomposition(int d);

/// sum_j |j><j| (x) Z^{-j}, control on the first factor.
ComplexMatrix controlled_clock(int d);
/// [(F^dagger (x) F^dagger) controlled_clock(d) (F (x) I)] (I (x) M^T).
ComplexMatrix clock_decomposition(const ComplexMatrix& m);

/// |m_i> with <m_i| = <i|M: the fiducial realized when the input is embedded
/// as |psi, i>.
Fiducial fiducial_for_embedding(const ComplexMatrix& m, int i, double tol = kPhysicalTol);

/// Amplitudes <D_jk| (|psi> (x) |phi*>) for all (j,k), flattened j*d + k.
Ket bell_amplitudes(const Ket& psi, const Ket& phi);

}  // namespace naimark
