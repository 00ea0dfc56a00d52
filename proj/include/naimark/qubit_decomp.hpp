#pragma once

// Qubit-level synthesis of qudit operations for d = 2^n.
//
// Wire convention: in a GateList over N qubits, wire 0 is the most
// significant bit of the basis index. A qudit carried by wires w_0..w_{n-1}
// uses w_0 as its most significant bit, so the two-register circuits (target
// qudit on wires 0..n-1, control qudit on wires n..2n-1) expand to matrices in
// the same target (x) control ordering used elsewhere in the library.
//
// Gate lists are stored in application order: gates[0] acts first. A product
// written right-to-left, A_2 A_1 A_0, becomes the list {A_0, A_1, A_2}.

#include <string>
#include <vector>

#include "naimark/wh_core.hpp"

namespace naimark {

enum class GateKind { H, R, CR, SWAP, Unitary };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

struct Gate {
  GateKind kind;
  /// Phase exponent for R/CR: R(k) = diag(1, exp(2 pi i / 2^k)).
  int k = 0;
  /// H, R: {target}; CR: {control, target}; SWAP: {a, b};
  /// Unitary: the wires the matrix acts on, most significant first.
  std::vector<int> wires;
  /// Use the adjoint of R/CR (conjugate phase).
  bool dagger = false;
  /// Only for GateKind::Unitary.
  ComplexMatrix matrix;

  static Gate h(int wire);
  static Gate r(int k, int wire, bool dagger = false);
  static Gate cr(int k, int control, int target, bool dagger = false);
  static Gate swap(int a, int b);
  static Gate unitary(ComplexMatrix m, std::vector<int> wires);

  /// The gate's own 2^w x 2^w matrix (w = wires.size()).
  ComplexMatrix local_matrix() const;
};

struct GateList {
  int n_qubits = 0;
  std::vector<Gate> gates;

  void append(const GateList& other);
};

/// Throws InvalidCircuit on out-of-range or repeated wires, k < 1 for R/CR,
/// or an opaque matrix whose size does not match its wire count.
void validate(const GateList& circuit);

/// Applies the circuit to a state of 2^n_qubits amplitudes in place.
void apply(const GateList& circuit, Ket& state);
/// Full 2^n x 2^n unitary.
ComplexMatrix expand(const GateList& circuit);

/// Adjoint circuit: reversed order, each gate replaced by its adjoint.
GateList inverse(const GateList& circuit);
/// Circuit for the transpose: reversed order, each gate transposed.
GateList transpose(const GateList& circuit);
/// Places every gate of `circuit` on wires `mapping[w]` of an n_qubits circuit.
GateList remap(const GateList& circuit, const std::vector<int>& mapping, int n_qubits);
/// gates repeated `times` times.
GateList repeat(const GateList& circuit, int times);

/// Clock Z on 2^n levels: prod_j R_{q_j}(j+1).
GateList qudit_Z_circuit(int n);
/// |0><0|_c (x) I + |1><1|_c (x) Z_{2^n} on the target wires.
/// `total_wires` <= 0 means max(wire) + 1.
GateList qcz_circuit(int n, int control_wire, const std::vector<int>& target_wires,
                     int total_wires = 0);
/// sum_m Z^m (x) |m><m| on 2n wires (target 0..n-1, control n..2n-1).
GateList cz_qudit_circuit(int n);
/// sum_m X^m (x) |m><m| on 2n wires.
GateList cx_qudit_circuit(int n);
/// Qudit Fourier transform on 2^n levels (H / CR ladder and reversal swaps).
GateList qudit_fourier_circuit(int n);

/// Full Naimark circuit U = (I (x) F^dagger)(sum_j X^{-j} (x) |j><j|)(I (x) M^T)
/// over 2n wires. M is given as a 2^n x 2^n matrix (used as one opaque gate).
GateList full_naimark_circuit(const ComplexMatrix& m, int n);
/// Same, with M supplied as an n-qubit circuit whose expansion is M.
GateList full_naimark_circuit(const GateList& m_circuit, int n);

/// Closed forms the circuits are checked against.
ComplexMatrix controlled_clock_power_sum(int d);  // sum_m Z^m (x) |m><m|
ComplexMatrix controlled_shift_power_sum(int d);  // sum_m X^m (x) |m><m|

/// n such that 2^n == d; throws UnsupportedDimension otherwise.
int qubits_for_dimension(long d);

}  // namespace naimark
