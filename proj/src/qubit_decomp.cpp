#include "naimark/qubit_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "naimark/error.hpp"

namespace naimark {

namespace {

ComplexMatrix phase_gate(int k, bool dagger) {
  const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, dagger ? -angle : angle);
  return m;
}

void require_qubits(int n, const char* who) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidDimension,
                std::string(who) + " requires n >= 1, got " + std::to_string(n));
  }
}

std::vector<int> wire_range(int first, int count) {
  std::vector<int> w(static_cast<std::size_t>(count));
  std::iota(w.begin(), w.end(), first);
  return w;
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::R:
      return "R";
    case GateKind::CR:
      return "CR";
    case GateKind::SWAP:
      return "SWAP";
    case GateKind::Unitary:
      return "U";
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  if (name == "H") return GateKind::H;
  if (name == "R") return GateKind::R;
  if (name == "CR") return GateKind::CR;
  if (name == "SWAP") return GateKind::SWAP;
  if (name == "U") return GateKind::Unitary;
  throw Error(ErrorCode::InvalidCircuit, "unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::h(int wire) { return Gate{GateKind::H, 0, {wire}, false, {}}; }
Gate Gate::r(int k, int wire, bool dagger) { return Gate{GateKind::R, k, {wire}, dagger, {}}; }
Gate Gate::cr(int k, int control, int target, bool dagger) {
  return Gate{GateKind::CR, k, {control, target}, dagger, {}};
}
Gate Gate::swap(int a, int b) { return Gate{GateKind::SWAP, 0, {a, b}, false, {}}; }
Gate Gate::unitary(ComplexMatrix m, std::vector<int> wires) {
  return Gate{GateKind::Unitary, 0, std::move(wires), false, std::move(m)};
}

ComplexMatrix Gate::local_matrix() const {
  switch (kind) {
    case GateKind::H: {
      ComplexMatrix m(2, 2);
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    }
    case GateKind::R:
      return phase_gate(k, dagger);
    case GateKind::CR: {
      ComplexMatrix m = ComplexMatrix::Identity(4, 4);
      m.bottomRightCorner(2, 2) = phase_gate(k, dagger);
      return m;
    }
    case GateKind::SWAP: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    }
    case GateKind::Unitary:
      return matrix;
  }
  throw Error(ErrorCode::InvalidCircuit, "unknown gate kind");
}

void GateList::append(const GateList& other) {
  n_qubits = std::max(n_qubits, other.n_qubits);
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

void validate(const GateList& circuit) {
  if (circuit.n_qubits < 1 || circuit.n_qubits > 24) {
    throw Error(ErrorCode::InvalidCircuit,
                "n_qubits out of range: " + std::to_string(circuit.n_qubits));
  }
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const Gate& gate = circuit.gates[g];
    const std::string where = "gate " + std::to_string(g) + ": ";
    std::size_t expected = 0;
    switch (gate.kind) {
      case GateKind::H:
      case GateKind::R:
        expected = 1;
        break;
      case GateKind::CR:
      case GateKind::SWAP:
        expected = 2;
        break;
      case GateKind::Unitary:
        expected = gate.wires.size();
        if (expected == 0 || gate.matrix.rows() != (Eigen::Index{1} << expected) ||
            gate.matrix.cols() != gate.matrix.rows()) {
          throw Error(ErrorCode::InvalidCircuit, where + "matrix size does not match wires");
        }
        break;
    }
    if (gate.wires.size() != expected) {
      throw Error(ErrorCode::InvalidCircuit, where + "wrong number of wires");
    }
    if ((gate.kind == GateKind::R || gate.kind == GateKind::CR) && gate.k < 1) {
      throw Error(ErrorCode::InvalidCircuit, where + "R/CR require k >= 1");
    }
    for (std::size_t a = 0; a < gate.wires.size(); ++a) {
      const int w = gate.wires[a];
      if (w < 0 || w >= circuit.n_qubits) {
        throw Error(ErrorCode::InvalidCircuit, where + "wire " + std::to_string(w) +
                                                   " out of range");
      }
      for (std::size_t b = a + 1; b < gate.wires.size(); ++b) {
        if (gate.wires[b] == w) {
          throw Error(ErrorCode::InvalidCircuit, where + "repeated wire " + std::to_string(w));
        }
      }
    }
  }
}

void apply(const GateList& circuit, Ket& state) {
  validate(circuit);
  const int n = circuit.n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (state.size() != dim) {
    throw Error(ErrorCode::InvalidInput, "state size does not match circuit width");
  }
  for (const Gate& gate : circuit.gates) {
    const ComplexMatrix local = gate.local_matrix();
    const auto m = static_cast<int>(gate.wires.size());
    const Eigen::Index sub = Eigen::Index{1} << m;

    // offsets[b] = global index bits for local index b (wire 0 of the gate
    // is the local MSB).
    std::vector<Eigen::Index> offsets(static_cast<std::size_t>(sub), 0);
    Eigen::Index mask = 0;
    for (int a = 0; a < m; ++a) {
      const Eigen::Index bit = Eigen::Index{1} << (n - 1 - gate.wires[a]);
      mask |= bit;
      for (Eigen::Index b = 0; b < sub; ++b) {
        if ((b >> (m - 1 - a)) & 1) offsets[b] |= bit;
      }
    }

    Eigen::VectorXcd in(sub);
    for (Eigen::Index base = 0; base < dim; ++base) {
      if (base & mask) continue;
      for (Eigen::Index b = 0; b < sub; ++b) in(b) = state(base | offsets[b]);
      const Eigen::VectorXcd out = local * in;
      for (Eigen::Index b = 0; b < sub; ++b) state(base | offsets[b]) = out(b);
    }
  }
}

ComplexMatrix expand(const GateList& circuit) {
  validate(circuit);
  const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
  ComplexMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Ket column = Ket::Unit(dim, c);
    apply(circuit, column);
    out.col(c) = column;
  }
  return out;
}

GateList inverse(const GateList& circuit) {
  GateList out{circuit.n_qubits, {}};
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::R || g.kind == GateKind::CR) g.dagger = !g.dagger;
    if (g.kind == GateKind::Unitary) g.matrix = g.matrix.adjoint().eval();
    out.gates.push_back(std::move(g));
  }
  return out;
}

GateList transpose(const GateList& circuit) {
  // H, R, CR and SWAP are symmetric matrices.
  GateList out{circuit.n_qubits, {}};
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::Unitary) g.matrix = g.matrix.transpose().eval();
    out.gates.push_back(std::move(g));
  }
  return out;
}

GateList remap(const GateList& circuit, const std::vector<int>& mapping, int n_qubits) {
  if (static_cast<int>(mapping.size()) < circuit.n_qubits) {
    throw Error(ErrorCode::InvalidCircuit, "remap: mapping shorter than circuit width");
  }
  GateList out{n_qubits, {}};
  for (Gate g : circuit.gates) {
    for (int& w : g.wires) w = mapping.at(static_cast<std::size_t>(w));
    out.gates.push_back(std::move(g));
  }
  return out;
}

GateList repeat(const GateList& circuit, int times) {
  GateList out{circuit.n_qubits, {}};
  for (int i = 0; i < times; ++i) out.append(circuit);
  return out;
}

GateList qudit_Z_circuit(int n) {
  require_qubits(n, "qudit_Z_circuit");
  GateList out{n, {}};
  for (int j = 0; j < n; ++j) out.gates.push_back(Gate::r(j + 1, j));
  return out;
}

GateList qcz_circuit(int n, int control_wire, const std::vector<int>& target_wires,
                     int total_wires) {
  require_qubits(n, "qcz_circuit");
  if (static_cast<int>(target_wires.size()) != n) {
    throw Error(ErrorCode::InvalidCircuit, "qcz_circuit: expected " + std::to_string(n) +
                                               " target wires");
  }
  if (std::find(target_wires.begin(), target_wires.end(), control_wire) !=
      target_wires.end()) {
    throw Error(ErrorCode::InvalidCircuit, "qcz_circuit: control wire collides with a target");
  }
  if (total_wires <= 0) {
    total_wires = std::max(control_wire, *std::max_element(target_wires.begin(),
                                                           target_wires.end())) + 1;
  }
  GateList out{total_wires, {}};
  for (int j = 0; j < n; ++j) out.gates.push_back(Gate::cr(j + 1, control_wire, target_wires[j]));
  validate(out);
  return out;
}

GateList cz_qudit_circuit(int n) {
  require_qubits(n, "cz_qudit_circuit");
  const auto targets = wire_range(0, n);
  GateList out{2 * n, {}};
  // Control wire c_{n-j-1} carries weight 2^j.
  for (int j = 0; j < n; ++j) {
    const int control = n + (n - j - 1);
    out.append(repeat(qcz_circuit(n, control, targets, 2 * n), 1 << j));
  }
  return out;
}

GateList cx_qudit_circuit(int n) {
  require_qubits(n, "cx_qudit_circuit");
  const auto targets = wire_range(0, n);
  const GateList f = remap(qudit_fourier_circuit(n), targets, 2 * n);
  GateList out{2 * n, {}};
  out.append(f);
  out.append(cz_qudit_circuit(n));
  out.append(inverse(f));
  return out;
}

GateList qudit_fourier_circuit(int n) {
  require_qubits(n, "qudit_fourier_circuit");
  GateList out{n, {}};
  for (int i = 0; i < n; ++i) {
    out.gates.push_back(Gate::h(i));
    for (int j = i + 1; j < n; ++j) out.gates.push_back(Gate::cr(j - i + 1, j, i));
  }
  for (int i = 0; i < n / 2; ++i) out.gates.push_back(Gate::swap(i, n - 1 - i));
  return out;
}

namespace {

GateList naimark_tail(int n) {
  // controlled shift, then F^dagger on the ancilla
  const auto ancilla = wire_range(n, n);
  GateList out{2 * n, {}};
  out.append(inverse(cx_qudit_circuit(n)));
  out.append(remap(inverse(qudit_fourier_circuit(n)), ancilla, 2 * n));
  return out;
}

}  // namespace

GateList full_naimark_circuit(const ComplexMatrix& m, int n) {
  require_qubits(n, "full_naimark_circuit");
  const Eigen::Index d = Eigen::Index{1} << n;
  if (m.rows() != d || m.cols() != d) {
    throw Error(ErrorCode::InvalidInput, "full_naimark_circuit: M must be 2^n x 2^n");
  }
  GateList out{2 * n, {Gate::unitary(m.transpose(), wire_range(n, n))}};
  out.append(naimark_tail(n));
  return out;
}

GateList full_naimark_circuit(const GateList& m_circuit, int n) {
  require_qubits(n, "full_naimark_circuit");
  if (m_circuit.n_qubits != n) {
    throw Error(ErrorCode::InvalidInput, "full_naimark_circuit: M circuit must span n wires");
  }
  GateList out = remap(transpose(m_circuit), wire_range(n, n), 2 * n);
  out.append(naimark_tail(n));
  return out;
}

ComplexMatrix controlled_clock_power_sum(int d) {
  const ComplexMatrix z = clock_op(d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix power = ComplexMatrix::Identity(d, d);
  for (int m = 0; m < d; ++m) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(m, m) = 1.0;
    out += kron(power, p);
    power = power * z;
  }
  return out;
}

ComplexMatrix controlled_shift_power_sum(int d) {
  const ComplexMatrix x = shift_op(d);
  ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
  ComplexMatrix power = ComplexMatrix::Identity(d, d);
  for (int m = 0; m < d; ++m) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(m, m) = 1.0;
    out += kron(power, p);
    power = power * x;
  }
  return out;
}

int qubits_for_dimension(long d) {
  if (d < 2 || (d & (d - 1)) != 0) {
    throw Error(ErrorCode::UnsupportedDimension,
                "d = " + std::to_string(d) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((1L << n) < d) ++n;
  return n;
}

}  // namespace naimark
