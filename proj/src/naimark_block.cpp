#include "naimark/naimark_block.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "naimark/error.hpp"

namespace naimark {

namespace {

void require_unitary(const ComplexMatrix& m, double tol, const char* who) {
  const double r = unitarity_residual(m);
  if (!(r <= tol)) {
    throw Error(ErrorCode::InvalidInput, std::string(who) +
                                             ": M is not unitary (residual " +
                                             std::to_string(r) + ")");
  }
}

}  // namespace

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::Block:
      return "block-construction";
    case Construction::Bell:
      return "bell-construction";
    case Construction::Clock:
      return "clock-construction";
  }
  return "unknown";
}

ComplexMatrix complete_unitary_M(const Fiducial& phi) {
  const int d = phi.dim();
  const Ket row0 = phi.ket().conjugate();

  Eigen::Index dropped = 0;
  phi.ket().cwiseAbs().maxCoeff(&dropped);

  // Rows are stored as columns of `basis` (as kets |m_i>) until the end.
  ComplexMatrix basis(d, d);
  basis.col(0) = phi.ket();
  int filled = 1;
  for (int e = 0; e < d; ++e) {
    if (e == dropped) continue;
    Ket v = Ket::Unit(d, e);
    for (int r = 0; r < filled; ++r) v -= basis.col(r).dot(v) * basis.col(r);
    const double n = v.norm();
    if (n < 1e-8) {
      throw Error(ErrorCode::NumericalFailure,
                  "complete_unitary_M: degenerate completion");
    }
    basis.col(filled++) = v / n;
  }
  ComplexMatrix m = basis.adjoint();
  m.row(0) = row0.transpose();
  return m;
}

std::vector<std::string> catalog_M_labels() { return {"qubit", "hesse", "ququart"}; }

ComplexMatrix catalog_M(const std::string& label) {
  const Complex i{0.0, 1.0};
  if (label == "qubit") {
    const Ket phi = builtin_fiducial(2, "qubit-sic").ket();
    ComplexMatrix m(2, 2);
    m << std::conj(phi(0)), std::conj(phi(1)), -phi(1), phi(0);
    return m;
  }
  if (label == "hesse") {
    const double s2 = std::sqrt(2.0);
    ComplexMatrix m(3, 3);
    m << 0, 1, -1, s2, 0, 0, 0, 1, 1;
    return m / s2;
  }
  if (label == "ququart") {
    const double s5 = std::sqrt(5.0);
    const double a = std::sqrt(2.0 + s5);
    const double norm = std::sqrt((1.0 - 1.0 / s5) / 8.0);
    ComplexMatrix first(4, 4);
    ComplexMatrix second(4, 4);
    // clang-format off
    first <<  1, i * a,  1, -i * a,
             -1, i,     -1, -i,
              a, -i,     a,  i,
             -1, -i,    -1,  i;
    second << 1, i,      -1, i,
             -a, i,       a, i,
             -1, i,       1, i,
              1, i * a,  -1, i * a;
    // clang-format on
    return norm * (std::polar(1.0, std::numbers::pi / 4) * first + second);
  }
  throw Error(ErrorCode::CatalogMiss, "no catalog M '" + label + "'");
}

std::optional<std::string> catalog_M_for_fiducial(const std::string& fiducial_label) {
  if (fiducial_label == "qubit-sic") return "qubit";
  if (fiducial_label == "hesse") return "hesse";
  if (fiducial_label == "ququart-sic") return "ququart";
  return std::nullopt;
}

ComplexMatrix block_S(const ComplexMatrix& m, int k) {
  const auto d = static_cast<int>(m.rows());
  if (m.cols() != d) throw Error(ErrorCode::InvalidInput, "block_S: M not square");
  if (k < 0 || k >= d) {
    throw Error(ErrorCode::IndexOutOfRange, "block_S: k = " + std::to_string(k));
  }
  const Ket f = fourier(d).adjoint().col(k);
  // <m_k| = <k|M^T, i.e. column k of M laid out as a row.
  return f * m.col(k).transpose();
}

std::vector<ComplexMatrix> all_blocks_S(const ComplexMatrix& m) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int k = 0; k < m.rows(); ++k) out.push_back(block_S(m, k));
  return out;
}

ComplexMatrix block_circulant(const std::vector<ComplexMatrix>& first_row) {
  const auto d = static_cast<int>(first_row.size());
  if (d == 0) throw Error(ErrorCode::InvalidInput, "block_circulant: no blocks");
  const auto b = first_row.front().rows();
  for (const auto& s : first_row) {
    if (s.rows() != b || s.cols() != b) {
      throw Error(ErrorCode::InvalidInput, "block_circulant: mismatched block sizes");
    }
  }
  ComplexMatrix u(d * b, d * b);
  for (int r = 0; r < d; ++r)
    for (int t = 0; t < d; ++t) u.block(r * b, t * b, b, b) = first_row[mod(t - r, d)];
  return u;
}

NaimarkExtension assemble_U(const ComplexMatrix& m, double tol) {
  require_unitary(m, tol, "assemble_U");
  const auto d = static_cast<int>(m.rows());
  return NaimarkExtension{d, m, block_circulant(all_blocks_S(m)), diagonal_blocks(m),
                          Construction::Block};
}

std::vector<ComplexMatrix> diagonal_blocks(const ComplexMatrix& m) {
  const auto d = static_cast<int>(m.rows());
  if (m.cols() != d || d < 1) {
    throw Error(ErrorCode::InvalidInput, "diagonal_blocks: M must be square");
  }
  const ComplexMatrix f_dag = fourier(d).adjoint();
  const ComplexMatrix m_t = m.transpose();
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXcd z_inv(d);
    for (int k = 0; k < d; ++k) z_inv(k) = root_of_unity_pow(d, -static_cast<long>(j) * k);
    out.push_back(f_dag * z_inv.asDiagonal() * m_t);
  }
  return out;
}

std::vector<ComplexMatrix> diagonal_blocks_from_S(const std::vector<ComplexMatrix>& blocks) {
  const auto d = static_cast<int>(blocks.size());
  if (d == 0) throw Error(ErrorCode::InvalidInput, "diagonal_blocks_from_S: no blocks");
  std::vector<ComplexMatrix> out;
  out.reserve(blocks.size());
  for (int j = 0; j < d; ++j) {
    ComplexMatrix sum = ComplexMatrix::Zero(blocks[0].rows(), blocks[0].cols());
    for (int k = 0; k < d; ++k) {
      sum += root_of_unity_pow(d, -static_cast<long>(j) * k) * blocks[k];
    }
    out.push_back(std::move(sum));
  }
  return out;
}

ComplexMatrix reassemble_from_blocks(const std::vector<ComplexMatrix>& blocks) {
  const auto d = static_cast<int>(blocks.size());
  if (d == 0) throw Error(ErrorCode::InvalidInput, "reassemble_from_blocks: no blocks");
  const auto b = blocks.front().rows();
  ComplexMatrix diag = ComplexMatrix::Zero(d * b, d * b);
  for (int j = 0; j < d; ++j) {
    if (blocks[j].rows() != b || blocks[j].cols() != b) {
      throw Error(ErrorCode::InvalidInput, "reassemble_from_blocks: mismatched block sizes");
    }
    diag.block(j * b, j * b, b, b) = blocks[j];
  }
  const ComplexMatrix id = ComplexMatrix::Identity(b, b);
  const ComplexMatrix f = fourier(d);
  return kron(f.adjoint(), id) * diag * kron(f, id);
}

double verify_block_constraints(const std::vector<ComplexMatrix>& blocks) {
  const auto d = static_cast<int>(blocks.size());
  if (d == 0) throw Error(ErrorCode::InvalidInput, "verify_block_constraints: no blocks");
  const auto b = blocks.front().rows();
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    ComplexMatrix sum = ComplexMatrix::Zero(b, b);
    for (int j = 0; j < d; ++j) sum += blocks[j].adjoint() * blocks[mod(j + k, d)];
    if (k == 0) sum -= ComplexMatrix::Identity(b, b);
    worst = std::max(worst, sum.cwiseAbs().maxCoeff());
  }
  return worst;
}

double block_circulant_residual(const ComplexMatrix& u, int d) {
  if (u.rows() != static_cast<Eigen::Index>(d) * d || u.cols() != u.rows()) {
    throw Error(ErrorCode::InvalidDimension, "block_circulant_residual: U is not d^2 x d^2");
  }
  double worst = 0.0;
  for (int r = 0; r < d; ++r) {
    for (int t = 0; t < d; ++t) {
      const int r1 = (r + 1) % d;
      const int t1 = (t + 1) % d;
      worst = std::max(worst, (u.block(r * d, t * d, d, d) - u.block(r1 * d, t1 * d, d, d))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
  }
  return worst;
}

std::vector<ComplexMatrix> first_block_row(const ComplexMatrix& u, int d) {
  if (u.rows() != static_cast<Eigen::Index>(d) * d || u.cols() != u.rows()) {
    throw Error(ErrorCode::InvalidDimension, "first_block_row: U is not d^2 x d^2");
  }
  std::vector<ComplexMatrix> out;
  for (int t = 0; t < d; ++t) out.push_back(u.block(0, t * d, d, d));
  return out;
}

ComplexMatrix implied_M(const ComplexMatrix& u, int d, double* residual) {
  const auto blocks = first_block_row(u, d);
  const ComplexMatrix f = fourier(d);
  const ComplexMatrix f_dag = f.adjoint();
  ComplexMatrix m_t(d, d);
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    // S_k = F^dagger|k> <m_k|  =>  <m_k| = <k|F S_k
    const Eigen::RowVectorXcd row = f.row(k) * blocks[k];
    m_t.row(k) = row;
    const ComplexMatrix rebuilt = f_dag.col(k) * row;
    worst = std::max(worst, (rebuilt - blocks[k]).cwiseAbs().maxCoeff());
  }
  if (residual != nullptr) *residual = worst;
  return m_t.transpose();
}

}  // namespace naimark
