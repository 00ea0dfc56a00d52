#include "naimark/fiducials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "naimark/error.hpp"

namespace naimark {

namespace {

// Eigenvalues of the frame Gram below this fraction of the largest one count
// as zero when computing the span dimension.
constexpr double kRelativeRankTol = 1e-9;

Ket qubit_sic() {
  const double s3 = std::sqrt(3.0);
  Ket v(2);
  v << std::sqrt(3.0 + s3),
      std::polar(1.0, std::numbers::pi / 4) * std::sqrt(3.0 - s3);
  return v / std::sqrt(6.0);
}

Ket hesse(double sign) {
  Ket v(3);
  v << 0.0, 1.0, sign;
  return v / std::sqrt(2.0);
}

Ket ququart_sic() {
  const double s5 = std::sqrt(5.0);
  const double alpha = std::sqrt(2.0 + s5);
  const double norm = std::sqrt((1.0 - 1.0 / s5) / 8.0);
  const Complex e = std::polar(1.0, -std::numbers::pi / 4);
  const Complex i{0.0, 1.0};
  Ket v(4);
  v << e + 1.0, -i * (alpha * e + 1.0), e - 1.0, i * (alpha * e - 1.0);
  return norm * v;
}

}  // namespace

Fiducial Fiducial::from_ket(Ket ket, std::string label, double tol) {
  if (ket.size() < 1) {
    throw Error(ErrorCode::InvalidDimension, "fiducial must have dim >= 1");
  }
  const double norm = ket.norm();
  if (std::abs(norm - 1.0) > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ket is not normalized (norm = " << norm << ")";
    throw Error(ErrorCode::InvalidInput, msg.str());
  }
  return Fiducial(std::move(ket), std::move(label));
}

std::vector<CatalogEntry> fiducial_catalog() {
  return {{2, "qubit-sic"}, {3, "hesse"}, {3, "hesse-partner"}, {4, "ququart-sic"}};
}

Fiducial builtin_fiducial(int d, const std::string& label) {
  if (d == 2 && label == "qubit-sic") return Fiducial(qubit_sic(), label);
  if (d == 3 && label == "hesse") return Fiducial(hesse(-1.0), label);
  if (d == 3 && label == "hesse-partner") return Fiducial(hesse(1.0), label);
  if (d == 4 && label == "ququart-sic") return Fiducial(ququart_sic(), label);
  throw Error(ErrorCode::CatalogMiss,
              "no fiducial '" + label + "' in dimension " + std::to_string(d));
}

Fiducial builtin_fiducial(const std::string& label) {
  for (const auto& entry : fiducial_catalog()) {
    if (entry.label == label) return builtin_fiducial(entry.dim, label);
  }
  throw Error(ErrorCode::CatalogMiss, "no fiducial '" + label + "'");
}

double WHFrame::identity_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const auto& v : vectors) sum += v * v.adjoint();
  sum /= static_cast<double>(dim);
  return max_abs_diff(sum, ComplexMatrix::Identity(dim, dim));
}

ComplexMatrix WHFrame::gram() const {
  const auto n = static_cast<Eigen::Index>(vectors.size());
  ComplexMatrix g(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) g(a, b) = vectors[a].dot(vectors[b]);
  return g;
}

WHFrame wh_orbit(const Fiducial& phi) {
  const int d = phi.dim();
  WHFrame frame{d, {}};
  frame.vectors.reserve(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      frame.vectors.push_back(displacement(d, j, k) * phi.ket());
  return frame;
}

Eigen::MatrixXd frame_operator_gram(const WHFrame& frame) {
  // tr(E_a E_b) = |<phi_a|phi_b>|^2 / d^2
  const ComplexMatrix g = frame.gram();
  const double scale = 1.0 / (static_cast<double>(frame.dim) * frame.dim);
  return g.cwiseAbs2() * scale;
}

ICReport is_informationally_complete(const Fiducial& phi, double tol) {
  const int d = phi.dim();
  const Ket& v = phi.ket();

  WHIndex witness(d, 0, 0);
  double min_overlap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const double overlap =
          std::abs(v.dot(displacement(d, j, k).adjoint() * v));
      if (overlap < min_overlap) {
        min_overlap = overlap;
        witness = WHIndex(d, j, k);
      }
    }
  }

  const Eigen::MatrixXd g = frame_operator_gram(wh_orbit(phi));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "frame Gram eigensolver failed");
  }
  const auto& ev = eig.eigenvalues();
  const double cutoff = kRelativeRankTol * ev.cwiseAbs().maxCoeff();
  const int rank = static_cast<int>((ev.array() > cutoff).count());

  return ICReport{rank == d * d, min_overlap > tol, witness, min_overlap, rank};
}

double sic_report(const Fiducial& phi) {
  const int d = phi.dim();
  const ComplexMatrix g = wh_orbit(phi).gram();
  const double off = 1.0 / (d + 1.0);
  double worst = 0.0;
  for (Eigen::Index a = 0; a < g.rows(); ++a) {
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      const double target = a == b ? 1.0 : off;
      worst = std::max(worst, std::abs(std::norm(g(a, b)) - target));
    }
  }
  return worst;
}

std::vector<double> compound_sic_report(const ComplexMatrix& m, double tol) {
  const double residual = unitarity_residual(m);
  if (!(residual <= tol)) {
    throw Error(ErrorCode::InvalidInput,
                "compound_sic_report: M is not unitary (residual " +
                    std::to_string(residual) + ")");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Ket row = m.row(i).adjoint();
    out.push_back(sic_report(Fiducial::from_ket(row, "row", tol)));
  }
  return out;
}

}  // namespace naimark
