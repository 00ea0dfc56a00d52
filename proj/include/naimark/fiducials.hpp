#pragma once

// Fiducial states, their Weyl-Heisenberg orbits, and POVM-level checks.

#include <string>
#include <vector>

#include "naimark/wh_core.hpp"

namespace naimark {

/// A normalized state whose WH orbit defines a rank-one covariant POVM with
/// elements E_jk = (1/d) |phi_jk><phi_jk|.
class Fiducial {
 public:
  /// Throws InvalidInput (reporting the measured norm) if | ||ket|| - 1 | > tol.
  static Fiducial from_ket(Ket ket, std::string label = "custom",
                           double tol = kPhysicalTol);

  int dim() const noexcept { return static_cast<int>(ket_.size()); }
  const Ket& ket() const noexcept { return ket_; }
  const std::string& label() const noexcept { return label_; }

 private:
  friend Fiducial builtin_fiducial(int d, const std::string& label);

  Fiducial(Ket ket, std::string label)
      : ket_(std::move(ket)), label_(std::move(label)) {}

  Ket ket_;
  std::string label_;
};

struct CatalogEntry {
  int dim;
  std::string label;
};

/// Known fiducials: (2,"qubit-sic"), (3,"hesse"), (3,"hesse-partner"),
/// (4,"ququart-sic").
std::vector<CatalogEntry> fiducial_catalog();
Fiducial builtin_fiducial(int d, const std::string& label);
/// Label-only lookup; the label is unique across dimensions.
Fiducial builtin_fiducial(const std::string& label);

/// The d^2 orbit vectors D_jk |phi>, stored at index j*d + k.
struct WHFrame {
  int dim;
  std::vector<Ket> vectors;

  const Ket& at(int j, int k) const { return vectors[j * dim + k]; }
  /// ||(1/d) sum |phi_jk><phi_jk| - I||_max.
  double identity_residual() const;
  /// Gram matrix G[a][b] = <v_a|v_b>.
  ComplexMatrix gram() const;
};

WHFrame wh_orbit(const Fiducial& phi);

/// Real d^2 x d^2 matrix tr(E_a E_b) of the POVM elements; its rank is the
/// dimension of their span.
Eigen::MatrixXd frame_operator_gram(const WHFrame& frame);

struct ICReport {
  /// Authoritative verdict: Gram rank == d^2.
  bool informationally_complete;
  /// Sufficient condition min |<phi|D_jk^dagger|phi>| > tol.
  bool overlaps_nonvanishing;
  /// First (j,k) in lexicographic order attaining the minimum overlap.
  WHIndex witness;
  double witness_overlap;
  int gram_rank;
};

ICReport is_informationally_complete(const Fiducial& phi,
                                     double tol = kPhysicalTol);

/// max over pairs of | |<phi_a|phi_b>|^2 - (d delta_ab + 1)/(d+1) |.
double sic_report(const Fiducial& phi);

/// One sic_report per row of a unitary M; row i is read as <m_i|.
/// Throws InvalidInput if M is not unitary within tol.
std::vector<double> compound_sic_report(const ComplexMatrix& m,
                                        double tol = kPhysicalTol);

}  // namespace naimark
