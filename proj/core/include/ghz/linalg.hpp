#pragma once

#include <complex>
#include <functional>
#include <Eigen/Dense>

#include "ghz/errors.hpp"

namespace ghz {

using complexd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-12;

/// Dense complex square matrix with a Hermitian tag.  The tag is checked
/// at construction so downstream spectral code can rely on it.
class Operator {
 public:
  Operator() = default;

  static Operator hermitian(MatrixXcd m);
  static Operator general(MatrixXcd m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  bool is_hermitian() const { return hermitian_; }
  const MatrixXcd& matrix() const { return mat_; }
  MatrixXcd& matrix() { return mat_; }

 private:
  Operator(MatrixXcd m, bool herm) : mat_(std::move(m)), hermitian_(herm) {}
  MatrixXcd mat_;
  bool hermitian_ = false;
};

/// max |A_ij|
double max_abs(const MatrixXcd& a);

/// max |A_ij - conj(A_ji)|
double hermiticity_defect(const MatrixXcd& a);

struct Eigensystem {
  VectorXd eigenvalues;   // ascending
  MatrixXcd eigenvectors; // columns match eigenvalues
};

/// Full eigendecomposition of a Hermitian matrix.  Uses LAPACK
/// (dsyevd/zheevd) when built with it -- the real-symmetric fast path
/// matters for chain lengths above ~10 -- and Eigen otherwise.
Eigensystem eigh(const MatrixXcd& a);

/// Real-symmetric variant (input must be real; asserted cheaply).
struct EigensystemReal {
  VectorXd eigenvalues;
  MatrixXd eigenvectors;
};
EigensystemReal eigh_real(const MatrixXd& a);

/// Deterministic phase convention: scale each column so its
/// largest-magnitude entry is real and positive.
void fix_column_phases(MatrixXcd& v);
void fix_vector_phase(VectorXcd& v);

/// Lowest `count` eigenpairs of a Hermitian operator given only its
/// action, via Lanczos with full reorthogonalization.  Intended for
/// extremal eigenvalues of moderate-to-large dense blocks.
struct LanczosEigOptions {
  int max_iterations = 160;
  double tolerance = 1e-11;
};
struct LanczosEigResult {
  VectorXd eigenvalues;   // ascending, size = count
  MatrixXcd eigenvectors; // dim x count
  bool converged = false;
};
LanczosEigResult lanczos_lowest(
    const std::function<void(const VectorXcd&, VectorXcd&)>& apply, int dim,
    int count, const LanczosEigOptions& opts = {});

/// y = exp(-i * theta * H) v for Hermitian H given through its action.
/// Krylov evaluation of the spectral exponential: exact to roundoff for
/// converged subspaces and norm-preserving by construction.
VectorXcd expm_action(const std::function<void(const VectorXcd&, VectorXcd&)>& apply,
                      const VectorXcd& v, double theta, double norm_bound);

}  // namespace ghz
