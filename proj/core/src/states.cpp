#include "ghz/states.hpp"

#include <cmath>

namespace ghz {

namespace {
constexpr double kNormTolerance = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;
}

QuantumState QuantumState::pure(VectorXcd psi, int block) {
  if (psi.size() < 1) throw validation_error("QuantumState: empty vector");
  if (std::abs(psi.norm() - 1.0) > kNormTolerance) throw validation_error("QuantumState: pure state not normalized");
  QuantumState s;
  s.kind_ = Kind::pure;
  s.vec_ = std::move(psi);
  s.block_ = block;
  return s;
}

QuantumState QuantumState::density(MatrixXcd rho, int block) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) throw validation_error("QuantumState: density matrix must be square");
  if (hermiticity_defect(rho) > 1e-10) throw validation_error("QuantumState: density matrix not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > kNormTolerance || std::abs(rho.trace().imag()) > kNormTolerance)
    throw validation_error("QuantumState: density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigenvalueFloor)
    throw validation_error("QuantumState: density matrix has a significantly negative eigenvalue");
  QuantumState s;
  s.kind_ = Kind::density;
  s.rho_ = std::move(rho);
  s.block_ = block;
  return s;
}

const VectorXcd& QuantumState::vector() const {
  if (!is_pure()) throw validation_error("QuantumState: not a pure state");
  return vec_;
}

const MatrixXcd& QuantumState::density_matrix() const {
  if (is_pure()) throw validation_error("QuantumState: not a density matrix");
  return rho_;
}

MatrixXcd QuantumState::as_density() const {
  if (is_pure()) return vec_ * vec_.adjoint();
  return rho_;
}

QuantumState ghz_state(const ChainSpec& spec, int k) {
  spec.validate();
  if (k < 1 || k > 4) throw validation_error("ghz_state: k must be in 1..4");
  const int n = spec.n_sites;
  const int dim = spec.dim();
  VectorXcd psi = VectorXcd::Zero(dim);
  const double amp = 1.0 / std::sqrt(2.0);
  if (k <= 2) {
    psi(0) = amp;
    psi(dim - 1) = (k == 1 ? amp : -amp);
  } else {
    // alternating bit strings 0101... and 1010..., site 1 = most significant bit
    int a = 0, b = 0;
    for (int site = 0; site < n; ++site) {
      const int bit = 1 << (n - 1 - site);
      if (site % 2 == 1) a |= bit;  // 0101...
      else b |= bit;                // 1010...
    }
    psi(a) = amp;
    psi(b) = (k == 3 ? amp : -amp);
  }
  return QuantumState::pure(std::move(psi));
}

QuantumState product_state(const ChainSpec& spec, int sign) {
  spec.validate();
  if (sign != 1 && sign != -1) throw validation_error("product_state: sign must be +1 or -1");
  const int dim = spec.dim();
  const double amp = std::pow(2.0, -0.5 * spec.n_sites);
  VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) {
    const int parity = __builtin_popcount(static_cast<unsigned>(i)) & 1;
    psi(i) = (sign > 0 || parity == 0) ? amp : -amp;
  }
  return QuantumState::pure(std::move(psi));
}

double fidelity(const VectorXcd& psi, const VectorXcd& target) {
  if (psi.size() != target.size()) throw validation_error("fidelity: dimension mismatch");
  const double f = std::norm(target.dot(psi));
  return std::clamp(f, 0.0, 1.0);
}

double fidelity(const QuantumState& state, const QuantumState& target) {
  if (!target.is_pure()) throw validation_error("fidelity: target must be pure");
  if (state.dim() != target.dim()) throw validation_error("fidelity: dimension mismatch");
  const VectorXcd& t = target.vector();
  if (state.is_pure()) return fidelity(state.vector(), t);
  const complexd f = t.dot(state.density_matrix() * t);
  if (std::abs(f.imag()) > 1e-9) throw numerical_error("fidelity: <t|rho|t> has a non-negligible imaginary part");
  return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace ghz
