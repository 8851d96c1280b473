#include "ghz/spectral.hpp"

#include <cmath>

namespace ghz {

namespace {

MatrixXcd full_hamiltonian(const ChainSpec& spec, double f) {
  MatrixXcd h = build_control(spec).matrix() * f;
  h.diagonal() += drift_diagonal(spec).cast<complexd>();
  return spec.coupling * h;
}

struct ThermalSpectral {
  Eigensystem es;
  VectorXd weights;  // Boltzmann, normalized
};

ThermalSpectral thermal_spectral(const ChainSpec& spec, double f0, double temperature) {
  if (!(temperature > 0.0)) throw validation_error("thermal_state: T must be > 0 (use ground_state for T = 0)");
  ThermalSpectral ts;
  ts.es = eigh(full_hamiltonian(spec, f0));
  const VectorXd& e = ts.es.eigenvalues;
  const double e_min = e.minCoeff();
  ts.weights = ((e.array() - e_min) / (-temperature)).exp();
  ts.weights /= ts.weights.sum();
  return ts;
}

}  // namespace

GroundStateReport ground_state_of(const MatrixXcd& h) {
  Eigensystem es = eigh(h);
  const int dim = static_cast<int>(es.eigenvalues.size());
  GroundStateReport report;
  report.energy = es.eigenvalues(0);
  report.gap = dim > 1 ? es.eigenvalues(1) - es.eigenvalues(0) : 0.0;
  report.degenerate = dim > 1 && report.gap < kDegeneracyTolerance;
  VectorXcd psi = es.eigenvectors.col(0);
  fix_vector_phase(psi);
  psi.normalize();
  report.state = QuantumState::pure(std::move(psi));
  return report;
}

GroundStateReport ground_state(const ChainSpec& spec, double f) {
  return ground_state_of(full_hamiltonian(spec, f));
}

QuantumState thermal_state(const ChainSpec& spec, double f0, double temperature) {
  ThermalSpectral ts = thermal_spectral(spec, f0, temperature);
  MatrixXcd rho = ts.es.eigenvectors * ts.weights.cast<complexd>().asDiagonal() * ts.es.eigenvectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());  // clean roundoff
  rho /= rho.trace().real();
  return QuantumState::density(std::move(rho));
}

double thermal_ground_population(const ChainSpec& spec, double f0, double temperature) {
  ThermalSpectral ts = thermal_spectral(spec, f0, temperature);
  // Degenerate ground levels would make "the" ground population ambiguous;
  // with f0 != 0 the ground state of H_f(0) is unique.
  return ts.weights(0);
}

}  // namespace ghz
