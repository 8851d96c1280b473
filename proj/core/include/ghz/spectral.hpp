#pragma once

#include "ghz/chain.hpp"
#include "ghz/ising.hpp"
#include "ghz/states.hpp"

namespace ghz {

inline constexpr double kDegeneracyTolerance = 1e-9;  // absolute, units of |J|

struct GroundStateReport {
  QuantumState state;   // pure; phase convention: largest entry real positive
  double energy = 0.0;  // eps_1
  double gap = 0.0;     // eps_2 - eps_1
  bool degenerate = false;
};

/// Ground state of J*(H0 + f*H1) on the full space.  Flags (rather than
/// resolves) a degenerate ground level; the returned vector is then an
/// arbitrary element of the ground manifold and should not be used as
/// "the" ground state.
GroundStateReport ground_state(const ChainSpec& spec, double f);

/// Same, for an explicit Hermitian matrix (e.g. a block restriction).
GroundStateReport ground_state_of(const MatrixXcd& h);

/// Thermal state exp(-H_f(0)/T)/Z of the full-space Hamiltonian at
/// initial field f0.  T > 0 in units of |J| (k_B = 1); the spectrum is
/// shifted by its minimum before exponentiation.
QuantumState thermal_state(const ChainSpec& spec, double f0, double temperature);

/// Ground-level occupation <psi0(f0)| rho |psi0(f0)> of a thermal state,
/// computed from the same spectral data.
double thermal_ground_population(const ChainSpec& spec, double f0, double temperature);

}  // namespace ghz
