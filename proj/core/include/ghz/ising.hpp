#pragma once

#include "ghz/chain.hpp"
#include "ghz/linalg.hpp"

namespace ghz {

/// H0 = sum_n Z_n Z_{n+1} over the N-1 bonds of the open chain.
/// Diagonal in the computational basis; site 1 is the most significant bit.
Operator build_drift(const ChainSpec& spec);

/// H0 with per-bond weights (1 + delta_n), used for disordered chains.
/// `deltas` has one entry per bond (size N-1).
Operator build_drift_disordered(const ChainSpec& spec, const VectorXd& deltas);

/// H1 = sum_n X_n; 0/1 entries, row sums N.
Operator build_control(const ChainSpec& spec);

/// X-parity M = prod_n X_n: the permutation i -> ~i (all bits flipped),
/// i.e. the anti-diagonal unit matrix.  Commutes with both H0 and H1.
Operator parity_operator(const ChainSpec& spec);

/// Diagonal of H0 as a vector (drift eigenvalues per bit string).
VectorXd drift_diagonal(const ChainSpec& spec);
VectorXd drift_diagonal_disordered(const ChainSpec& spec, const VectorXd& deltas);

/// y += f * H1 x without forming H1 (bit-flip structure).
void apply_control_accumulate(int n_sites, double f, const VectorXcd& x, VectorXcd& y);

}  // namespace ghz
