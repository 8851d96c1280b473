#pragma once

#include <optional>
#include <vector>

#include "ghz/ising.hpp"
#include "ghz/states.hpp"

namespace ghz {

/// Simultaneous block-diagonalization of two Hermitian operators.
///
/// The rotation's columns span the invariant subspaces, one contiguous
/// column range per block.  Within each block the basis is canonical:
/// it diagonalizes the block restriction of the *control* operator
/// (eigenvalues ascending, largest-magnitude entry of each column made
/// real positive), so restricted operators are reproducible across runs.
/// Blocks are ordered by size, then by smallest column index of the
/// eigenbasis that produced them.
struct SubspaceDecomposition {
  MatrixXcd rotation;                       // dim x dim unitary
  std::vector<int> block_offsets;           // size block_count()+1, into rotation columns
  std::vector<MatrixXcd> restricted_drift;  // per block, canonical basis
  std::vector<MatrixXcd> restricted_control;
  double alpha = 2.0, beta = 3.0, delta = 1e-8;  // parameters actually used
  bool eigenbasis_degenerate = false;  //(alpha,beta) retries exhausted with a near-degenerate spectrum

  int dim() const { return static_cast<int>(rotation.rows()); }
  int block_count() const { return static_cast<int>(block_offsets.size()) - 1; }
  int block_dim(int b) const { return block_offsets.at(b + 1) - block_offsets.at(b); }
  Eigen::Block<const MatrixXcd> block_basis(int b) const {
    return rotation.block(0, block_offsets.at(b), rotation.rows(), block_dim(b));
  }
  std::vector<int> block_dims() const;
};

struct DecomposeOptions {
  double alpha = 2.0;
  double beta = 3.0;
  double delta = 1e-8;
};

/// Eigenbasis/adjacency block decomposition: take the eigenbasis V of
/// alpha*H0 + beta*H1, connect columns i,j whenever a rotated matrix
/// element of H0 or H1 exceeds delta, and read blocks off the connected
/// components.  Near-degenerate spectra are retried with the fallback
/// pairs (1, sqrt 2) and (pi/3, 1).  When both operators commute with the
/// bit-complement permutation (the X-parity of the Ising chain), each
/// parity sector is processed separately, which removes cross-sector
/// accidental degeneracies and halves the eigenproblem.
SubspaceDecomposition decompose(const Operator& h0, const Operator& h1,
                                const DecomposeOptions& opts = {});

/// B^dag op B on the canonical basis B of `block`.
Operator restrict_operator(const Operator& op, const SubspaceDecomposition& decomp, int block);

/// Project a full-space pure state into a block (not renormalized).
VectorXcd project_to_block(const VectorXcd& psi, const SubspaceDecomposition& decomp, int block);
/// Lift a block vector back to the full space.
VectorXcd embed_from_block(const VectorXcd& phi, const SubspaceDecomposition& decomp, int block);

struct StateLocation {
  int block = -1;        // maximal squared projection
  double leakage = 1.0;  // 1 - that projection
  bool confined = false; // leakage <= membership_tolerance
};
StateLocation locate_state(const QuantumState& state, const SubspaceDecomposition& decomp,
                           double membership_tolerance = 1e-8);

struct LieClosureOptions {
  double tolerance = 1e-10;  // residual-norm acceptance threshold
  int cap = 0;               // 0 = dim^2 of the carrier space
  bool keep_basis = false;
};
struct LieClosureReport {
  int dimension = 0;
  bool converged = false;
  std::vector<MatrixXcd> basis;  // orthonormal skew-Hermitian, if requested
};

/// Dimension of the real Lie algebra generated by {i*H_k} under
/// commutation, via breadth-first commutator expansion with modified
/// Gram-Schmidt (re-orthogonalized) rank decisions.
LieClosureReport lie_closure(const std::vector<Operator>& generators,
                             const LieClosureOptions& opts = {});

enum class ParityClass { plus, minus, mixed };

/// Sign of <M> when the state is (numerically) an M eigenstate, else mixed.
ParityClass parity_of(const QuantumState& state);

struct ReachabilityVerdict {
  int target_index = 0;        // k in 1..4
  int parity = 0;              // X-parity of that target
  bool ferromagnetic = false;  // J < 0
  bool aligned = false;        // J*f0 < 0 (initial state near |+...+>)
  bool n_even = false;
};

/// Which GHZ target is reachable from the ground state of H_f(0), by the
/// parity bookkeeping: J selects the ground-state pair of J*H0, the sign
/// of J*f0 and the chain parity select the member with matching X-parity.
ReachabilityVerdict classify_reachable_ghz(double j, double f0, int n_sites);

}  // namespace ghz
