#pragma once

#include "ghz/chain.hpp"
#include "ghz/linalg.hpp"

namespace ghz {

/// Pure state vector or density matrix.  `block` tags states expressed in
/// a block basis rather than the full computational basis (-1 = full).
class QuantumState {
 public:
  enum class Kind { pure, density };

  static QuantumState pure(VectorXcd psi, int block = -1);
  static QuantumState density(MatrixXcd rho, int block = -1);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::pure; }
  int dim() const { return is_pure() ? static_cast<int>(vec_.size()) : static_cast<int>(rho_.rows()); }
  int block() const { return block_; }

  const VectorXcd& vector() const;
  const MatrixXcd& density_matrix() const;

  /// |psi><psi| for pure states, identity for densities.
  MatrixXcd as_density() const;

 private:
  QuantumState() = default;
  Kind kind_ = Kind::pure;
  VectorXcd vec_;
  MatrixXcd rho_;
  int block_ = -1;
};

/// The four target states: k=1,2 are (|0..0> +/- |1..1>)/sqrt(2), k=3,4
/// the corresponding alternating-pattern pair.
QuantumState ghz_state(const ChainSpec& spec, int k);

/// Tensor power of |+> (sign=+1) or |-> (sign=-1).
QuantumState product_state(const ChainSpec& spec, int sign);

/// |<target|psi>|^2 for pure states, <target|rho|target> for densities.
/// `target` must be pure.
double fidelity(const QuantumState& state, const QuantumState& target);
double fidelity(const VectorXcd& psi, const VectorXcd& target);

}  // namespace ghz
