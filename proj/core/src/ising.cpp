#include "ghz/ising.hpp"

namespace ghz {

namespace {

// +1 for bit 0, -1 for bit 1 at site `site` (1-based from the left/MSB).
inline int z_value(int basis_index, int n_sites, int site) {
  return (basis_index >> (n_sites - site)) & 1 ? -1 : 1;
}

}  // namespace

VectorXd drift_diagonal_disordered(const ChainSpec& spec, const VectorXd& deltas) {
  spec.validate();
  const int n = spec.n_sites;
  if (deltas.size() != n - 1) throw validation_error("drift: need one delta per bond (N-1 entries)");
  const int dim = spec.dim();
  VectorXd d(dim);
  for (int i = 0; i < dim; ++i) {
    double e = 0.0;
    for (int bond = 1; bond < n; ++bond)
      e += (1.0 + deltas(bond - 1)) * z_value(i, n, bond) * z_value(i, n, bond + 1);
    d(i) = e;
  }
  return d;
}

VectorXd drift_diagonal(const ChainSpec& spec) {
  return drift_diagonal_disordered(spec, VectorXd::Zero(spec.n_sites - 1));
}

Operator build_drift(const ChainSpec& spec) {
  return Operator::hermitian(drift_diagonal(spec).cast<complexd>().asDiagonal());
}

Operator build_drift_disordered(const ChainSpec& spec, const VectorXd& deltas) {
  return Operator::hermitian(drift_diagonal_disordered(spec, deltas).cast<complexd>().asDiagonal());
}

Operator build_control(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  const int dim = spec.dim();
  MatrixXcd h1 = MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int site = 0; site < n; ++site)
      h1(i ^ (1 << site), i) += 1.0;
  return Operator::hermitian(std::move(h1));
}

Operator parity_operator(const ChainSpec& spec) {
  spec.validate();
  const int dim = spec.dim();
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) m(dim - 1 - i, i) = 1.0;
  return Operator::hermitian(std::move(m));
}

void apply_control_accumulate(int n_sites, double f, const VectorXcd& x, VectorXcd& y) {
  const int dim = 1 << n_sites;
  for (int site = 0; site < n_sites; ++site) {
    const int bit = 1 << site;
    for (int i = 0; i < dim; ++i) y(i) += f * x(i ^ bit);
  }
}

}  // namespace ghz
