#include "ghz/linalg.hpp"

#include <algorithm>
#include <cmath>

#ifdef GHZ_WITH_LAPACKE
#include <lapacke.h>
#endif

namespace ghz {

Operator Operator::hermitian(MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw validation_error("Operator: matrix must be square, dim >= 1");
  if (hermiticity_defect(m) >= kHermitianTolerance) throw validation_error("Operator: matrix tagged hermitian is not");
  return Operator(std::move(m), true);
}

Operator Operator::general(MatrixXcd m) {
  if (m.rows() != m.cols() || m.rows() < 1) throw validation_error("Operator: matrix must be square, dim >= 1");
  return Operator(std::move(m), false);
}

double max_abs(const MatrixXcd& a) { return a.cwiseAbs().maxCoeff(); }

double hermiticity_defect(const MatrixXcd& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

bool is_real(const MatrixXcd& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j).imag() != 0.0) return false;
  return true;
}

}  // namespace

EigensystemReal eigh_real(const MatrixXd& a) {
  EigensystemReal out;
#ifdef GHZ_WITH_LAPACKE
  const int n = static_cast<int>(a.rows());
  out.eigenvectors = a;
  out.eigenvalues.resize(n);
  int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, out.eigenvectors.data(), n,
                            out.eigenvalues.data());
  if (info != 0) throw numerical_error("dsyevd failed, info=" + std::to_string(info));
#else
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(a);
  if (es.info() != Eigen::Success) throw numerical_error("eigensolver failed");
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
#endif
  return out;
}

Eigensystem eigh(const MatrixXcd& a) {
  if (a.rows() != a.cols()) throw validation_error("eigh: matrix must be square");
  Eigensystem out;
  if (is_real(a)) {
    EigensystemReal r = eigh_real(a.real());
    out.eigenvalues = std::move(r.eigenvalues);
    out.eigenvectors = r.eigenvectors.cast<complexd>();
    return out;
  }
#ifdef GHZ_WITH_LAPACKE
  const int n = static_cast<int>(a.rows());
  out.eigenvectors = a;
  out.eigenvalues.resize(n);
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                            reinterpret_cast<lapack_complex_double*>(out.eigenvectors.data()), n,
                            out.eigenvalues.data());
  if (info != 0) throw numerical_error("zheevd failed, info=" + std::to_string(info));
#else
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(a);
  if (es.info() != Eigen::Success) throw numerical_error("eigensolver failed");
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
#endif
  return out;
}

void fix_vector_phase(VectorXcd& v) {
  Eigen::Index imax = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double m = std::norm(v(i));
    if (m > best) { best = m; imax = i; }
  }
  complexd z = v(imax);
  double m = std::abs(z);
  if (m > 0) v *= std::conj(z) / m;
}

void fix_column_phases(MatrixXcd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    VectorXcd col = v.col(j);
    fix_vector_phase(col);
    v.col(j) = col;
  }
}

LanczosEigResult lanczos_lowest(
    const std::function<void(const VectorXcd&, VectorXcd&)>& apply, int dim,
    int count, const LanczosEigOptions& opts) {
  LanczosEigResult result;
  const int m_max = std::min(dim, std::max(opts.max_iterations, 2 * count + 2));

  std::vector<VectorXcd> basis;
  basis.reserve(m_max);
  std::vector<double> alpha, beta;  // tridiagonal entries

  VectorXcd q = VectorXcd::Zero(dim);
  // deterministic start vector with broad support
  for (int i = 0; i < dim; ++i) q(i) = complexd(1.0 + 0.37 * std::cos(1.7 * i), 0.21 * std::sin(0.9 * i + 0.4));
  q /= q.norm();
  basis.push_back(q);

  VectorXcd w(dim);
  auto project_out = [&](VectorXcd& x) {
    for (const auto& b : basis) x -= b.dot(x) * b;
  };

  double prev_low = 0;
  VectorXd ritz_values;
  Eigen::MatrixXd ritz_vectors;
  int m = 0;
  for (m = 1; m <= m_max; ++m) {
    apply(basis[m - 1], w);
    double a = std::real(basis[m - 1].dot(w));
    alpha.push_back(a);
    project_out(w);
    project_out(w);  // full reorthogonalization, twice for safety
    double b = w.norm();

    // current tridiagonal Ritz values
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    ritz_values = es.eigenvalues();
    ritz_vectors = es.eigenvectors();

    if (m >= std::max(2 * count, 6)) {
      double low = ritz_values.head(std::min(count, m)).sum();
      double scale = std::abs(ritz_values(0)) + std::abs(ritz_values(m - 1)) + 1e-30;
      bool small_residual = true;
      for (int k = 0; k < std::min(count, m); ++k)
        if (b * std::abs(ritz_vectors(m - 1, k)) > opts.tolerance * scale) small_residual = false;
      if ((small_residual && m > count) || std::abs(low - prev_low) < opts.tolerance * scale) {
        result.converged = true;
        break;
      }
      prev_low = low;
    }
    if (b < 1e-13) { result.converged = true; break; }  // invariant subspace
    if (m == m_max) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }

  m = static_cast<int>(alpha.size());
  const int k = std::min(count, m);
  result.eigenvalues = ritz_values.head(k);
  result.eigenvectors = MatrixXcd::Zero(dim, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i)
      result.eigenvectors.col(j) += ritz_vectors(i, j) * basis[i];
  for (int j = 0; j < k; ++j) {
    VectorXcd col = result.eigenvectors.col(j);
    col.normalize();
    fix_vector_phase(col);
    result.eigenvectors.col(j) = col;
  }
  return result;
}

VectorXcd expm_action(const std::function<void(const VectorXcd&, VectorXcd&)>& apply,
                      const VectorXcd& v, double theta, double norm_bound) {
  const int dim = static_cast<int>(v.size());
  const double vnorm = v.norm();
  if (vnorm == 0.0 || theta == 0.0) return v;

  // Split oversized steps so the Krylov series converges quickly.
  const double work = std::abs(theta) * std::max(norm_bound, 0.0);
  const int pieces = std::max(1, static_cast<int>(std::ceil(work / 8.0)));
  const double theta_piece = theta / pieces;

  VectorXcd state = v;
  const int m_cap = std::min(dim, 42);

  for (int piece = 0; piece < pieces; ++piece) {
    const double beta0 = state.norm();
    std::vector<VectorXcd> basis;
    basis.reserve(m_cap);
    basis.push_back(state / beta0);
    std::vector<double> alpha, beta;
    VectorXcd w(dim);
    Eigen::VectorXcd small_exp;
    int m = 0;
    bool done = false;
    for (m = 1; m <= m_cap && !done; ++m) {
      apply(basis[m - 1], w);
      double a = std::real(basis[m - 1].dot(w));
      alpha.push_back(a);
      for (const auto& b : basis) w -= b.dot(w) * b;
      for (const auto& b : basis) w -= b.dot(w) * b;
      double bnorm = w.norm();

      // exp(-i theta T_m) e1 on the tridiagonal projection
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      Eigen::VectorXcd phases(m);
      for (int i = 0; i < m; ++i) phases(i) = std::exp(complexd(0.0, -theta_piece * es.eigenvalues()(i)));
      small_exp = es.eigenvectors().cast<complexd>() * (phases.asDiagonal() * es.eigenvectors().row(0).transpose().cast<complexd>());

      const bool tail_small = std::abs(small_exp(m - 1)) * std::max(bnorm, 1.0) < 1e-15;
      if ((m >= 3 && tail_small) || bnorm < 1e-13 || m == m_cap || m == dim) {
        done = true;
      } else {
        beta.push_back(bnorm);
        basis.push_back(w / bnorm);
      }
    }
    m = static_cast<int>(alpha.size());
    VectorXcd next = VectorXcd::Zero(dim);
    for (int i = 0; i < m; ++i) next += small_exp(i) * basis[i];
    state = beta0 * next;
  }
  return state;
}

}  // namespace ghz
