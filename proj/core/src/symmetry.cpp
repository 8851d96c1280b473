#include "ghz/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace ghz {

namespace {

constexpr double kDegenerateGapTol = 1e-6;  // relative; below this the eigenbasis is suspect

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool commutes_with_complement(const MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  const double tol = 1e-13 * (1.0 + max_abs(h));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (std::abs(h(i, j) - h(n - 1 - i, n - 1 - j)) > tol) return false;
  return true;
}

bool matrix_is_real(const MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return false;
  return true;
}

// One carrier of the decomposition: either a parity sector in its
// (e_r +/- e_{~r})/sqrt(2) basis, or the full space untransformed.
struct Sector {
  MatrixXcd h0, h1;
  std::vector<int> reps;  // computational representative per basis vector; empty = identity carrier
  int sign = +1;
};

std::vector<Sector> make_sectors(const MatrixXcd& h0, const MatrixXcd& h1) {
  const int n = static_cast<int>(h0.rows());
  if (n % 2 != 0 || !commutes_with_complement(h0) || !commutes_with_complement(h1)) {
    Sector full;
    full.h0 = h0;
    full.h1 = h1;
    return {std::move(full)};
  }
  std::vector<int> reps;
  reps.reserve(n / 2);
  for (int i = 0; i < n; ++i)
    if (i < n - 1 - i) reps.push_back(i);

  auto build = [&](const MatrixXcd& h, int sign) {
    const int m = static_cast<int>(reps.size());
    MatrixXcd out(m, m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i)
        out(i, j) = h(reps[i], reps[j]) + double(sign) * h(reps[i], n - 1 - reps[j]);
    return out;
  };

  std::vector<Sector> sectors(2);
  sectors[0].h0 = build(h0, +1);
  sectors[0].h1 = build(h1, +1);
  sectors[0].reps = reps;
  sectors[0].sign = +1;
  sectors[1].h0 = build(h0, -1);
  sectors[1].h1 = build(h1, -1);
  sectors[1].reps = reps;
  sectors[1].sign = -1;
  return sectors;
}

struct SectorEig {
  VectorXd values;
  MatrixXcd vectors;
  MatrixXcd t0, t1;  // rotated drift / control
  bool degenerate = false;
};

SectorEig diagonalize_sector(const Sector& sec, double alpha, double beta) {
  SectorEig out;
  const MatrixXcd a = alpha * sec.h0 + beta * sec.h1;
  if (matrix_is_real(a) && matrix_is_real(sec.h0)) {
    EigensystemReal es = eigh_real(a.real());
    MatrixXd t0 = es.eigenvectors.transpose() * (sec.h0.real() * es.eigenvectors);
    out.values = std::move(es.eigenvalues);
    out.vectors = es.eigenvectors.cast<complexd>();
    out.t1 = ((out.values.asDiagonal().toDenseMatrix() - alpha * t0) / beta).cast<complexd>();
    out.t0 = t0.cast<complexd>();
  } else {
    Eigensystem es = eigh(a);
    out.t0 = es.eigenvectors.adjoint() * (sec.h0 * es.eigenvectors);
    out.t1 = (MatrixXcd(es.eigenvalues.cast<complexd>().asDiagonal()) - alpha * out.t0) / beta;
    out.values = std::move(es.eigenvalues);
    out.vectors = std::move(es.eigenvectors);
  }
  const int m = static_cast<int>(out.values.size());
  const double scale = 1.0 + std::max(std::abs(out.values(0)), std::abs(out.values(m - 1)));
  for (int i = 0; i + 1 < m; ++i)
    if (out.values(i + 1) - out.values(i) < kDegenerateGapTol * scale) { out.degenerate = true; break; }
  return out;
}

VectorXcd lift_column(const Sector& sec, const VectorXcd& col, int full_dim) {
  if (sec.reps.empty()) return col;
  VectorXcd full = VectorXcd::Zero(full_dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (size_t i = 0; i < sec.reps.size(); ++i) {
    full(sec.reps[i]) += inv_sqrt2 * col(i);
    full(full_dim - 1 - sec.reps[i]) += double(sec.sign) * inv_sqrt2 * col(i);
  }
  return full;
}

}  // namespace

std::vector<int> SubspaceDecomposition::block_dims() const {
  std::vector<int> dims(block_count());
  for (int b = 0; b < block_count(); ++b) dims[b] = block_dim(b);
  return dims;
}

SubspaceDecomposition decompose(const Operator& h0, const Operator& h1, const DecomposeOptions& opts) {
  if (!h0.is_hermitian() || !h1.is_hermitian()) throw validation_error("decompose: operators must be Hermitian");
  if (h0.dim() != h1.dim()) throw validation_error("decompose: dimension mismatch");
  if (!(opts.delta > 0)) throw validation_error("decompose: delta must be > 0");
  const int n = h0.dim();

  std::vector<Sector> sectors = make_sectors(h0.matrix(), h1.matrix());

  // (alpha, beta) retry ladder for accidental eigenvalue degeneracies
  std::vector<std::pair<double, double>> attempts = {{opts.alpha, opts.beta}};
  for (auto&& fallback : {std::pair<double, double>{1.0, std::sqrt(2.0)},
                          std::pair<double, double>{M_PI / 3.0, 1.0}}) {
    if (std::abs(fallback.first - opts.alpha) > 1e-12 || std::abs(fallback.second - opts.beta) > 1e-12)
      attempts.push_back(fallback);
  }

  std::vector<SectorEig> eigs;
  double used_alpha = opts.alpha, used_beta = opts.beta;
  bool degenerate = true;
  for (auto [a, b] : attempts) {
    eigs.clear();
    degenerate = false;
    for (const Sector& sec : sectors) {
      eigs.push_back(diagonalize_sector(sec, a, b));
      degenerate = degenerate || eigs.back().degenerate;
    }
    used_alpha = a;
    used_beta = b;
    if (!degenerate) break;
  }

  // Global column order: eigenvalue ascending across sectors.
  struct Col { double value; int sector; int index; };
  std::vector<Col> cols;
  cols.reserve(n);
  for (size_t s = 0; s < eigs.size(); ++s)
    for (int i = 0; i < eigs[s].values.size(); ++i)
      cols.push_back({eigs[s].values(i), static_cast<int>(s), i});
  std::stable_sort(cols.begin(), cols.end(), [](const Col& x, const Col& y) { return x.value < y.value; });

  std::vector<std::vector<int>> global_of(eigs.size());
  for (size_t s = 0; s < eigs.size(); ++s) global_of[s].assign(eigs[s].values.size(), -1);
  for (int g = 0; g < n; ++g) global_of[cols[g].sector][cols[g].index] = g;

  // Adjacency from both rotated operators, connected components.
  Dsu dsu(n);
  for (size_t s = 0; s < eigs.size(); ++s) {
    const MatrixXcd& t0 = eigs[s].t0;
    const MatrixXcd& t1 = eigs[s].t1;
    const int m = static_cast<int>(t0.rows());
    for (int j = 0; j < m; ++j)
      for (int i = j + 1; i < m; ++i)
        if (std::abs(t0(i, j)) > opts.delta || std::abs(t1(i, j)) > opts.delta)
          dsu.unite(global_of[s][i], global_of[s][j]);
  }

  std::vector<std::vector<int>> components(n);
  for (int g = 0; g < n; ++g) components[dsu.find(g)].push_back(g);
  std::vector<std::vector<int>> blocks;
  for (auto& comp : components)
    if (!comp.empty()) blocks.push_back(std::move(comp));
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });

  SubspaceDecomposition result;
  result.alpha = used_alpha;
  result.beta = used_beta;
  result.delta = opts.delta;
  result.eigenbasis_degenerate = degenerate;
  result.rotation = MatrixXcd::Zero(n, n);
  result.block_offsets.assign(1, 0);

  for (const auto& block : blocks) {
    const int bsize = static_cast<int>(block.size());
    const int sector_id = cols[block.front()].sector;
    const Sector& sec = sectors[sector_id];
    const SectorEig& eig = eigs[sector_id];

    std::vector<int> local(bsize);
    for (int i = 0; i < bsize; ++i) {
      if (cols[block[i]].sector != sector_id)
        throw numerical_error("decompose: a block straddles parity sectors");
      local[i] = cols[block[i]].index;
    }

    MatrixXcd h0_raw(bsize, bsize), h1_raw(bsize, bsize);
    for (int j = 0; j < bsize; ++j)
      for (int i = 0; i < bsize; ++i) {
        h0_raw(i, j) = eig.t0(local[i], local[j]);
        h1_raw(i, j) = eig.t1(local[i], local[j]);
      }
    h0_raw = 0.5 * (h0_raw + h0_raw.adjoint().eval());
    h1_raw = 0.5 * (h1_raw + h1_raw.adjoint().eval());

    // canonical intra-block basis: control eigenbasis, ascending
    Eigensystem w = eigh(h1_raw);

    MatrixXcd raw_basis(bsize, bsize);
    for (int j = 0; j < bsize; ++j) raw_basis.col(j) = eig.vectors.col(local[j]);
    MatrixXcd sector_basis = raw_basis * w.eigenvectors;

    const int offset = result.block_offsets.back();
    VectorXcd phases(bsize);
    for (int j = 0; j < bsize; ++j) {
      VectorXcd full = lift_column(sec, sector_basis.col(j), n);
      VectorXcd fixed = full;
      fix_vector_phase(fixed);
      // record the applied phase so restricted operators stay consistent
      complexd z(1.0, 0.0);
      for (int i = 0; i < n; ++i)
        if (std::abs(full(i)) > 1e-14) { z = fixed(i) / full(i); break; }
      phases(j) = z / std::abs(z);
      result.rotation.col(offset + j) = fixed;
    }

    MatrixXcd h0r = w.eigenvectors.adjoint() * h0_raw * w.eigenvectors;
    MatrixXcd h1r = w.eigenvalues.cast<complexd>().asDiagonal();
    for (int j = 0; j < bsize; ++j)
      for (int i = 0; i < bsize; ++i)
        h0r(i, j) = std::conj(phases(i)) * h0r(i, j) * phases(j);
    h0r = 0.5 * (h0r + h0r.adjoint().eval());

    result.restricted_drift.push_back(std::move(h0r));
    result.restricted_control.push_back(std::move(h1r));
    result.block_offsets.push_back(offset + bsize);
  }
  return result;
}

Operator restrict_operator(const Operator& op, const SubspaceDecomposition& decomp, int block) {
  if (block < 0 || block >= decomp.block_count()) throw validation_error("restrict: block index out of range");
  if (op.dim() != decomp.dim()) throw validation_error("restrict: dimension mismatch");
  auto basis = decomp.block_basis(block);
  MatrixXcd r = basis.adjoint() * op.matrix() * basis;
  if (op.is_hermitian()) {
    r = 0.5 * (r + r.adjoint().eval());
    return Operator::hermitian(std::move(r));
  }
  return Operator::general(std::move(r));
}

VectorXcd project_to_block(const VectorXcd& psi, const SubspaceDecomposition& decomp, int block) {
  if (block < 0 || block >= decomp.block_count()) throw validation_error("project_to_block: block index out of range");
  if (psi.size() != decomp.dim()) throw validation_error("project_to_block: dimension mismatch");
  return decomp.block_basis(block).adjoint() * psi;
}

VectorXcd embed_from_block(const VectorXcd& phi, const SubspaceDecomposition& decomp, int block) {
  if (block < 0 || block >= decomp.block_count()) throw validation_error("embed_from_block: block index out of range");
  if (phi.size() != decomp.block_dim(block)) throw validation_error("embed_from_block: dimension mismatch");
  return decomp.block_basis(block) * phi;
}

StateLocation locate_state(const QuantumState& state, const SubspaceDecomposition& decomp,
                           double membership_tolerance) {
  if (!state.is_pure()) throw validation_error("locate_state: pure states only");
  if (state.dim() != decomp.dim()) throw validation_error("locate_state: dimension mismatch");
  const VectorXcd w = decomp.rotation.adjoint() * state.vector();
  StateLocation loc;
  double best = -1.0;
  for (int b = 0; b < decomp.block_count(); ++b) {
    const double p = w.segment(decomp.block_offsets[b], decomp.block_dim(b)).squaredNorm();
    if (p > best) { best = p; loc.block = b; }
  }
  loc.leakage = std::max(0.0, 1.0 - best);
  loc.confined = loc.leakage <= membership_tolerance;
  return loc;
}

LieClosureReport lie_closure(const std::vector<Operator>& generators, const LieClosureOptions& opts) {
  if (generators.empty()) throw validation_error("lie_closure: need at least one generator");
  const int dim = generators.front().dim();
  for (const Operator& g : generators) {
    if (!g.is_hermitian()) throw validation_error("lie_closure: generators must be Hermitian");
    if (g.dim() != dim) throw validation_error("lie_closure: dimension mismatch");
  }
  const long cap = opts.cap > 0 ? opts.cap : static_cast<long>(dim) * dim;

  std::vector<MatrixXcd> basis;
  auto mgs_residual = [&](MatrixXcd& c) {
    for (const MatrixXcd& b : basis) {
      const complexd coeff = (b.adjoint() * c).trace();
      c.noalias() -= coeff * b;
    }
  };
  auto try_add = [&](MatrixXcd c) -> bool {
    const double scale = c.norm();
    if (scale < 1e-14) return false;
    c /= scale;
    mgs_residual(c);
    mgs_residual(c);
    const double r = c.norm();
    if (r <= opts.tolerance) return false;
    basis.push_back(c / r);
    return true;
  };

  const complexd i_unit(0.0, 1.0);
  for (const Operator& g : generators) try_add(i_unit * g.matrix());

  // breadth-first over unprocessed pairs
  std::deque<std::pair<size_t, size_t>> pending;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) pending.emplace_back(a, b);

  bool capped = false;
  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    MatrixXcd c = basis[a] * basis[b] - basis[b] * basis[a];
    if (try_add(std::move(c))) {
      const size_t t = basis.size() - 1;
      if (static_cast<long>(basis.size()) >= cap) { capped = true; break; }
      for (size_t k = 0; k < t; ++k) pending.emplace_back(k, t);
    }
  }

  LieClosureReport report;
  report.dimension = static_cast<int>(basis.size());
  report.converged = !capped;
  if (opts.keep_basis) report.basis = std::move(basis);
  return report;
}

ParityClass parity_of(const QuantumState& state) {
  if (!state.is_pure()) throw validation_error("parity_of: pure states only");
  const VectorXcd& psi = state.vector();
  const int n = static_cast<int>(psi.size());
  complexd m(0.0, 0.0);
  for (int i = 0; i < n; ++i) m += std::conj(psi(i)) * psi(n - 1 - i);
  const double expectation = m.real();
  if (std::abs(expectation) > 1.0 - 1e-9) return expectation > 0 ? ParityClass::plus : ParityClass::minus;
  return ParityClass::mixed;
}

ReachabilityVerdict classify_reachable_ghz(double j, double f0, int n_sites) {
  if (j == 0.0) throw validation_error("classify_reachable_ghz: J must be nonzero");
  if (f0 == 0.0) throw validation_error("classify_reachable_ghz: f0 = 0 leaves the initial ground state degenerate");
  if (n_sites < 2) throw validation_error("classify_reachable_ghz: n_sites must be >= 2");
  ReachabilityVerdict v;
  v.ferromagnetic = j < 0;
  v.aligned = j * f0 < 0;
  v.n_even = n_sites % 2 == 0;
  const bool positive_parity = v.aligned || v.n_even;  // parity of the initial ground state
  if (v.ferromagnetic)
    v.target_index = positive_parity ? 1 : 2;
  else
    v.target_index = positive_parity ? 3 : 4;
  v.parity = positive_parity ? +1 : -1;
  return v;
}

}  // namespace ghz
