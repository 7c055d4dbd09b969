#include "lmg/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lmg::fock {

Operators build_operators(int n_particles, int n_max) {
  if (n_particles < 1 || n_particles > n_max)
    throw std::invalid_argument("build_operators: N must be in [1, " + std::to_string(n_max) +
                                "] (memory guard)");
  const long dim = 1L << n_particles;
  Operators ops;
  ops.n_particles = n_particles;
  ops.j0 = Eigen::MatrixXd::Zero(dim, dim);
  ops.jplus = Eigen::MatrixXd::Zero(dim, dim);
  for (long b = 0; b < dim; ++b) {
    ops.j0(b, b) = __builtin_popcountl(b) - n_particles / 2.0;
    for (int m = 0; m < n_particles; ++m)
      if (!(b >> m & 1)) ops.jplus(b | (1L << m), b) += 1.0;
  }
  ops.jminus = ops.jplus.transpose();
  ops.j2 = 0.5 * (ops.jplus * ops.jminus + ops.jminus * ops.jplus) + ops.j0 * ops.j0;
  return ops;
}

Eigen::MatrixXd hamiltonian(const Operators& ops, double delta) {
  double v = delta / (2.0 * ops.n_particles);
  Eigen::MatrixXd jp2 = ops.jplus * ops.jplus;
  return ops.j0 + v * (jp2 + jp2.transpose());
}

Spectrum brute_force_spectrum(const ModelParams& params, int n_max) {
  params.validate();
  Operators ops = build_operators(params.n_particles, n_max);
  Eigen::MatrixXd h = hamiltonian(ops, params.delta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("brute_force_spectrum: eigensolver failed to converge (dim " +
                             std::to_string(h.rows()) + ", ||H|| = " + std::to_string(h.norm()) +
                             ")");
  const Eigen::VectorXd& evals = es.eigenvalues();
  const Eigen::MatrixXd& evecs = es.eigenvectors();
  const long dim = evals.size();
  double scale = std::max(1.0, std::max(std::abs(evals(0)), std::abs(evals(dim - 1))));
  double cluster_tol = 1e-8 * scale;

  Spectrum spec;
  long start = 0;
  while (start < dim) {
    long end = start + 1;
    while (end < dim && evals(end) - evals(end - 1) < cluster_tol) ++end;
    long sz = end - start;
    // Rotate the (possibly degenerate) eigenspace to diagonalize j^2.
    Eigen::MatrixXd block = evecs.middleCols(start, sz);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> js(block.transpose() * ops.j2 * block);
    for (long k = 0; k < sz; ++k) {
      double lam = js.eigenvalues()(k);
      int twice_j = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * lam) - 1.0));
      double jv = twice_j / 2.0;
      if (std::abs(lam - jv * (jv + 1.0)) > 1e-6)
        throw std::runtime_error("brute_force_spectrum: ambiguous j^2 classification");
      spec.entries.push_back({evals(start + k), 1, SectorLabel{HalfInt::from_twice(twice_j)}});
    }
    start = end;
  }
  spec.sort();
  return spec;
}

}  // namespace lmg::fock
