#include "lmg/quasispin.hpp"

#include <cmath>
#include <stdexcept>

namespace lmg::quasispin {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<JMultiplet> multiplicities(int n_particles) {
  if (n_particles < 1) throw std::invalid_argument("multiplicities: N must be >= 1");
  std::vector<JMultiplet> out;
  for (int twice_j = n_particles; twice_j >= n_particles % 2; twice_j -= 2) {
    int k = (n_particles - twice_j) / 2;
    long long m = binomial(n_particles, k) - binomial(n_particles, k - 1);
    out.push_back({HalfInt::from_twice(twice_j), m});
  }
  return out;
}

double jplus2_element(HalfInt j, HalfInt m) {
  if (m.twice() > j.twice() || m.twice() < -j.twice())
    throw std::invalid_argument("jplus2_element: |m| > j");
  if (m.twice() + 4 > j.twice()) return 0.0;
  // j - m is an integer within a multiplet; work with exact integers.
  long long a = (j.twice() - m.twice()) / 2 - 1;  // j-m-1
  long long b = a + 1;                            // j-m
  long long c = (j.twice() + m.twice()) / 2 + 1;  // j+m+1
  long long d = c + 1;                            // j+m+2
  return std::sqrt(static_cast<double>(a * b * c * d));
}

Eigen::MatrixXd build_j_block(HalfInt j, const ModelParams& params) {
  params.validate();
  if (j.twice() > params.n_particles)
    throw std::invalid_argument("build_j_block: j exceeds N/2");
  if ((j.twice() - params.n_particles) % 2 != 0)
    throw std::invalid_argument("build_j_block: j and N/2 must differ by an integer");
  int dim = j.twice() + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  double v = params.coupling();
  for (int i = 0; i < dim; ++i) {
    HalfInt m = HalfInt::from_twice(-j.twice() + 2 * i);
    h(i, i) = m.value();
    if (i + 2 < dim) {
      double e = v * jplus2_element(j, m);
      h(i + 2, i) = e;
      h(i, i + 2) = e;
    }
  }
  return h;
}


Spectrum assembled_spectrum(const ModelParams& params) {
  params.validate();
  Spectrum spec;
  for (const JMultiplet& mult : multiplicities(params.n_particles)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_j_block(mult.j, params));
    if (es.info() != Eigen::Success)
      throw std::runtime_error("assembled_spectrum: eigensolver failed to converge");
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      spec.entries.push_back({es.eigenvalues()(i), mult.multiplicity, SectorLabel{mult.j}});
  }
  spec.sort();
  return spec;
}

}  // namespace lmg::quasispin

