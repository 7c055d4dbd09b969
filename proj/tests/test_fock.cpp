#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "lmg/fock.hpp"
#include "lmg/quasispin.hpp"

using namespace lmg;

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

// Jordan-Wigner annihilation operator for mode k out of n_modes.
Eigen::MatrixXd jw_annihilate(int k, int n_modes) {
  Eigen::MatrixXd z(2, 2), a(2, 2), id(2, 2);
  z << 1, 0, 0, -1;
  a << 0, 1, 0, 0;
  id.setIdentity();
  Eigen::MatrixXd out(1, 1);
  out << 1;
  for (int i = 0; i < n_modes; ++i) out = kron(out, i < k ? z : (i == k ? a : id));
  return out;
}

}  // namespace

TEST_CASE("N=1: j0 = diag(-1/2, +1/2)") {
  auto ops = fock::build_operators(1);
  CHECK(ops.j0(0, 0) == -0.5);
  CHECK(ops.j0(1, 1) == 0.5);
  CHECK(ops.j0(0, 1) == 0.0);
}

TEST_CASE("su(2) commutators hold exactly on the configuration space") {
  for (int n : {2, 3, 5}) {
    auto ops = fock::build_operators(n);
    auto comm = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return a * b - b * a; };
    CHECK((comm(ops.jplus, ops.jminus) - 2.0 * ops.j0).cwiseAbs().maxCoeff() == 0.0);
    CHECK((comm(ops.j0, ops.jplus) - ops.jplus).cwiseAbs().maxCoeff() == 0.0);
    CHECK((comm(ops.j0, ops.jminus) + ops.jminus).cwiseAbs().maxCoeff() == 0.0);
    CHECK((comm(fock::hamiltonian(ops, 1.7), ops.j2)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("bitstring j+- match the explicit 4-mode fermion construction (N=2)") {
  // Mode order (alpha_1, beta_1, alpha_2, beta_2); pair operators carry no
  // net Jordan-Wigner string, which is what makes the bitstring picture
  // with all-positive amplitudes exact.
  const int n_modes = 4;
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(16, 16);
  for (int m = 0; m < 2; ++m) {
    Eigen::MatrixXd alpha = jw_annihilate(2 * m, n_modes);
    Eigen::MatrixXd beta = jw_annihilate(2 * m + 1, n_modes);
    jp += alpha.transpose() * beta.transpose();
  }
  Eigen::MatrixXd jm = jp.transpose();
  Eigen::MatrixXd number = Eigen::MatrixXd::Zero(16, 16);
  for (int k = 0; k < n_modes; ++k) {
    Eigen::MatrixXd c = jw_annihilate(k, n_modes);
    number += c.transpose() * c;
  }
  Eigen::MatrixXd j0 = 0.5 * number - Eigen::MatrixXd::Identity(16, 16);

  // The algebra closes on the full fermionic Fock space.
  CHECK((jp * jm - jm * jp - 2.0 * j0).cwiseAbs().maxCoeff() == 0.0);
  CHECK((j0 * jp - jp * j0 - jp).cwiseAbs().maxCoeff() == 0.0);

  // Pair-subspace matrix elements agree with the bitstring operators.
  // Pair state b: modes (alpha_m, beta_m) occupied for each bit m of b.
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(16, 4);
  Eigen::MatrixXd vac = Eigen::MatrixXd::Zero(16, 1);
  vac(0, 0) = 1.0;
  for (int b = 0; b < 4; ++b) {
    Eigen::MatrixXd state = vac;
    for (int m = 0; m < 2; ++m)
      if (b >> m & 1) {
        state = jw_annihilate(2 * m + 1, n_modes).transpose() * state;
        state = jw_annihilate(2 * m, n_modes).transpose() * state;
      }
    basis.col(b) = state;
  }
  auto ops = fock::build_operators(2);
  CHECK((basis.transpose() * jp * basis - ops.jplus).cwiseAbs().maxCoeff() == 0.0);
  CHECK((basis.transpose() * j0 * basis - ops.j0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("N=7: j^2 eigenspace dimensions are m_j (2j+1)") {
  auto ops = fock::build_operators(7);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ops.j2);
  // expected: j = 1/2 -> 28, 3/2 -> 56, 5/2 -> 36, 7/2 -> 8
  std::map<int, int> counts;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double lam = es.eigenvalues()(i);
    int twice_j = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * lam) - 1.0));
    ++counts[twice_j];
  }
  CHECK(counts[1] == 28);
  CHECK(counts[3] == 56);
  CHECK(counts[5] == 36);
  CHECK(counts[7] == 8);
}

TEST_CASE("N=2, delta=1: spectrum is {0, 0, +-sqrt(5)/2}") {
  ModelParams p{2, 1.0, 1.0};
  auto e = fock::brute_force_spectrum(p).energies();
  REQUIRE(e.size() == 4);
  double r = std::sqrt(1.0 + 0.25);
  CHECK(e[0] == doctest::Approx(-r).epsilon(1e-12));
  CHECK(e[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e[3] == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("N=8, delta=0: eigenvalue m-4 with binomial multiplicity") {
  ModelParams p{8, 1.0, 0.0};
  auto e = fock::brute_force_spectrum(p).energies();
  long long binom[] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
  size_t idx = 0;
  for (int up = 0; up <= 8; ++up)
    for (long long k = 0; k < binom[up]; ++k)
      CHECK(e[idx++] == doctest::Approx(up - 4.0).epsilon(1e-12));
}

TEST_CASE("N=7 spectra are symmetric under E -> -E") {
  for (double delta : {0.0, 1.0, 2.5}) {
    ModelParams p{7, 1.0, delta};
    auto e = fock::brute_force_spectrum(p).energies();
    for (size_t i = 0; i < e.size(); ++i)
      CHECK(e[i] == doctest::Approx(-e[e.size() - 1 - i]).epsilon(1e-9));
  }
}

TEST_CASE("H is traceless for all delta") {
  for (double delta : {0.0, 1.0, 4.0}) {
    auto ops = fock::build_operators(6);
    CHECK(std::abs(fock::hamiltonian(ops, delta).trace()) < 1e-12);
  }
}

TEST_CASE("build_operators enforces the memory guard") {
  CHECK_THROWS_AS(fock::build_operators(0), std::invalid_argument);
  CHECK_THROWS_AS(fock::build_operators(15), std::invalid_argument);
  CHECK_NOTHROW(fock::build_operators(11, 11));
}
