#pragma once

#include <Eigen/Dense>

#include "lmg/model.hpp"
#include "lmg/spectrum.hpp"

namespace lmg::fock {

/// Quasi-spin generators on the full 2^N configuration space. Basis
/// states are bitstrings; bit m set means the particle-hole pair at
/// mode m is excited.
struct Operators {
  int n_particles = 0;
  Eigen::MatrixXd j0;
  Eigen::MatrixXd jplus;
  Eigen::MatrixXd jminus;
  Eigen::MatrixXd j2;
};

inline constexpr int kDefaultNMax = 14;

/// j+ flips any unset bit with amplitude +1: the summands alpha+_m beta+_m
/// are pair operators and pairs at distinct modes commute, so no
/// Jordan-Wigner strings survive in the pair-excitation subspace.
/// The N=2 check against explicit 4-mode fermion matrices lives in the
/// test suite.
Operators build_operators(int n_particles, int n_max = kDefaultNMax);

/// H / epsilon = j0 + (delta/2N) (j+^2 + j-^2).
Eigen::MatrixXd hamiltonian(const Operators& ops, double delta);

/// All 2^N eigenvalues, sorted, each classified by its su(2) sector j.
/// Degenerate H-eigenspaces are rotated to diagonalize j^2 before the
/// sector assignment.
Spectrum brute_force_spectrum(const ModelParams& params, int n_max = kDefaultNMax);

}  // namespace lmg::fock
