#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lmg/model.hpp"
#include "lmg/spectrum.hpp"

namespace lmg::quasispin {

/// All j multiplets of the N-particle space with their multiplicities
/// m_j = C(N, N/2-j) - C(N, N/2-j-1), ordered j descending from N/2.
/// Satisfies sum m_j (2j+1) = 2^N.
std::vector<JMultiplet> multiplicities(int n_particles);

/// Matrix element <j,m+2| j+^2 |j,m> = sqrt((j-m-1)(j-m)(j+m+1)(j+m+2));
/// zero when the target lies above the top of the ladder.
double jplus2_element(HalfInt j, HalfInt m);

/// (2j+1)x(2j+1) Hamiltonian block of the j multiplet in the |j,m> basis
/// (m ascending from -j), in units of epsilon: diagonal m, couplings
/// m <-> m+-2 of strength (delta/2N) * j+^2 element. Real symmetric.
Eigen::MatrixXd build_j_block(HalfInt j, const ModelParams& params);

/// Full 2^N spectrum from the j blocks alone: each block diagonalized
/// once, its eigenvalues repeated m_j times.
Spectrum assembled_spectrum(const ModelParams& params);

}  // namespace lmg::quasispin
