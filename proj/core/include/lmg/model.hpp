#pragma once

#include <stdexcept>
#include <vector>

#include "lmg/half_integer.hpp"
#include "lmg/rational.hpp"

namespace lmg {

/// Two-level N-fermion model: level splitting epsilon, dimensionless
/// interaction strength delta with V = delta * epsilon / (2N).
/// All internal energies are in units of epsilon; epsilon is applied
/// only when formatting output.
struct ModelParams {
  int n_particles = 0;
  double epsilon = 1.0;
  double delta = 0.0;

  void validate() const {
    if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be > 0");
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  }

  /// V / epsilon = delta / (2N).
  double coupling() const { return delta / (2.0 * n_particles); }
  Rational coupling_exact_per_delta() const { return Rational(1, 2 * n_particles); }
};

/// One su(2) sector of the 2^N configuration space.
struct JMultiplet {
  HalfInt j;
  long long multiplicity = 0;
  int dimension() const { return j.twice() + 1; }
};

}  // namespace lmg
