#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lmg/model.hpp"
#include "lmg/poly_algebra.hpp"
#include "lmg/spectrum.hpp"

namespace lmg::spectra {

/// Tridiagonal block of H/epsilon in a deformed-algebra irrep: diagonal
/// 2(M+c) for M = J down to -J, squared couplings delta^2 * f g between
/// adjacent ladder states. Exact rational data is kept alongside the
/// numeric values whenever c is rational.
struct HamiltonianBlock {
  algebra::RepLabel rep;
  double delta = 0.0;
  std::vector<double> diagonal;
  std::vector<double> off_products;  // delta^2 * fg, length dim-1
  std::optional<std::vector<Rational>> diagonal_exact;
  std::optional<std::vector<Rational>> fg_exact;  // fg without the delta^2 factor

  int dimension() const { return static_cast<int>(diagonal.size()); }
};

HamiltonianBlock build_block(const algebra::RepLabel& rep, const ModelParams& params);

/// Sorted eigenvalues of the block via Sturm bisection.
std::vector<double> eigenvalues(const HamiltonianBlock& block, double tol = 1e-12);

/// Polynomial in delta^2 with rational coefficients (index = power of
/// delta^2).
using DeltaPoly = std::vector<Rational>;

/// Monic characteristic polynomial det(E I - H) of the block, expanded
/// by the three-term recurrence. Index = power of E; each coefficient is
/// exact in Q[delta^2]. Requires exact block data and dimension <= 8.
std::vector<DeltaPoly> char_poly(const HamiltonianBlock& block);

double eval_delta_poly(const DeltaPoly& p, double delta);

/// Full 2^N spectrum assembled from the split blocks of every j
/// multiplet, each repeated m_j times.
Spectrum full_spectrum(const ModelParams& params);

struct SweepRow {
  double delta = 0.0;
  HalfInt j;
  HalfInt J;
  double c = 0.0;
  int index = 0;  // position within the block, ascending energy
  double energy = 0.0;
};

/// One row per (grid point, block eigenvalue); deterministic order
/// (delta asc, j desc, J desc, c desc, index asc).
std::vector<SweepRow> sweep(const ModelParams& params, const std::vector<double>& delta_grid);

struct DegeneracyCluster {
  double energy = 0.0;  // degeneracy-weighted mean
  long long count = 0;
  std::vector<SectorLabel> labels;
};

/// Groups spectrum entries whose gaps are below cluster_tol; pass
/// cluster_tol <= 0 for the default 1e-8 * max(1, spectral radius).
std::vector<DegeneracyCluster> degeneracies(const Spectrum& spectrum, double cluster_tol = 0.0);

/// Closed-form eigenvalue row as printed in the paper-exact tables.
struct ClosedFormRow {
  HalfInt j;
  HalfInt J;
  std::string expression;
  std::function<std::vector<double>(double delta)> eval;
};

/// Analytic rows available for N = 7 (j = 1/2, 3/2) and N = 8 (all j).
std::vector<ClosedFormRow> closed_form_rows(int n_particles);

}  // namespace lmg::spectra
