#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "lmg/half_integer.hpp"
#include "lmg/model.hpp"
#include "lmg/rational.hpp"

namespace lmg::algebra {

/// Coefficients of the cubic polynomial in J0 on the right-hand side of
/// [J+, J-]. The paper's Delta is named shift_term here to keep it apart
/// from the interaction strength delta.
struct PolyAlgebraParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational shift_term;
};

/// Shift quantum number c; exact is set when c is rational (all LMG reps:
/// 0 or +-1/4), empty for the generic irrational branch.
struct ShiftC {
  double value = 0.0;
  std::optional<Rational> exact;

  static ShiftC zero() { return {0.0, Rational(0)}; }
  static ShiftC from_rational(const Rational& r) { return {to_double(r), r}; }
};

/// Deformed-algebra irrep label: ladder class q, ladder spin J
/// (dimension 2J+1), shift c, parent su(2) sector j.
struct RepLabel {
  int q = 1;
  HalfInt J;
  ShiftC c;
  HalfInt j;
  int n_particles = 0;
  bool is_lmg = true;  // false for supplementary (non-LMG) reps
};

/// LMG specialization: alpha = -16/N^2, beta = 0,
/// gamma = (2/N^2)(2j^2+2j-1), Delta = 0.
PolyAlgebraParams lmg_params(int n_particles, HalfInt j);

/// Admissible shifts for a q=1 rep: c = 0 and, when real,
/// c = +-sqrt(j(j+1)/4 - 1/8 - J(J+1)). The imaginary branch is dropped.
std::vector<ShiftC> c_values(HalfInt j, HalfInt J);

/// q=1 ladder product f(M-1) g(M), exact for rational c:
/// (1/N^2)(J-M+1)(J+M)[2j^2+2j-1-4J^2-4J-4M^2+4M+8(1-2M)c-24c^2].
Rational fg_product_q1(HalfInt j, HalfInt J, const Rational& c, HalfInt m_ladder, int n_particles);
double fg_product_q1(HalfInt j, HalfInt J, double c, HalfInt m_ladder, int n_particles);

/// q=2 ladder product f'(M'-2) g'(M'): the two integer-J' branch formulas
/// (selected by the parity of J'-M') or the half-integer formula, which
/// requires J' = j.
Rational fg_product_q2(HalfInt j, HalfInt j_prime, HalfInt m_prime, int n_particles);

/// Casimir eigenvalues of the q=2 rep with integer J' = n: even-M'
/// branch (M' = n, n-2, ...) n(n+2)[2j(j+1)-(n+1)^2]/(4N^2) and odd-M'
/// branch (n-1)(n+1)[2j(j+1)-n^2]/(4N^2), both obtained by evaluating
/// C = J+J- + poly(J0) on the respective ladder tops. The two values are
/// distinct for 2 <= n < j and coincide at n = j, where both reduce to
/// j(j-1)(j+1)(j+2)/(4N^2); the physical multiplet Casimir is therefore
/// scalar.
std::pair<Rational, Rational> casimir_eigenvalues_q2(HalfInt j, int n, int n_particles);

/// Single Casimir eigenvalue for half-integer j: (1/4N^2) j(j-1)(j+1)(j+2).
Rational casimir_eigenvalue_half_integer(HalfInt j, int n_particles);

/// Casimir evaluated on the rep basis in the symmetric gauge. Throws if
/// the result is not diagonal to tolerance (algebra construction bug).
Eigen::VectorXd casimir_spectrum(const RepLabel& rep, const PolyAlgebraParams& params);

/// Casimir of the q=2 action on the full (2j+1)-dimensional j multiplet.
Eigen::VectorXd casimir_spectrum_q2_multiplet(HalfInt j, int n_particles);

/// LMG block splitting of a j multiplet:
///   integer j = n      -> (J = n/2, c = 0) + (J = (n-1)/2, c = 0)
///   half-integer j     -> (J = (2j-1)/4, c = +1/4) + (same J, c = -1/4)
/// j = 0 yields the single trivial rep.
std::vector<RepLabel> decompose(HalfInt j, int n_particles);

/// Matrix realization of a q=1 rep in the symmetric gauge
/// f = g = sqrt(f g); basis ordered M = J down to -J.
struct RepMatrices {
  Eigen::MatrixXd j0;
  Eigen::MatrixXd jplus;
  Eigen::MatrixXd jminus;
};
RepMatrices rep_matrices(const RepLabel& rep);

/// Max-norm residual of [J0,J+-] -+ J+- and of [J+,J-] minus the cubic
/// polynomial, over the rep's matrix realization.
double verify_commutators(const RepLabel& rep, const PolyAlgebraParams& params);

/// General finite-dimensional rep constructor (arbitrary algebra
/// coefficients): real roots c of the highest-weight constraint for the
/// given (q, J, l, d) and, per root, the ladder products
/// f(J-kq-q-l) g(J-kq-l) for k = 0 .. (2J-d-l)/q.
struct GeneralRep {
  std::vector<double> c_roots;
  std::vector<std::vector<double>> products;  // one list per root
};
GeneralRep general_rep(const PolyAlgebraParams& params, int q, HalfInt J, int l, int d);

/// All q=1 reps (J <= J_max, c from c_values) whose ladder products are
/// all nonnegative. LMG reps are flagged; the rest are supplementary.
std::vector<RepLabel> enumerate_supplementary(HalfInt j, int n_particles, HalfInt j_max);

}  // namespace lmg::algebra
