#include "lmg/poly_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace lmg::algebra {

namespace {

void check_lmg_sector(int n_particles, HalfInt j) {
  if (n_particles < 1) throw std::invalid_argument("N must be >= 1");
  if (j.twice() < 0 || j.twice() > n_particles || (j.twice() - n_particles) % 2 != 0)
    throw std::invalid_argument("invalid (N, j) pairing: j must be N/2, N/2-1, ...");
}

Rational jj1(HalfInt j) {  // j(j+1)
  Rational jr = j.rational();
  return jr * (jr + 1);
}

}  // namespace

PolyAlgebraParams lmg_params(int n_particles, HalfInt j) {
  check_lmg_sector(n_particles, j);
  Rational n2(static_cast<long long>(n_particles) * n_particles);
  Rational jr = j.rational();
  PolyAlgebraParams p;
  p.alpha = Rational(-16) / n2;
  p.beta = 0;
  p.gamma = Rational(2) / n2 * (2 * jr * jr + 2 * jr - 1);
  p.shift_term = 0;
  return p;
}

std::vector<ShiftC> c_values(HalfInt j, HalfInt J) {
  if (J.twice() < 0) throw std::invalid_argument("c_values: J must be >= 0");
  std::vector<ShiftC> out{ShiftC::zero()};
  Rational radicand = jj1(j) / 4 - Rational(1, 8) - jj1(J);
  if (radicand > 0) {
    if (auto root = exact_sqrt(radicand)) {
      out.push_back(ShiftC::from_rational(*root));
      out.push_back(ShiftC::from_rational(-*root));
    } else {
      double r = std::sqrt(to_double(radicand));
      out.push_back({r, std::nullopt});
      out.push_back({-r, std::nullopt});
    }
  }
  return out;
}

Rational fg_product_q1(HalfInt j, HalfInt J, const Rational& c, HalfInt m_ladder,
                       int n_particles) {
  if (m_ladder.twice() < -J.twice() + 2 || m_ladder.twice() > J.twice())
    throw std::invalid_argument("fg_product_q1: M outside ladder [-J+1, J]");
  Rational jr = j.rational(), Jr = J.rational(), M = m_ladder.rational();
  Rational bracket =
      2 * jr * jr + 2 * jr - 1 - 4 * Jr * Jr - 4 * Jr - 4 * M * M + 4 * M + 8 * (1 - 2 * M) * c -
      24 * c * c;
  Rational n2(static_cast<long long>(n_particles) * n_particles);
  return (Jr - M + 1) * (Jr + M) * bracket / n2;
}

double fg_product_q1(HalfInt j, HalfInt J, double c, HalfInt m_ladder, int n_particles) {
  if (m_ladder.twice() < -J.twice() + 2 || m_ladder.twice() > J.twice())
    throw std::invalid_argument("fg_product_q1: M outside ladder [-J+1, J]");
  double jv = j.value(), Jv = J.value(), M = m_ladder.value();
  double bracket = 2 * jv * jv + 2 * jv - 1 - 4 * Jv * Jv - 4 * Jv - 4 * M * M + 4 * M +
                   8 * (1 - 2 * M) * c - 24 * c * c;
  double n2 = static_cast<double>(n_particles) * n_particles;
  return (Jv - M + 1) * (Jv + M) * bracket / n2;
}

Rational fg_product_q2(HalfInt j, HalfInt j_prime, HalfInt m_prime, int n_particles) {
  Rational n2(4LL * n_particles * n_particles);
  if (!j_prime.is_integer()) {
    if (j_prime != j)
      throw std::invalid_argument("fg_product_q2: half-integer case requires J' = j");
    if (m_prime.twice() < -j.twice() || m_prime.twice() > j.twice())
      throw std::invalid_argument("fg_product_q2: m outside [-j, j]");
    Rational jr = j.rational(), m = m_prime.rational();
    return (jr + m) * (jr + m - 1) * (jr - m + 1) * (jr - m + 2) / n2;
  }
  if (!(j_prime - m_prime).is_integer())
    throw std::invalid_argument("fg_product_q2: M' parity incompatible with J'");
  if (m_prime.twice() < -j_prime.twice() || m_prime.twice() > j_prime.twice())
    throw std::invalid_argument("fg_product_q2: M' outside [-J', J']");
  Rational jr = j.rational(), Jp = j_prime.rational(), M = m_prime.rational();
  long steps = (j_prime.twice() - m_prime.twice()) / 2;
  if (steps % 2 == 0) {
    // M' = J', J'-2, ..., same parity as J'
    return (Jp - M + 2) * (Jp + M) * (2 * jr * jr + 2 * jr - 1 - Jp * Jp - 2 * Jp - M * M + 2 * M) /
           n2;
  }
  return (Jp - M + 1) * (Jp + M - 1) * (2 * jr * jr + 2 * jr - Jp * Jp - M * M + 2 * M) / n2;
}

std::pair<Rational, Rational> casimir_eigenvalues_q2(HalfInt j, int n, int n_particles) {
  Rational n2(2LL * n_particles * n_particles);
  Rational jv = jj1(j);
  Rational even = Rational(n) * (n + 2) * (jv - Rational((n + 1) * (n + 1), 2)) / n2;
  Rational odd = Rational(n - 1) * (n + 1) * (jv - Rational(n * n, 2)) / n2;
  return {even, odd};
}

Rational casimir_eigenvalue_half_integer(HalfInt j, int n_particles) {
  Rational jr = j.rational();
  return jr * (jr - 1) * (jr + 1) * (jr + 2) / Rational(4LL * n_particles * n_particles);
}

RepMatrices rep_matrices(const RepLabel& rep) {
  if (rep.q != 1) throw std::invalid_argument("rep_matrices: only q=1 reps have this realization");
  int dim = rep.J.twice() + 1;
  RepMatrices m;
  m.j0 = Eigen::MatrixXd::Zero(dim, dim);
  m.jplus = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    HalfInt M = HalfInt::from_twice(rep.J.twice() - 2 * i);  // M = J - i
    m.j0(i, i) = M.value() + rep.c.value;
    if (i >= 1) {
      double fg = fg_product_q1(rep.j, rep.J, rep.c.value, M + HalfInt::from_twice(2),
                                rep.n_particles);
      if (fg < -1e-12)
        throw std::invalid_argument("rep_matrices: negative ladder product, no real realization");
      m.jplus(i - 1, i) = std::sqrt(std::max(0.0, fg));
    }
  }
  m.jminus = m.jplus.transpose();
  return m;
}

double verify_commutators(const RepLabel& rep, const PolyAlgebraParams& params) {
  RepMatrices m = rep_matrices(rep);
  auto comm = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return a * b - b * a; };
  Eigen::MatrixXd poly = to_double(params.alpha) * m.j0 * m.j0 * m.j0 +
                         to_double(params.beta) * m.j0 * m.j0 + to_double(params.gamma) * m.j0 +
                         to_double(params.shift_term) *
                             Eigen::MatrixXd::Identity(m.j0.rows(), m.j0.cols());
  double r1 = (comm(m.j0, m.jplus) - m.jplus).cwiseAbs().maxCoeff();
  double r2 = (comm(m.j0, m.jminus) + m.jminus).cwiseAbs().maxCoeff();
  double r3 = (comm(m.jplus, m.jminus) - poly).cwiseAbs().maxCoeff();
  return std::max({r1, r2, r3});
}

namespace {

Eigen::VectorXd casimir_diagonal(const Eigen::MatrixXd& j0, const Eigen::MatrixXd& jp,
                                 const Eigen::MatrixXd& jm, const PolyAlgebraParams& p) {
  double a = to_double(p.alpha), b = to_double(p.beta), g = to_double(p.gamma),
         dd = to_double(p.shift_term);
  Eigen::MatrixXd j02 = j0 * j0;
  Eigen::MatrixXd c = jp * jm + (a / 4) * j02 * j02 + (b / 3 - a / 2) * j02 * j0 +
                      (a / 4 - b / 2 + g / 2) * j02 + (b / 6 - g / 2 + dd) * j0;
  Eigen::MatrixXd off = c - c.diagonal().asDiagonal().toDenseMatrix();
  if (off.cwiseAbs().maxCoeff() > 1e-10 * (1.0 + c.cwiseAbs().maxCoeff()))
    throw std::runtime_error("Casimir is not diagonal on the rep basis");
  return c.diagonal();
}

}  // namespace

Eigen::VectorXd casimir_spectrum(const RepLabel& rep, const PolyAlgebraParams& params) {
  RepMatrices m = rep_matrices(rep);
  return casimir_diagonal(m.j0, m.jplus, m.jminus, params);
}

Eigen::VectorXd casimir_spectrum_q2_multiplet(HalfInt j, int n_particles) {
  check_lmg_sector(n_particles, j);
  int dim = j.twice() + 1;
  Eigen::MatrixXd j0 = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd jp = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    HalfInt m = HalfInt::from_twice(-j.twice() + 2 * i);
    j0(i, i) = m.value() / 2.0;
    if (i + 2 < dim) {
      // J+ = j+^2 / 2N on the multiplet
      double amp = 1.0 / (2.0 * n_particles);
      double x = amp * std::sqrt(static_cast<double>(
                           ((j.twice() - m.twice()) / 2 - 1) * ((j.twice() - m.twice()) / 2) *
                           ((j.twice() + m.twice()) / 2 + 1) * ((j.twice() + m.twice()) / 2 + 2)));
      jp(i + 2, i) = x;
    }
  }
  return casimir_diagonal(j0, jp, jp.transpose(), lmg_params(n_particles, j));
}

std::vector<RepLabel> decompose(HalfInt j, int n_particles) {
  check_lmg_sector(n_particles, j);
  std::vector<RepLabel> out;
  if (j.twice() == 0) {
    out.push_back({1, HalfInt(0), ShiftC::zero(), j, n_particles, true});
    return out;
  }
  if (j.is_integer()) {
    int n = j.twice() / 2;
    out.push_back({1, HalfInt::from_twice(n), ShiftC::zero(), j, n_particles, true});
    out.push_back({1, HalfInt::from_twice(n - 1), ShiftC::zero(), j, n_particles, true});
  } else {
    int n = (j.twice() - 1) / 2;  // j = n + 1/2
    out.push_back({1, HalfInt::from_twice(n), ShiftC::from_rational(Rational(1, 4)), j,
                   n_particles, true});
    out.push_back({1, HalfInt::from_twice(n), ShiftC::from_rational(Rational(-1, 4)), j,
                   n_particles, true});
  }
  return out;
}

GeneralRep general_rep(const PolyAlgebraParams& params, int q, HalfInt J, int l, int d) {
  if (q != 1 && q != 2) throw std::invalid_argument("general_rep: q must be 1 or 2");
  if (l < 0 || l >= q) throw std::invalid_argument("general_rep: l must be in [0, q-1]");
  if (d < 0) throw std::invalid_argument("general_rep: d must be >= 0");
  int num = J.twice() - d - l;  // 2J - d - l
  if (num < 0 || num % q != 0)
    throw std::invalid_argument("general_rep: (2J - d - l)/q is not a nonnegative integer");
  int k_max = num / q;

  Rational a = params.alpha, b = params.beta, g = params.gamma, dl = params.shift_term;
  Rational Jr = J.rational(), lr(l), dr(d), qr(q);

  // Highest-weight constraint: cubic in c.
  Rational c3 = a;
  Rational c2 = a * 3 * (dr - lr) / (2 * qr) + b;
  Rational c1 = a * ((Jr * Jr - Jr * (dr + lr) + lr * lr - dr * lr + dr * dr) / (qr * qr) +
                     (2 * Jr - dr - lr) / (2 * qr)) +
                b * (dr - lr) / qr + g;
  Rational c0 = a * ((2 * Jr * Jr * (dr - lr) - 2 * Jr * (dr * dr - lr * lr) + dr * dr * dr -
                      dr * dr * lr + dr * lr * lr - lr * lr * lr) /
                         (4 * qr * qr * qr) +
                     (lr * lr - dr * dr + 2 * Jr * (dr - lr)) / (4 * qr * qr)) +
                b * ((Jr * Jr - Jr * (dr + lr) + dr * dr - dr * lr + lr * lr) / (3 * qr * qr) +
                     (2 * Jr - dr - lr) / (6 * qr)) +
                g * (dr - lr) / (2 * qr) + dl;

  // Real roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0 via the companion matrix.
  std::vector<double> coeffs{to_double(c0), to_double(c1), to_double(c2), to_double(c3)};
  while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-300) coeffs.pop_back();
  std::vector<double> roots;
  int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 0) {
    if (std::abs(coeffs[0]) > 1e-12)
      throw std::runtime_error("general_rep: constraint has no solution for c");
    roots.push_back(0.0);  // identically satisfied; c free, take 0
  } else {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    for (int i = 0; i < deg; ++i) {
      auto z = es.eigenvalues()(i);
      if (std::abs(z.imag()) < 1e-9 * (1.0 + std::abs(z))) {
        bool dup = false;
        for (double r : roots) dup = dup || std::abs(r - z.real()) < 1e-9;
        if (!dup) roots.push_back(z.real());
      }
    }
    if (roots.empty()) throw std::runtime_error("general_rep: no real c satisfies the constraint");
  }

  GeneralRep out;
  double av = to_double(a), bv = to_double(b), gv = to_double(g), dv = to_double(dl);
  for (double c : roots) {
    out.c_roots.push_back(c);
    double t = (J.value() - l) / q + c;
    std::vector<double> prods;
    for (int k = 0; k <= k_max; ++k) {
      double p = (k + 1) * (av * t * t * t + bv * t * t + gv * t + dv -
                            0.5 * (3 * av * t * t + 2 * bv * t + gv) * k +
                            (3 * av * t + bv) * k * (2 * k + 1) / 6.0 -
                            av / 4.0 * k * k * (k + 1));
      prods.push_back(p);
    }
    out.products.push_back(std::move(prods));
  }
  return out;
}

std::vector<RepLabel> enumerate_supplementary(HalfInt j, int n_particles, HalfInt j_max) {
  if (j_max.twice() < 0) throw std::invalid_argument("enumerate_supplementary: J_max must be >= 0");
  std::vector<RepLabel> lmg;
  if (j.twice() <= n_particles && (j.twice() - n_particles) % 2 == 0)
    lmg = decompose(j, n_particles);
  std::vector<RepLabel> out;
  for (int twice_J = 0; twice_J <= j_max.twice(); ++twice_J) {
    HalfInt J = HalfInt::from_twice(twice_J);
    for (const ShiftC& c : c_values(j, J)) {
      bool admissible = true;
      for (int tm = -twice_J + 2; tm <= twice_J; tm += 2) {
        if (fg_product_q1(j, J, c.value, HalfInt::from_twice(tm), n_particles) < -1e-12) {
          admissible = false;
          break;
        }
      }
      if (!admissible) continue;
      RepLabel rep{1, J, c, j, n_particles, false};
      for (const RepLabel& r : lmg)
        if (r.J == J && std::abs(r.c.value - c.value) < 1e-9) rep.is_lmg = true;
      out.push_back(rep);
    }
  }
  return out;
}

}  // namespace lmg::algebra
