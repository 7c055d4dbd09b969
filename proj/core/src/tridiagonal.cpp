#include "lmg/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lmg::tridiagonal {

namespace {

// Number of eigenvalues strictly below x, from the sign count of the
// Sturm ratio recurrence q_i = (d_i - x) - e_{i-1}^2 / q_{i-1}.
int count_below(const std::vector<double>& d, const std::vector<double>& e2, double x) {
  int count = 0;
  double q = 1.0;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  for (size_t i = 0; i < d.size(); ++i) {
    q = (i == 0) ? d[0] - x : (d[i] - x) - e2[i - 1] / q;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> eigenvalues(const std::vector<double>& diagonal,
                                const std::vector<double>& off_squared, double tol) {
  const size_t n = diagonal.size();
  if (n == 0) return {};
  if (off_squared.size() + 1 != n)
    throw std::invalid_argument("tridiagonal: need n-1 off-diagonal entries");
  if (tol <= 0.0) throw std::invalid_argument("tridiagonal: tol must be > 0");
  bool diagonal_only = true;
  for (double e2 : off_squared) {
    if (e2 < 0.0) throw std::invalid_argument("tridiagonal: squared off-diagonal must be >= 0");
    diagonal_only = diagonal_only && e2 == 0.0;
  }
  if (diagonal_only) {
    std::vector<double> out = diagonal;
    std::sort(out.begin(), out.end());
    return out;
  }

  // Gershgorin bounds.
  double lo = diagonal[0], hi = diagonal[0];
  for (size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::sqrt(off_squared[i - 1]);
    if (i + 1 < n) r += std::sqrt(off_squared[i]);
    lo = std::min(lo, diagonal[i] - r);
    hi = std::max(hi, diagonal[i] + r);
  }
  double pad = tol * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> out(n);
  for (size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    while (true) {
      double mid = 0.5 * (a + b);
      if (b - a <= tol * std::max(1.0, std::abs(mid)) || mid == a || mid == b) {
        out[k] = mid;
        break;
      }
      if (static_cast<size_t>(count_below(diagonal, off_squared, mid)) > k)
        b = mid;
      else
        a = mid;
    }
  }
  return out;
}

}  // namespace lmg::tridiagonal
