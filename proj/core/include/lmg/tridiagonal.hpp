#pragma once

#include <vector>

namespace lmg::tridiagonal {

/// All eigenvalues of the real symmetric tridiagonal matrix with the
/// given diagonal and *squared* off-diagonal entries, sorted ascending.
/// Bisection on the Sturm sequence count; each eigenvalue is located to
/// tol * max(1, |E|). Guaranteed convergence for any input.
std::vector<double> eigenvalues(const std::vector<double>& diagonal,
                                const std::vector<double>& off_squared, double tol = 1e-12);

}  // namespace lmg::tridiagonal
