#include "lmg/spectrum.hpp"

#include <cmath>
#include <limits>

namespace lmg {

double multiset_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double dist = 0.0;
  for (size_t i = 0; i < a.size(); ++i) dist = std::max(dist, std::abs(a[i] - b[i]));
  return dist;
}

}  // namespace lmg
