#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "lmg/half_integer.hpp"

namespace lmg {

/// Sector tag for an eigenvalue: su(2) label j, deformed-algebra ladder
/// spin J and shift c. Brute-force spectra carry only j.
struct SectorLabel {
  HalfInt j;
  std::optional<HalfInt> J;
  double c = 0.0;

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

struct SpectrumEntry {
  double energy = 0.0;  // units of epsilon
  long long degeneracy = 1;
  std::optional<SectorLabel> label;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;  // sorted ascending by energy

  long long total_states() const {
    long long n = 0;
    for (const auto& e : entries) n += e.degeneracy;
    return n;
  }

  /// Flat multiset of energies with degeneracies expanded, sorted.
  std::vector<double> energies() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(total_states()));
    for (const auto& e : entries)
      for (long long k = 0; k < e.degeneracy; ++k) out.push_back(e.energy);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Ascending energy; ties broken by (j desc, J desc, c desc) so output
  /// is deterministic.
  void sort() {
    std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
      if (a.energy != b.energy) return a.energy < b.energy;
      int aj = a.label ? a.label->j.twice() : -1;
      int bj = b.label ? b.label->j.twice() : -1;
      if (aj != bj) return aj > bj;
      int aJ = (a.label && a.label->J) ? a.label->J->twice() : -1;
      int bJ = (b.label && b.label->J) ? b.label->J->twice() : -1;
      if (aJ != bJ) return aJ > bJ;
      double ac = a.label ? a.label->c : 0.0;
      double bc = b.label ? b.label->c : 0.0;
      return ac > bc;
    });
  }
};

/// Max absolute elementwise distance between two sorted multisets;
/// +inf on size mismatch.
double multiset_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace lmg
