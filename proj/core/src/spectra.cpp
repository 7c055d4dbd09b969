#include "lmg/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "lmg/quasispin.hpp"
#include "lmg/tridiagonal.hpp"

namespace lmg::spectra {

namespace {

DeltaPoly dp_add(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

DeltaPoly dp_scale(const DeltaPoly& a, const Rational& s) {
  DeltaPoly out = a;
  for (auto& x : out) x *= s;
  return out;
}

DeltaPoly dp_mul(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.empty() || b.empty()) return {};
  DeltaPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

using EPoly = std::vector<DeltaPoly>;  // index = power of E

}  // namespace

HamiltonianBlock build_block(const algebra::RepLabel& rep, const ModelParams& params) {
  params.validate();
  HamiltonianBlock block;
  block.rep = rep;
  block.delta = params.delta;
  int dim = rep.J.twice() + 1;
  bool exact = rep.c.exact.has_value();
  if (exact) {
    block.diagonal_exact.emplace();
    block.fg_exact.emplace();
  }
  double d2 = params.delta * params.delta;
  for (int i = 0; i < dim; ++i) {
    HalfInt m = HalfInt::from_twice(rep.J.twice() - 2 * i);  // M = J - i
    block.diagonal.push_back(2.0 * (m.value() + rep.c.value));
    if (exact) block.diagonal_exact->push_back(2 * (m.rational() + *rep.c.exact));
    if (i >= 1) {
      HalfInt ladder = m + HalfInt::from_twice(2);
      double fg = algebra::fg_product_q1(rep.j, rep.J, rep.c.value, ladder, rep.n_particles);
      if (exact) {
        Rational fgr =
            algebra::fg_product_q1(rep.j, rep.J, *rep.c.exact, ladder, rep.n_particles);
        block.fg_exact->push_back(fgr);
        fg = to_double(fgr);
      }
      if (fg < -1e-12)
        throw std::invalid_argument("build_block: negative ladder product, rep not admissible");
      block.off_products.push_back(d2 * std::max(0.0, fg));
    }
  }
  return block;
}

std::vector<double> eigenvalues(const HamiltonianBlock& block, double tol) {
  return tridiagonal::eigenvalues(block.diagonal, block.off_products, tol);
}

std::vector<DeltaPoly> char_poly(const HamiltonianBlock& block) {
  const int dim = block.dimension();
  if (dim > 8) throw std::invalid_argument("char_poly: exact expansion guarded to dim <= 8");
  if (!block.diagonal_exact || !block.fg_exact)
    throw std::invalid_argument("char_poly: block has no exact rational data (irrational c)");

  EPoly prev{{Rational(1)}};  // p_0 = 1
  EPoly cur{{-(*block.diagonal_exact)[0]}, {Rational(1)}};  // p_1 = E - d_1
  for (int i = 1; i < dim; ++i) {
    // p_i = (E - d_i) p_{i-1} - delta^2 fg_{i-1} p_{i-2}
    EPoly next(cur.size() + 1);
    const Rational& d = (*block.diagonal_exact)[i];
    DeltaPoly e2{Rational(0), (*block.fg_exact)[i - 1]};  // delta^2 * fg
    for (size_t k = 0; k < cur.size(); ++k) {
      next[k + 1] = dp_add(next[k + 1], cur[k]);
      next[k] = dp_add(next[k], dp_scale(cur[k], -d));
    }
    for (size_t k = 0; k < prev.size(); ++k)
      next[k] = dp_add(next[k], dp_scale(dp_mul(e2, prev[k]), Rational(-1)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double eval_delta_poly(const DeltaPoly& p, double delta) {
  double d2 = delta * delta;
  double out = 0.0;
  for (size_t i = p.size(); i-- > 0;) out = out * d2 + to_double(p[i]);
  return out;
}

Spectrum full_spectrum(const ModelParams& params) {
  params.validate();
  Spectrum spec;
  if (params.n_particles > 62)
    throw std::invalid_argument("full_spectrum: state accounting exceeds the 64-bit range");
  for (const JMultiplet& mult : quasispin::multiplicities(params.n_particles)) {
    for (const algebra::RepLabel& rep : algebra::decompose(mult.j, params.n_particles)) {
      HamiltonianBlock block = build_block(rep, params);
      for (double e : eigenvalues(block))
        spec.entries.push_back(
            {e, mult.multiplicity, SectorLabel{mult.j, rep.J, rep.c.value}});
    }
  }
  spec.sort();
  long long expected = 1LL << params.n_particles;
  if (spec.total_states() != expected)
    throw std::runtime_error("full_spectrum: state count mismatch");
  return spec;
}

std::vector<SweepRow> sweep(const ModelParams& params, const std::vector<double>& delta_grid) {
  if (delta_grid.empty()) throw std::invalid_argument("sweep: empty delta grid");
  std::vector<SweepRow> rows;
  for (double delta : delta_grid) {
    if (delta < 0.0) throw std::invalid_argument("sweep: delta must be >= 0");
    ModelParams p = params;
    p.delta = delta;
    for (const JMultiplet& mult : quasispin::multiplicities(p.n_particles)) {
      for (const algebra::RepLabel& rep : algebra::decompose(mult.j, p.n_particles)) {
        std::vector<double> ev = eigenvalues(build_block(rep, p));
        for (size_t i = 0; i < ev.size(); ++i)
          rows.push_back({delta, mult.j, rep.J, rep.c.value, static_cast<int>(i), ev[i]});
      }
    }
  }
  return rows;
}

std::vector<DegeneracyCluster> degeneracies(const Spectrum& spectrum, double cluster_tol) {
  std::vector<DegeneracyCluster> out;
  if (spectrum.entries.empty()) return out;
  if (cluster_tol <= 0.0) {
    double radius = std::max(std::abs(spectrum.entries.front().energy),
                             std::abs(spectrum.entries.back().energy));
    cluster_tol = 1e-8 * std::max(1.0, radius);
  }
  DegeneracyCluster cur;
  double acc = 0.0;
  double last = spectrum.entries.front().energy;
  for (const SpectrumEntry& e : spectrum.entries) {
    if (cur.count > 0 && e.energy - last >= cluster_tol) {
      cur.energy = acc / static_cast<double>(cur.count);
      out.push_back(std::move(cur));
      cur = {};
      acc = 0.0;
    }
    cur.count += e.degeneracy;
    acc += e.energy * static_cast<double>(e.degeneracy);
    if (e.label) cur.labels.push_back(*e.label);
    last = e.energy;
  }
  cur.energy = acc / static_cast<double>(cur.count);
  out.push_back(std::move(cur));
  return out;
}

namespace {

std::vector<double> pm(double x) { return {-x, x}; }

}  // namespace

std::vector<ClosedFormRow> closed_form_rows(int n_particles) {
  std::vector<ClosedFormRow> rows;
  if (n_particles == 7) {
    rows.push_back({HalfInt::from_twice(1), HalfInt(0), "+-1/2",
                    [](double) { return pm(0.5); }});
    rows.push_back({HalfInt::from_twice(3), HalfInt::from_twice(1),
                    "+-(1/2 +- sqrt(1 + (3/49) d^2))", [](double d) {
                      double r = std::sqrt(1.0 + 3.0 / 49.0 * d * d);
                      return std::vector<double>{0.5 + r, 0.5 - r, -0.5 + r, -0.5 - r};
                    }});
  } else if (n_particles == 8) {
    rows.push_back({HalfInt(0), HalfInt(0), "0", [](double) { return std::vector<double>{0.0}; }});
    rows.push_back({HalfInt(1), HalfInt(0), "0", [](double) { return std::vector<double>{0.0}; }});
    rows.push_back({HalfInt(1), HalfInt::from_twice(1), "+-sqrt(1 + (1/64) d^2)",
                    [](double d) { return pm(std::sqrt(1.0 + d * d / 64.0)); }});
    rows.push_back({HalfInt(2), HalfInt::from_twice(1), "+-sqrt(1 + (9/64) d^2)",
                    [](double d) { return pm(std::sqrt(1.0 + 9.0 * d * d / 64.0)); }});
    rows.push_back({HalfInt(2), HalfInt(1), "0, +-sqrt(4 + (3/16) d^2)", [](double d) {
                      double r = std::sqrt(4.0 + 3.0 * d * d / 16.0);
                      return std::vector<double>{-r, 0.0, r};
                    }});
    rows.push_back({HalfInt(3), HalfInt(1), "0, +-sqrt(4 + (15/16) d^2)", [](double d) {
                      double r = std::sqrt(4.0 + 15.0 * d * d / 16.0);
                      return std::vector<double>{-r, 0.0, r};
                    }});
    rows.push_back({HalfInt(3), HalfInt::from_twice(3),
                    "+-sqrt(5 + (33/64) d^2 +- sqrt(16 + (3/2) d^2 + (27/128) d^4))",
                    [](double d) {
                      double d2 = d * d;
                      double inner = std::sqrt(16.0 + 1.5 * d2 + 27.0 / 128.0 * d2 * d2);
                      double a = std::sqrt(5.0 + 33.0 / 64.0 * d2 + inner);
                      double b = std::sqrt(5.0 + 33.0 / 64.0 * d2 - inner);
                      return std::vector<double>{-a, -b, b, a};
                    }});
    rows.push_back({HalfInt(4), HalfInt::from_twice(3),
                    "+-sqrt(5 + (113/64) d^2 +- sqrt(16 + (19/2) d^2 + (275/128) d^4))",
                    [](double d) {
                      double d2 = d * d;
                      double inner = std::sqrt(16.0 + 9.5 * d2 + 275.0 / 128.0 * d2 * d2);
                      double a = std::sqrt(5.0 + 113.0 / 64.0 * d2 + inner);
                      double b = std::sqrt(5.0 + 113.0 / 64.0 * d2 - inner);
                      return std::vector<double>{-a, -b, b, a};
                    }});
    rows.push_back({HalfInt(4), HalfInt(2),
                    "0, +-sqrt(10 + (59/32) d^2 +- sqrt(36 - (9/8) d^2 + (2025/1024) d^4))",
                    [](double d) {
                      double d2 = d * d;
                      double inner = std::sqrt(36.0 - 9.0 / 8.0 * d2 + 2025.0 / 1024.0 * d2 * d2);
                      double a = std::sqrt(10.0 + 59.0 / 32.0 * d2 + inner);
                      double b = std::sqrt(10.0 + 59.0 / 32.0 * d2 - inner);
                      return std::vector<double>{-a, -b, 0.0, b, a};
                    }});
  }
  return rows;
}

}  // namespace lmg::spectra
