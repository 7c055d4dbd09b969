// lmg: exact spectra of the two-level N-fermion pairing model by three
// cross-checking routes (full configuration space, su(2) j blocks, and
// the deformed-algebra block splitting).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lmg/fock.hpp"
#include "lmg/poly_algebra.hpp"
#include "lmg/quasispin.hpp"
#include "lmg/spectra.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Labels are serialized losslessly: "7/2" for half-integers, "1/4" for
// the quarter shifts, decimals only for irrational supplementary c.
std::string fmt_c(double c) {
  if (c == 0.0) return "0";
  if (std::abs(c - 0.25) < 1e-15) return "1/4";
  if (std::abs(c + 0.25) < 1e-15) return "-1/4";
  return fmt17(c);
}

struct OutputSink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path, std::ios::binary);
    if (!file) return false;
    os = &file;
    return true;
  }
};

int write_output(const std::string& path, const std::string& body) {
  OutputSink sink;
  if (!sink.open(path)) {
    std::cerr << "error: cannot open output path '" << path << "'\n";
    return kExitConfig;
  }
  *sink.os << body;
  return 0;
}

struct CommonOpts {
  int n = 0;
  double delta = 0.0;
  double tol = 1e-9;
  std::string format = "csv";
  std::string out;
  double epsilon = 0.0;  // 0 means epsilon-relative units
};

void add_output_flags(CLI::App* cmd, CommonOpts& opt) {
  cmd->add_option("--tol", opt.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out, "output file path (default stdout)");
  cmd->add_option("--epsilon", opt.epsilon,
                  "emit absolute energies scaled by this level splitting "
                  "(default: energies in units of epsilon)")
      ->check(CLI::PositiveNumber);
}

double unit_scale(const CommonOpts& opt) { return opt.epsilon > 0.0 ? opt.epsilon : 1.0; }
std::string unit_name(const CommonOpts& opt) {
  return opt.epsilon > 0.0 ? "absolute" : "epsilon";
}

int cmd_spectrum(const CommonOpts& opt) {
  lmg::ModelParams params{opt.n, 1.0, opt.delta};
  lmg::Spectrum spec = lmg::spectra::full_spectrum(params);
  double scale = unit_scale(opt);
  std::string body;
  if (opt.format == "json") {
    nlohmann::json j;
    j["params"] = {{"n", opt.n}, {"delta", opt.delta}};
    j["units"] = unit_name(opt);
    if (opt.epsilon > 0.0) j["params"]["epsilon"] = opt.epsilon;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : spec.entries) {
      j["entries"].push_back({{"j", e.label->j.str()},
                              {"J", e.label->J->str()},
                              {"c", fmt_c(e.label->c)},
                              {"energy", e.energy * scale},
                              {"degeneracy", e.degeneracy}});
    }
    body = j.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "j,J,c,energy,degeneracy\n";
    for (const auto& e : spec.entries)
      csv << e.label->j.str() << "," << e.label->J->str() << "," << fmt_c(e.label->c) << ","
          << fmt17(e.energy * scale) << "," << e.degeneracy << "\n";
    body = csv.str();
  }
  return write_output(opt.out, body);
}

int cmd_sweep(const CommonOpts& opt, double dmin, double dmax, int steps) {
  if (dmin > dmax) {
    std::cerr << "error: --delta-min must be <= --delta-max\n";
    return kExitConfig;
  }
  std::vector<double> grid;
  for (int i = 0; i < steps; ++i)
    grid.push_back(steps == 1 ? dmin : dmin + (dmax - dmin) * i / (steps - 1));
  lmg::ModelParams params{opt.n, 1.0, 0.0};
  auto rows = lmg::spectra::sweep(params, grid);
  double scale = unit_scale(opt);
  if (opt.format == "json") {
    nlohmann::json j;
    j["params"] = {{"n", opt.n}, {"delta_min", dmin}, {"delta_max", dmax}, {"steps", steps}};
    j["units"] = unit_name(opt);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"delta", r.delta},
                           {"j", r.j.str()},
                           {"J", r.J.str()},
                           {"c", fmt_c(r.c)},
                           {"index", r.index},
                           {"energy", r.energy * scale}});
    return write_output(opt.out, j.dump(2) + "\n");
  }
  std::ostringstream csv;
  csv << "delta,j,J,c,index,energy\n";
  for (const auto& r : rows)
    csv << fmt17(r.delta) << "," << r.j.str() << "," << r.J.str() << "," << fmt_c(r.c) << ","
        << r.index << "," << fmt17(r.energy * scale) << "\n";
  return write_output(opt.out, csv.str());
}

int cmd_verify(int n_max, double tol, const std::string& out) {
  std::ostringstream rep;
  bool ok = true;
  std::string first_failure;
  auto check = [&](const std::string& name, double residual, double bound) {
    bool pass = residual <= bound;
    rep << (pass ? "  ok   " : "  FAIL ") << name << ": residual " << fmt17(residual)
        << " (bound " << fmt17(bound) << ")\n";
    if (!pass && ok) first_failure = name;
    ok = ok && pass;
  };

  const std::vector<double> deltas{0.0, 1.0, 3.0};
  for (int n = 1; n <= n_max; ++n) {
    rep << "N = " << n << "\n";
    for (double delta : deltas) {
      lmg::ModelParams params{n, 1.0, delta};
      auto brute = lmg::fock::brute_force_spectrum(params).energies();
      auto blocks = lmg::quasispin::assembled_spectrum(params).energies();
      auto split = lmg::spectra::full_spectrum(params).energies();
      std::string tag = " (delta=" + fmt17(delta) + ")";
      check("fock vs j-block multiset" + tag, lmg::multiset_distance(brute, blocks), tol);
      check("fock vs algebra-split multiset" + tag, lmg::multiset_distance(brute, split), tol);
    }
    // Algebra identities, independent of delta.
    auto ops = lmg::fock::build_operators(n);
    auto comm = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return a * b - b * a; };
    check("[j+,j-] - 2 j0", (comm(ops.jplus, ops.jminus) - 2 * ops.j0).cwiseAbs().maxCoeff(),
          1e-12);
    check("[H, j^2]",
          comm(lmg::fock::hamiltonian(ops, 1.0), ops.j2).cwiseAbs().maxCoeff(), 1e-12);
    for (const auto& mult : lmg::quasispin::multiplicities(n)) {
      auto params_alg = lmg::algebra::lmg_params(n, mult.j);
      for (const auto& r : lmg::algebra::decompose(mult.j, n)) {
        std::string name = "commutators j=" + mult.j.str() + " J=" + r.J.str() +
                           " c=" + fmt_c(r.c.value);
        check(name, lmg::algebra::verify_commutators(r, params_alg), 1e-12);
        auto cas = lmg::algebra::casimir_spectrum(r, params_alg);
        double spread = cas.maxCoeff() - cas.minCoeff();
        check("Casimir scalar j=" + mult.j.str() + " J=" + r.J.str(), spread,
              1e-12 * (1.0 + cas.cwiseAbs().maxCoeff()));
      }
    }
  }
  rep << (ok ? "PASS" : std::string("FAIL: ") + first_failure) << "\n";
  int rc = write_output(out, rep.str());
  if (rc != 0) return rc;
  return ok ? 0 : kExitVerification;
}

int cmd_table(const CommonOpts& opt) {
  lmg::ModelParams params{opt.n, 1.0, opt.delta};
  auto closed = lmg::spectra::closed_form_rows(opt.n);
  std::ostringstream out;
  out << "# eigenvalues for N=" << opt.n << " at delta=" << fmt17(opt.delta)
      << " (units of epsilon)\n";
  out << "j,m_j,J,c,closed_form,eigenvalues\n";
  for (const auto& mult : lmg::quasispin::multiplicities(opt.n)) {
    for (const auto& r : lmg::algebra::decompose(mult.j, opt.n)) {
      std::string expr;
      for (const auto& row : closed)
        if (row.j == mult.j && row.J == r.J) expr = row.expression;
      auto ev = lmg::spectra::eigenvalues(lmg::spectra::build_block(r, params), opt.tol);
      out << mult.j.str() << "," << mult.multiplicity << "," << r.J.str() << ","
          << fmt_c(r.c.value) << ",\"" << expr << "\",\"";
      for (size_t i = 0; i < ev.size(); ++i)
        out << (i ? " " : "") << fmt17(ev[i] * unit_scale(opt));
      out << "\"\n";
    }
  }
  return write_output(opt.out, out.str());
}

int cmd_supplementary(const CommonOpts& opt, const std::string& j_str,
                      const std::string& j_max_str) {
  lmg::HalfInt j = lmg::HalfInt::parse(j_str);
  lmg::HalfInt j_max = lmg::HalfInt::parse(j_max_str);
  lmg::ModelParams params{opt.n, 1.0, opt.delta};
  auto reps = lmg::algebra::enumerate_supplementary(j, opt.n, j_max);
  std::ostringstream out;
  out << "j,J,c,kind,eigenvalues\n";
  for (const auto& r : reps) {
    auto ev = lmg::spectra::eigenvalues(lmg::spectra::build_block(r, params), opt.tol);
    out << r.j.str() << "," << r.J.str() << "," << fmt_c(r.c.value) << ","
        << (r.is_lmg ? "LMG" : "supplementary") << ",\"";
    for (size_t i = 0; i < ev.size(); ++i)
      out << (i ? " " : "") << fmt17(ev[i] * unit_scale(opt));
    out << "\"\n";
  }
  return write_output(opt.out, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of the two-level N-fermion pairing Hamiltonian"};
  app.require_subcommand(1);

  CommonOpts opt;

  auto* spectrum = app.add_subcommand("spectrum", "full spectrum via the algebra split");
  spectrum->add_option("--n", opt.n, "particle number")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--delta", opt.delta, "interaction strength")->check(CLI::NonNegativeNumber);
  add_output_flags(spectrum, opt);

  double dmin = 0.0, dmax = 10.0;
  int steps = 201;
  auto* sweep = app.add_subcommand("sweep", "eigenvalue curves over a delta grid");
  sweep->add_option("--n", opt.n, "particle number")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--delta-min", dmin)->check(CLI::NonNegativeNumber);
  sweep->add_option("--delta-max", dmax)->check(CLI::NonNegativeNumber);
  sweep->add_option("--steps", steps)->check(CLI::PositiveNumber);
  add_output_flags(sweep, opt);

  int n_max = 8;
  auto* verify = app.add_subcommand("verify", "three-way cross-check of all routes");
  verify->add_option("--n-max", n_max, "largest N to verify")->check(CLI::PositiveNumber);
  verify->add_option("--tol", opt.tol, "multiset tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--out", opt.out, "report path (default stdout)");

  auto* table = app.add_subcommand("table", "per-multiplet eigenvalue table");
  table->add_option("--n", opt.n, "particle number")->required()->check(CLI::PositiveNumber);
  table->add_option("--delta", opt.delta)->check(CLI::NonNegativeNumber);
  add_output_flags(table, opt);

  std::string j_str, j_max_str = "6";
  auto* supp = app.add_subcommand("supplementary", "admissible reps beyond the model split");
  supp->add_option("--n", opt.n, "particle number")->required()->check(CLI::PositiveNumber);
  supp->add_option("--j", j_str, "su(2) sector, e.g. 4 or 7/2")->required();
  supp->add_option("--j-max", j_max_str, "largest ladder spin J to scan");
  supp->add_option("--delta", opt.delta)->check(CLI::NonNegativeNumber);
  add_output_flags(supp, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (sweep->parsed()) return cmd_sweep(opt, dmin, dmax, steps);
    if (verify->parsed()) return cmd_verify(n_max, opt.tol, opt.out);
    if (table->parsed()) return cmd_table(opt);
    if (supp->parsed()) return cmd_supplementary(opt, j_str, j_max_str);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
