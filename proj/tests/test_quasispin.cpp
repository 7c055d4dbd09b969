#include <doctest.h>

#include <cmath>

#include "lmg/fock.hpp"
#include "lmg/quasispin.hpp"

using namespace lmg;
using quasispin::build_j_block;
using quasispin::jplus2_element;
using quasispin::multiplicities;

namespace {

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("multiplicities reproduce the N=7 and N=8 tables") {
  auto m7 = multiplicities(7);
  REQUIRE(m7.size() == 4);
  CHECK(m7[0].j == half(7));
  CHECK(m7[0].multiplicity == 1);
  CHECK(m7[1].multiplicity == 6);
  CHECK(m7[2].multiplicity == 14);
  CHECK(m7[3].j == half(1));
  CHECK(m7[3].multiplicity == 14);

  auto m8 = multiplicities(8);
  REQUIRE(m8.size() == 5);
  long long expected[] = {1, 7, 20, 28, 14};
  for (int i = 0; i < 5; ++i) {
    CHECK(m8[i].j == HalfInt(4 - i));
    CHECK(m8[i].multiplicity == expected[i]);
  }
}

TEST_CASE("multiplicities: N=1 is a single spin-1/2") {
  auto m = multiplicities(1);
  REQUIRE(m.size() == 1);
  CHECK(m[0].j == half(1));
  CHECK(m[0].multiplicity == 1);
}

TEST_CASE("multiplicity sum rule over N = 1..12") {
  for (int n = 1; n <= 12; ++n) {
    long long total = 0;
    auto mults = multiplicities(n);
    CHECK(mults.front().multiplicity == 1);  // j = N/2 appears once
    for (const auto& m : mults) {
      CHECK(m.multiplicity >= 1);
      total += m.multiplicity * m.dimension();
    }
    CHECK(total == (1LL << n));
  }
}

TEST_CASE("j+^2 ladder matrix elements") {
  CHECK(jplus2_element(half(3), half(-3)) == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(jplus2_element(HalfInt(1), HalfInt(-1)) == doctest::Approx(2.0));
  CHECK(jplus2_element(half(1), half(-1)) == 0.0);  // no room to raise by 2
  CHECK(jplus2_element(half(5), half(5)) == 0.0);
  CHECK_THROWS_AS(jplus2_element(HalfInt(1), HalfInt(2)), std::invalid_argument);
}

TEST_CASE("j=1/2 block has eigenvalues +-1/2 for any delta") {
  for (double delta : {0.0, 1.0, 7.5}) {
    ModelParams p{7, 1.0, delta};
    Eigen::MatrixXd h = build_j_block(half(1), p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-0.5));
    CHECK(es.eigenvalues()(1) == doctest::Approx(0.5));
  }
}

TEST_CASE("j=1 block of N=8 matches the closed form") {
  for (double delta : {0.0, 1.0, 3.0}) {
    ModelParams p{8, 1.0, delta};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_j_block(HalfInt(1), p));
    double r = std::sqrt(1.0 + delta * delta / 64.0);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-r).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(es.eigenvalues()(2) == doctest::Approx(r).epsilon(1e-12));
  }
}

TEST_CASE("delta=0 blocks are diagonal with eigenvalues m = -j..j") {
  ModelParams p{8, 1.0, 0.0};
  for (const auto& mult : multiplicities(8)) {
    Eigen::MatrixXd h = build_j_block(mult.j, p);
    for (int i = 0; i < h.rows(); ++i)
      for (int k = 0; k < h.cols(); ++k)
        if (i != k) CHECK(h(i, k) == 0.0);
    for (int i = 0; i < h.rows(); ++i)
      CHECK(h(i, i) == doctest::Approx(-mult.j.value() + i));
  }
}

TEST_CASE("blocks are symmetric") {
  ModelParams p{7, 1.0, 2.5};
  for (const auto& mult : multiplicities(7)) {
    Eigen::MatrixXd h = build_j_block(mult.j, p);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("build_j_block rejects j > N/2") {
  ModelParams p{4, 1.0, 1.0};
  CHECK_THROWS_AS(build_j_block(HalfInt(3), p), std::invalid_argument);
  CHECK_THROWS_AS(build_j_block(half(3), p), std::invalid_argument);  // parity mismatch
}

TEST_CASE("assembled block spectrum equals the brute-force spectrum") {
  for (int n : {2, 3, 5, 6}) {
    for (double delta : {0.0, 1.0}) {
      ModelParams p{n, 1.0, delta};
      auto a = quasispin::assembled_spectrum(p).energies();
      auto b = fock::brute_force_spectrum(p).energies();
      CHECK(multiset_distance(a, b) < 1e-9);
    }
  }
}
