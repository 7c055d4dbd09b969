#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef LMG_CLI_PATH
#error "LMG_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LMG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("spectrum --n 8 --delta 1 accounts for all 256 states") {
  auto r = run("spectrum --n 8 --delta 1 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["params"]["n"] == 8);
  CHECK(j["units"] == "epsilon");
  long long total = 0;
  for (const auto& e : j["entries"]) {
    total += e["degeneracy"].get<long long>();
    CHECK(e.contains("j"));
    CHECK(e.contains("J"));
    CHECK(e.contains("c"));
    CHECK(e.contains("energy"));
  }
  CHECK(total == 256);
}

TEST_CASE("spectrum --n 1 --delta 5 gives +-1/2") {
  auto r = run("spectrum --n 1 --delta 5 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["energy"].get<double>() == doctest::Approx(-0.5));
  CHECK(j["entries"][1]["energy"].get<double>() == doctest::Approx(0.5));
  CHECK(j["entries"][0]["j"] == "1/2");
}

TEST_CASE("identical config produces byte-identical output") {
  auto a = run("spectrum --n 7 --delta 2 --format json");
  auto b = run("spectrum --n 7 --delta 2 --format json");
  CHECK(a.out == b.out);
  auto c = run("sweep --n 7 --delta-min 0 --delta-max 3 --steps 7");
  auto d = run("sweep --n 7 --delta-min 0 --delta-max 3 --steps 7");
  CHECK(c.out == d.out);
}

TEST_CASE("sweep CSV header and row count") {
  auto r = run("sweep --n 7 --delta-min 0 --delta-max 1 --steps 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("delta,j,J,c,index,energy\n", 0) == 0);
  // 3 grid points x 20 block eigenvalues (block dims 4+4+3+3+2+2+1+1)
  CHECK(count_lines(r.out) == 1 + 3 * 20);
}

TEST_CASE("epsilon flag rescales energies") {
  auto rel = run("spectrum --n 2 --delta 0 --format json");
  auto abs = run("spectrum --n 2 --delta 0 --format json --epsilon 2.0");
  auto jr = nlohmann::json::parse(rel.out);
  auto ja = nlohmann::json::parse(abs.out);
  CHECK(ja["units"] == "absolute");
  CHECK(ja["entries"][0]["energy"].get<double>() ==
        doctest::Approx(2.0 * jr["entries"][0]["energy"].get<double>()));
}

TEST_CASE("exit codes: config errors give 2") {
  CHECK(run("spectrum").exit_code == 2);             // missing --n
  CHECK(run("spectrum --n 0").exit_code == 2);       // invalid N
  CHECK(run("bogus-command").exit_code == 2);
  CHECK(run("spectrum --n 2 --out /nonexistent-dir/x.csv").exit_code == 2);
}

TEST_CASE("verify --n-max 2 passes with exact zeros at delta=0") {
  auto r = run("verify --n-max 2 --tol 1e-9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("table --n 8 prints closed forms alongside numeric rows") {
  auto r = run("table --n 8 --delta 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("sqrt(4 + (3/16) d^2)") != std::string::npos);
  CHECK(r.out.find("2,20,") != std::string::npos);  // j=2, m_j=20
}

TEST_CASE("supplementary lists LMG reps and admissible extras") {
  auto r = run("supplementary --n 8 --j 4 --j-max 6 --delta 1");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find(",LMG,") != std::string::npos);
  CHECK(r.out.find(",supplementary,") != std::string::npos);
}
