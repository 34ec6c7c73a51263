#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GDPOLY_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gd table text output") {
  auto r = run_cli("gd table --max-n 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "R_2 = 1/2*u0^2 + 1/12*L^2*u2"));
  CHECK(contains(r.out, "T_2 = 1/6*u0^3 + 1/24*L^2*u1^2"));
}

TEST_CASE("gd table json output") {
  auto r = run_cli("gd table --max-n 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"schema_version\": 1"));
  CHECK(contains(r.out, "\"kind\": \"gd_table\""));
}

TEST_CASE("gd table latex output") {
  auto r = run_cli("gd table --max-n 2 --format latex");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\\frac{1}{12} u_{2x} \\lambda^2"));
}

TEST_CASE("gd verify passes and reports the seed") {
  auto r = run_cli("gd verify --max-n 5 --cases 32 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "all checks passed"));
  CHECK(contains(r.out, "(seed 7)"));
}

TEST_CASE("gd pkl emits the antiderivative") {
  auto r = run_cli("gd pkl --k 1 --l 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "P_{1,1} = 1/2*u0^2"));
}

TEST_CASE("action prints the density and its zero-coupling limit") {
  auto r = run_cli("action --max-n 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "(t1 - 1)*(1/2*u0^2)"));
  CHECK(contains(r.out, "L0 (genus 0, all t = 0) = -1/2*u0^2"));
}

TEST_CASE("string solve default chart") {
  auto r = run_cli("string solve --vars t0,t2 --degree 5 --genus 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "u = t0 + 1/2*t0^2*t2"));
  CHECK(contains(r.out, "1/12*L^2*t2^2"));
}

TEST_CASE("string solve json") {
  auto r = run_cli("string solve --vars t0,t2 --degree 4 --genus 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"vars\""));
  CHECK(contains(r.out, "\"iterations\""));
}

TEST_CASE("string checks pass on the default chart") {
  for (const char* sub :
       {"check-kdv --n 2", "check-puncture", "check-dF"}) {
    auto r = run_cli(std::string("string ") + sub +
                     " --vars t0,t2 --degree 6 --genus 2");
    CAPTURE(sub);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "pass"));
  }
}

TEST_CASE("genus ug latex is verbatim") {
  auto r = run_cli("genus ug --g 2 --format latex");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "\\frac{49}{288} t_2^5 (1-2t_0t_2)^{-9/2}\n");
}

TEST_CASE("genus seq bfile") {
  auto r = run_cli("genus seq --n 5 --bfile");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 1\n2 49\n3 9800\n4 4412401\n5 3530881200\n");
}

TEST_CASE("genus asymptotics csv") {
  auto r = run_cli("genus asymptotics --n 20 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,r_n,rho_n\n", 0) == 0);
}

TEST_CASE("genus diverge text and json") {
  auto r = run_cli("genus diverge --radius 1/10");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n = 21"));
  auto j = run_cli("genus diverge --radius 0.1 --format json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"witness_n\": 21"));
}

TEST_CASE("exit code 1 when no witness fits the depth") {
  auto r = run_cli("genus diverge --radius 1/100 --max-n 10");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "no divergence witness"));
}

TEST_CASE("exit code 2 on invalid configuration") {
  CHECK(run_cli("gd table --max-n -3").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("gd table --format yaml").exit_code == 2);
  CHECK(run_cli("string solve --vars t0,tx").exit_code == 2);
  CHECK(run_cli("genus diverge --radius banana").exit_code == 2);
}

TEST_CASE("cost guard blocks large tables unless overridden") {
  auto blocked = run_cli("gd table --max-n 21");
  CHECK(blocked.exit_code == 2);
  CHECK(contains(blocked.out, "--allow-large"));
  // the override itself parses; keep the n small enough to stay fast
  auto ok = run_cli("gd table --max-n 10 --allow-large");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("gd --help").exit_code == 0);
}

TEST_CASE("deterministic output across runs") {
  auto a = run_cli("string solve --vars t0,t2,t3 --degree 5 --genus 2");
  auto b = run_cli("string solve --vars t0,t2,t3 --degree 5 --genus 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto v1 = run_cli("gd verify --max-n 4 --cases 16 --seed 11");
  auto v2 = run_cli("gd verify --max-n 4 --cases 16 --seed 11");
  CHECK(v1.out == v2.out);
}

TEST_CASE("cache directory round trip through the cli") {
  const std::string dir =
      std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
      "/gdpoly_cli_cache_" + std::to_string(::getpid());
  auto first = run_cli("gd table --max-n 6 --cache-dir " + dir);
  auto second = run_cli("gd table --max-n 6 --cache-dir " + dir);
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.out == second.out);
  std::remove((dir + "/gd_table.json").c_str());
  std::remove(dir.c_str());
}

