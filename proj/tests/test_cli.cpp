// Drives the installed command line through the shell.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#ifndef HERGLOTZ_CLI
#error "HERGLOTZ_CLI must name the command-line binary"
#endif
#ifndef HERGLOTZ_GOLDEN_DIR
#error "HERGLOTZ_GOLDEN_DIR must name the golden-output directory"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("herglotz_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// `env` is prepended verbatim, e.g. "HERGLOTZ_TOL=1e-6".
Run run(const std::string& args, const std::string& env = "") {
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string cmd =
      "env -u HERGLOTZ_TOL " + env + " '" + std::string(HERGLOTZ_CLI) + "' " + args + " 2>'" + err.string() + "'";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string golden(const char* name) { return slurp(fs::path(HERGLOTZ_GOLDEN_DIR) / name); }

}  // namespace

TEST_CASE("eval matches the golden csv") {
  const Run r = run("eval --fn digamma --x 0.5,1,2.5");
  CHECK(r.code == 0);
  CHECK(r.out == golden("eval_digamma.csv"));
  CHECK(lines(r.out).front() == "function,x,value,error_estimate,elapsed_ms");
}

TEST_CASE("table and verify match their goldens") {
  const Run t = run("table --fn zeta --range 2:4:3 --format json");
  CHECK(t.code == 0);
  CHECK(t.out == golden("table_zeta.json"));
  const Run v = run("verify --id zagier.2term");
  CHECK(v.code == 0);
  CHECK(v.out == golden("verify_zagier2.csv"));
  CHECK(v.err.find("summary zagier.2term passed 3/3") != std::string::npos);
  const Run k = run("verify --id kloosterman --format json");
  CHECK(k.code == 0);
  CHECK(k.out == golden("verify_kloosterman.json"));
}

TEST_CASE("numbers carry 17 significant digits") {
  const Run r = run("eval --fn zeta --x 2 --tol 1e-12");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].rfind("zeta,2,1.64493406684822", 0) == 0);
}

TEST_CASE("repeated runs are byte identical") {
  const Run a = run("verify --id all --jobs 4");
  const Run b = run("verify --id all --jobs 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == b.err);
  const Run c = run("verify --id all --jobs 1");
  CHECK(a.out == c.out);
}

TEST_CASE("jobs keep input order") {
  const std::string xs = "5,0.3,2,0.7,1,3.5,0.9,4";
  const Run serial = run("eval --fn H.contour --x " + xs + " --jobs 1");
  const Run par = run("eval --fn H.contour --x " + xs + " --jobs 8");
  REQUIRE(serial.code == 0);
  CHECK(serial.out == par.out);
  const auto ls = lines(par.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[1].rfind("H.contour,5,", 0) == 0);
  CHECK(ls[8].rfind("H.contour,4,", 0) == 0);
}

TEST_CASE("tolerance precedence") {
  const Run def = run("eval --fn zeta --x 3");
  const Run env = run("eval --fn zeta --x 3", "HERGLOTZ_TOL=1e-12");
  const Run flag = run("eval --fn zeta --x 3 --tol 1e-12", "HERGLOTZ_TOL=1e-4");
  const Run both = run("eval --fn zeta --x 3 --tol 1e-4", "HERGLOTZ_TOL=1e-12");
  REQUIRE(def.code == 0);
  CHECK(env.out == flag.out);
  CHECK(env.out != def.out);
  CHECK(both.out != env.out);
  CHECK(run("eval --fn zeta --x 3", "HERGLOTZ_TOL=abc").code == 2);
  CHECK(run("eval --fn zeta --x 3", "HERGLOTZ_TOL=-1").code == 2);
}

TEST_CASE("table row counts and spacing") {
  const Run lin = run("table --fn phi0 --range 1:2:5");
  REQUIRE(lin.code == 0);
  const auto a = lines(lin.out);
  CHECK(a.size() == 6);
  CHECK(a[2].rfind("phi0,1.25,", 0) == 0);
  const Run log = run("table --fn phi0 --range 1:100:3:log --format json");
  REQUIRE(log.code == 0);
  CHECK(log.out.find("\"x\": 10,") != std::string::npos);
  CHECK(lines(log.out).size() == 5);
  CHECK(run("table --fn phi0 --range 1:2").code == 2);
  CHECK(run("table --fn phi0 --range 2:1:0").code == 2);
}

TEST_CASE("verify output shape") {
  const Run r = run("verify --id thm1.1 --alphas 0.5,2 --format json");
  REQUIRE(r.code == 0);
  CHECK(r.out.front() == '[');
  CHECK(r.out.find("\"identity\": \"thm1.1\", \"param\": 0.5, \"partner\": 2,") != std::string::npos);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
  const Run c = run("verify --id thm1.1 --alphas 4");
  CHECK(lines(c.out).front() == "identity,param,partner,lhs,rhs,residual,error_estimate,tolerance,pass");
  CHECK(lines(c.out).size() == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("list").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("eval --fn nope --x 1").code == 2);
  CHECK(run("eval --x 1").code == 2);
  CHECK(run("eval --fn digamma --x one").code == 2);
  CHECK(run("eval --fn digamma --x 1 --format xml").code == 2);
  CHECK(run("verify --id nope").code == 2);
  CHECK(run("verify --id all --alphas 1").code == 2);
  CHECK(run("eval --fn digamma --x 1 --tol -1").code == 2);

  const Run pole = run("eval --fn digamma --x 0");
  CHECK(pole.code == 3);
  CHECK(pole.out.empty());
  CHECK(pole.err.find("digamma") != std::string::npos);
  CHECK(run("eval --fn F --x 0.01").code == 3);
  CHECK(run("verify --id wigert --alphas 0,1").code == 3);
  CHECK(run("verify --id wigert --alphas x").code == 3);
  CHECK(run("eval --fn digamma --x 1 --out /nonexistent-dir/out.csv").code == 3);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const fs::path p = scratch_dir() / "out.csv";
  const Run r = run("eval --fn psi1 --x 1,2 --out '" + p.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(p) == run("eval --fn psi1 --x 1,2").out);
}

TEST_CASE("timing fills elapsed_ms only on request") {
  const Run r = run("eval --fn H.single --x 1 --timing");
  REQUIRE(r.code == 0);
  const std::string row = lines(r.out)[1];
  CHECK(row.substr(row.rfind(',') + 1) != "0");
}
