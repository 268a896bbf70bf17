#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ISINGTP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string graph(const char* name) { return std::string("--graph ") + ISINGTP_DATA_DIR + "/graphs/" + name + ".json"; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify on the triangle passes every suite") {
    Run r = run("verify " + graph("triangle") + " --suite all");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("suite,identity,inputs,lhs,rhs,holds\n", 0) == 0);
    CHECK(r.out.find(",no\n") == std::string::npos);
  }

  TEST_CASE("pf suite on the 4-cycle reports each subset") {
    Run r = run("verify " + graph("cycle4") + " --suite pf --k-max 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("pf,pfK=S_S/S_0,S=0+1+2+3,") != std::string::npos);
  }

  TEST_CASE("other suites") {
    CHECK(run("verify " + graph("bowtie") + " --suite tnn").code == 0);
    CHECK(run("verify " + graph("path3") + " --suite det --coloring o,b,o").code == 0);
    CHECK(run("verify " + graph("theta") + " --suite flow --k-max 2").code == 0);
  }

  TEST_CASE("input errors exit with 2") {
    std::string bad = std::string(ISINGTP_BINARY_DIR) + "/corrupt.json";
    std::ofstream(bad) << "{\"vertices\": 2, \"edges\": [";
    CHECK(run("verify --graph " + bad).code == 2);
    CHECK(run("verify --graph /nonexistent.json").code == 2);
    CHECK(run("sample " + graph("triangle") + " --samples 10").code == 2);  // seed is mandatory
    CHECK(run("compute corr " + graph("triangle") + " --A 0 --B 9").code == 2);
    CHECK(run("verify " + graph("triangle") + " --coloring o,q,o").code == 2);
  }

  TEST_CASE("capacity errors exit with 3") {
    CHECK(run("scaling --eps 1/40").code == 3);
  }

  TEST_CASE("compute") {
    Run corr = run("compute corr " + graph("triangle") + " --A 0 --B 1");
    CHECK(corr.code == 0);
    CHECK(corr.out == "2/3\n");
    Run k = run("compute matrix --kind K " + graph("cycle4") + " --A 0 --B 2");
    CHECK(k.code == 0);
    CHECK(k.out.rfind("K,0,2\n0,0,", 0) == 0);
    CHECK(std::count(k.out.begin(), k.out.end(), '\n') == 3);
    Run p = run("compute prob-parallel " + graph("cycle4") + " --A 1,2 --B 0,3");
    CHECK(p.code == 0);
    CHECK(p.out == "9/34\n");
  }

  TEST_CASE("sampling is reproducible") {
    std::string args = "sample " + graph("cycle4") + " --A 0,1,2,3 --samples 300 --seed 42";
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("sample_index,omega1,omega2,", 0) == 0);
    Run m1 = run(args + " --mcmc"), m2 = run(args + " --mcmc");
    CHECK(m1.out == m2.out);
  }

  TEST_CASE("scaling") {
    Run one = run("scaling --eps 1/8,1/12 --A 0.3:0 --B 0.7:1");
    CHECK(one.code == 0);
    std::size_t rows = 0;
    for (std::size_t pos = one.out.find('\n'); pos + 1 < one.out.size(); pos = one.out.find('\n', pos + 1)) {
      std::size_t end = one.out.find('\n', pos + 1);
      std::string line = one.out.substr(pos + 1, end - pos - 1);
      std::string gap = line.substr(line.rfind(',') + 1);
      CHECK(std::stod(gap) < 1e-12);
      ++rows;
    }
    CHECK(rows == 2);
    Run two = run("scaling");
    CHECK(two.code == 0);
  }
}
