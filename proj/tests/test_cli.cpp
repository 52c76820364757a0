#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

std::string dsp_bin() {
  const char* p = std::getenv("DSP_BIN");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = dsp_bin() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/dsp_cli_") + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("decide: quaternion problem exits 0 and is byte-stable") {
  auto path = write_temp("quat.json", R"({
    "group": "su", "n": 2, "mode": "both",
    "classes": [["-1/4","1/4"], ["-1/4","1/4"], ["-1/4","1/4"]]
  })");
  auto a = run("decide " + path);
  CHECK(a.code == 0);
  CHECK(a.out.find("\"semistable\": \"YES\"") != std::string::npos);
  CHECK(a.out.find("\"stable\": \"YES\"") != std::string::npos);
  for (int t : {1, 4, 8}) {
    auto b = run("decide " + path + " --threads " + std::to_string(t));
    CHECK(b.code == 0);
    CHECK(b.out == a.out);
  }
}

TEST_CASE("decide: single-point problem exits 1 with a witness state") {
  auto path = write_temp("single.json", R"({
    "group": "sp", "n": 2, "classes": [["-1/4","1/4"]]
  })");
  auto r = run("decide " + path);
  CHECK(r.code == 1);
  CHECK(r.out.find("\"witnesses\"") != std::string::npos);
  CHECK(r.out.find("\"gate\": \"gw=1\"") != std::string::npos);
}

TEST_CASE("decide: malformed rational exits 64") {
  auto path = write_temp("bad.json", R"({
    "group": "su", "n": 2, "classes": [["1/0","0"]]
  })");
  CHECK(run("decide " + path).code == 64);
}

TEST_CASE("gw command") {
  auto r = run("gw --space \"gr(1,2)\" --classes \"1;1;1\" --degree 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\": \"1\"") != std::string::npos);

  auto dual = run("gw --space \"og(2,6)\" --classes \"1,2;5,6\" --degree 0");
  CHECK(dual.code == 0);
  CHECK(dual.out.find("\"value\": \"1\"") != std::string::npos);

  auto graded = run("gw --space \"gr(1,2)\" --classes \"1;1;1\" --degree 0");
  CHECK(graded.out.find("\"graded\": false") != std::string::npos);
  CHECK(graded.out.find("\"value\": \"0\"") != std::string::npos);

  CHECK(run("gw --space \"og(2,6)\" --classes \"1,6;5,6\" --degree 0").code == 64);
}

TEST_CASE("crosscheck ex1 coarse grid is consistent") {
  auto r = run("crosscheck --which ex1 --step 1/4");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"contradictions\": 0") != std::string::npos);
}

TEST_CASE("witness command finds the quaternion tuple") {
  auto path = write_temp("quatw.json", R"({
    "group": "su", "n": 2,
    "classes": [["-1/4","1/4"], ["-1/4","1/4"], ["-1/4","1/4"]]
  })");
  auto r = run("witness " + path + " --budget 50");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"found\": true") != std::string::npos);
  CHECK(r.out.find("\"numeric\"") != std::string::npos);
}
