#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static fs::path d = [] {
    fs::path p = fs::temp_directory_path() / ("krtool_test_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return d;
}

Result run(const std::string& args) {
  fs::path out = scratch() / "stdout.txt";
  std::string cmd = std::string("\"") + KRTOOL_PATH + "\" " + args + " > \"" + out.string() + "\" 2> /dev/null";
  int st = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  std::ifstream f(out, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  r.out = s.str();
  return r;
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("jacobi check on E(3,8)") {
  Result r = run("check jacobi --algebra e38 --window -3:2");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["check"] == "jacobi");
  CHECK(j["violations"].empty());
  CHECK(j["status"] == "pass");
  CHECK(j["config"]["window"] == "-3:2");
  for (auto key : {"check", "algebra", "config", "status", "violations", "dimensions"}) CHECK(j.contains(key));
}

TEST_CASE("nilpotency of nabla") {
  Result r = run("check nilpotent --name nabla --algebra e38 --cutoff 6 --range 2");
  CHECK(r.code == 0);
  CHECK(parse(r)["violations"].empty());
}

TEST_CASE("exit code 1 exactly when violations are reported") {
  Result bad = run("check singular --algebra e510 --name nablaA_raw --range 2");
  CHECK(bad.code == 1);
  CHECK_FALSE(parse(bad)["violations"].empty());
  CHECK(parse(bad)["status"] == "fail");
  Result good = run("check singular --algebra e510 --name nablaA --range 2");
  CHECK(good.code == 0);
  CHECK(parse(good)["violations"].empty());
}

TEST_CASE("figure 2 DOT output") {
  Result r = run("graph --figure 2 --range 4 --format dot");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph figure2", 0) == 0);
  for (int m = 0; m <= 4; ++m) {
    std::string row0 = "arrow_nablaA_A_m" + std::to_string(m) + "_n0_";
    CHECK(r.out.find(row0) == std::string::npos);
  }
  CHECK(r.out.find("arrow_nablaA_A_m1_n1_A_m1_n0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("check").code == 2);
  CHECK(run("check jacobi --algebra e99").code == 2);
  CHECK(run("check jacobi --no-such-flag").code == 2);
  CHECK(run("check jacobi --window 3").code == 2);
  CHECK(run("homology --node Z_m9_n9").code == 2);
  CHECK(run("graph --format csv").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output is byte-identical across runs") {
  const char* args = "homology --figure 1 --range 2 --max-udeg 2 --format csv";
  Result a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("node,block_degree,weight,dim_ker,dim_im,dim_H,partial\n", 0) == 0);
  Result c = run("graph --figure 1 --range 2"), d = run("graph --figure 1 --range 2");
  CHECK(c.out == d.out);
}

TEST_CASE("config file with flags taking precedence") {
  fs::path cfg = scratch() / "run.toml";
  std::ofstream(cfg) << "[check.jacobi]\nalgebra = \"e36\"\nwindow = \"-2:1\"\n";
  Result r = run("--config \"" + cfg.string() + "\" check jacobi");
  CHECK(r.code == 0);
  CHECK(parse(r)["algebra"] == "e36");
  CHECK(parse(r)["config"]["window"] == "-2:1");
  Result o = run("--config \"" + cfg.string() + "\" check jacobi --algebra e510");
  CHECK(parse(o)["algebra"] == "e510");
}
