// Acceptance run: writes every artifact under <out>/run1, re-runs itself into <out>/run2,
// and prints one PASS/FAIL line per criterion.

#include "kr/reports.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace kr;
namespace fs = std::filesystem;

namespace {

struct Line {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

struct Run {
  fs::path dir;
  Line c[10];
  std::map<std::string, double> seconds;

  void write(const std::string& file, const std::string& text) {
    std::ofstream f(dir / file, std::ios::binary);
    f << text;
  }
  void write(const std::string& file, const Json& j) { write(file, j.dump(2) + "\n"); }
};

RunConfig config(const std::string& algebra) {
  RunConfig c;
  c.algebra = algebra;
  return c;
}

std::string short_violations(const Json& r, size_t n = 4) {
  Json v = Json::array();
  for (size_t i = 0; i < r["violations"].size() && i < n; ++i) v.push_back(r["violations"][i]);
  return v.dump();
}

template <class F>
Json timed(Run& run, const std::string& key, F f) {
  auto t0 = std::chrono::steady_clock::now();
  Json r = f();
  run.seconds[key] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void criterion1(Run& run) {
  double total = 0;
  for (auto [alg, a, b] : {std::tuple{"e36", -2, 4}, std::tuple{"e38", -3, 4}, std::tuple{"e510", -2, 4}}) {
    RunConfig c = config(alg);
    c.window_set = true;
    c.jmin = a;
    c.jmax = b;
    Json r = timed(run, std::string("jacobi_") + alg, [&] { return report_jacobi(c); });
    total += run.seconds[std::string("jacobi_") + alg];
    run.write(std::string("c1_jacobi_") + alg + ".json", r);
    if (report_failed(r)) run.c[1].fail(std::string(alg) + " " + short_violations(r));
  }
  if (total > 600) run.c[1].fail("runtime over 10 minutes");
}

void criterion2(Run& run) {
  for (const char* alg : {"e36", "e38"}) {
    Json r = report_relations(config(alg));
    run.write(std::string("c2_relations_") + alg + ".json", r);
    if (report_failed(r)) run.c[2].fail(std::string(alg) + " " + short_violations(r));
  }
}

void criterion3(Run& run) {
  Json r = report_embedding(config("e36"));
  run.write("c3_embedding.json", r);
  if (report_failed(r)) run.c[3].fail(short_violations(r));
  if (r["counts"].value("kernel_dim", -1L) != 2) run.c[3].fail("kernel dimension is not 2");
}

void criterion4(Run& run, Workspace& w38, Workspace& w510) {
  RunConfig c38 = config("e38"), c510 = config("e510");
  Json r = report_singular(w38, c38);
  run.write("c4_singular_e38.json", r);
  if (report_failed(r)) run.c[4].fail("e38 " + short_violations(r));
  r = report_singular(w510, c510);
  run.write("c4_singular_e510.json", r);
  if (report_failed(r)) run.c[4].fail("e510 " + short_violations(r));
  RunConfig raw = c510;
  raw.name = "nablaA_raw";
  r = report_singular(w510, raw);
  run.write("c4_singular_nablaA_raw.json", r);
  if (!report_failed(r)) run.c[4].fail("nablaA on raw S_A passed the singular-vector test");
}

void criterion5(Run& run, Workspace& w38, Workspace& w510) {
  RunConfig c38 = config("e38");
  Json r = report_nilpotent(w38, c38);
  run.write("c5_nilpotent_e38.json", r);
  if (report_failed(r)) run.c[5].fail("e38 " + short_violations(r));
  for (const char* k : {"paths_nabla_then_nabla", "paths_nabla2_then_nabla", "paths_nabla_then_nabla2", "paths_nabla3_then_nabla",
                        "paths_nabla_then_nabla3"})
    if (r["counts"].value(k, 0L) == 0) run.c[5].fail(std::string("no compositions for ") + k);
  r = report_nilpotent(w510, config("e510"));
  run.write("c5_nilpotent_e510.json", r);
  if (report_failed(r)) run.c[5].fail("e510 " + short_violations(r));
  r = report_relations(config("e510"));
  run.write("c5_theta_e510.json", r);
  if (report_failed(r)) run.c[5].fail("theta " + short_violations(r));
}

void criterion6(Run& run) {
  Json lit = report_pluecker(config("e510"), true);
  run.write("c6_pluecker.json", lit);
  Json inc = report_pluecker(config("e510"), false);
  run.write("c6_pluecker_incidence.json", inc);
  if (report_failed(lit)) {
    std::string bad;
    for (auto& v : lit["violations"]) bad += (bad.empty() ? "" : " ") + v.dump();
    run.c[6].fail("literal system: " + bad);
  }
  if (report_failed(inc)) run.c[6].fail("with incidence operators: " + short_violations(inc));
  else run.c[6].detail += std::string(run.c[6].detail.empty() ? "" : "; ") + "with incidence operators all bidegrees match";
}

void criterion7(Run& run, Workspace& w510) {
  Json r = report_vanishing(w510, config("e510"));
  run.write("c7_vanishing.json", r);
  if (report_failed(r)) run.c[7].fail(short_violations(r));
}

void criterion8(Run& run, Workspace& w510) {
  RunConfig c = config("e38");
  c.max_udeg = 5;
  Workspace hw(AlgebraId::E38, c.max_udeg + 3);
  FigureGraph g = figure_graph(hw, 1, c.range);
  std::vector<HomologyReport> reps;
  for (const char* n : {"A_m2_n2", "A_m3_n1", "A_m2_n3", "B_m2_n2", "C_m2_n2", "D_m2_n2", "A_m1_n1", "A_m0_n0"})
    reps.push_back(homology_at(hw, g, n, c.max_udeg));
  run.write("c8_homology_e38.csv", homology_csv(reps));
  run.write("c8_homology_e38.json", report_homology(reps, c));
  for (auto& h : reps) {
    auto deg = h.by_degree();
    if (h.node == "A_m1_n1") {
      auto it = std::find_if(deg.begin(), deg.end(), [](auto& p) { return p.second != 0; });
      if (it == deg.end() || it->second != 3) run.c[8].fail("A_m1_n1 lowest homology block is not 3");
    } else if (h.node == "A_m0_n0") {
      if (deg[0] != 1 || !h.partial) run.c[8].fail("A_m0_n0 degree-0 cokernel is not 1 with PARTIAL");
    } else {
      for (auto& [d, v] : deg)
        if (v != 0) run.c[8].fail(h.node + " has homology " + std::to_string(v) + " in U-degree " + std::to_string(d));
    }
  }

  RunConfig p = config("e510");
  p.name = "paths";
  Json r = report_nilpotent(w510, p);
  run.write("c8_paths_e510.json", r);
  if (report_failed(r)) {
    std::string bad;
    for (auto& v : r["violations"]) bad += (bad.empty() ? "" : " ") + v["second"].get<std::string>() + "*" + v["first"].get<std::string>();
    run.c[8].fail("e510 nonzero length-2 paths: " + bad);
  }

  std::vector<std::tuple<std::string, char, int, int>> samples = {
      {"nablaA", 'A', 0, 2}, {"nablaA", 'A', 1, 2}, {"nablaB", 'B', 1, 1}, {"nablaB", 'B', 2, 1}, {"nablaC", 'C', 1, 1}, {"nablaC", 'C', 2, 1}};
  r = report_kernels(w510, p, samples, 1);
  run.write("c8_kernels_e510.json", r);
  if (report_failed(r)) run.c[8].fail("zero kernels " + short_violations(r));
  // Chain starts of B and C, recorded only: their kernels stay zero at this truncation.
  std::vector<std::tuple<std::string, char, int, int>> starts = {{"nablaB", 'B', 1, 0}, {"nablaB", 'B', 2, 0}, {"nablaC", 'C', 1, 0}, {"nablaC", 'C', 2, 0}};
  run.write("c8_kernels_chain_starts_e510.json", report_kernels(w510, p, starts, 3));
}

void figures(Run& run, Workspace& w38, Workspace& w510) {
  RunConfig c = config("e38");
  FigureGraph g1 = figure_graph(w38, 1, c.range);
  run.write("figure1.dot", g1.dot());
  run.write("figure1.json", report_graph(g1, c));
  c = config("e510");
  c.figure = 2;
  FigureGraph g2 = figure_graph(w510, 2, c.range);
  run.write("figure2.dot", g2.dot());
  run.write("figure2.json", report_graph(g2, c));
}

Run emit_all(const fs::path& dir) {
  Run run;
  run.dir = dir;
  fs::create_directories(dir);
  criterion1(run);
  criterion2(run);
  criterion3(run);
  Workspace w38(AlgebraId::E38, 6), w510(AlgebraId::E510, 6);
  criterion4(run, w38, w510);
  criterion5(run, w38, w510);
  criterion6(run);
  criterion7(run, w510);
  criterion8(run, w510);
  figures(run, w38, w510);
  return run;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void compare_runs(const fs::path& a, const fs::path& b, Line& line) {
  std::vector<std::string> files;
  for (auto& e : fs::directory_iterator(a)) files.push_back(e.path().filename().string());
  std::sort(files.begin(), files.end());
  long nb = std::distance(fs::directory_iterator(b), fs::directory_iterator{});
  if (nb != (long)files.size()) line.fail("file sets differ");
  for (auto& f : files) {
    if (!fs::exists(b / f)) line.fail(f + " missing in second run");
    else if (slurp(a / f) != slurp(b / f)) line.fail(f + " differs");
  }
  if (line.pass) line.detail = std::to_string(files.size()) + " files byte-identical";
}

const char* names[10] = {"",
                         "jacobi identity",
                         "bracket relations and Y-eigenvalues",
                         "embeddings",
                         "singular vectors",
                         "nilpotency and theta identities",
                         "Pluecker kernel dimensions",
                         "vanishing of nabla_A and nabla_C",
                         "homology evidence",
                         "determinism"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance run"};
  std::string out = "acceptance_out";
  bool emit_only = false;
  app.add_option("--out", out, "output directory");
  app.add_flag("--emit-only", emit_only, "write artifacts to --out and exit");
  CLI11_PARSE(app, argc, argv);

  if (emit_only) {
    emit_all(out);
    return 0;
  }
  fs::path root = out;
  fs::remove_all(root);
  Run run = emit_all(root / "run1");
  std::string cmd = std::string("\"") + argv[0] + "\" --emit-only --out \"" + (root / "run2").string() + "\"";
  if (std::system(cmd.c_str()) != 0) run.c[9].fail("second run failed");
  else compare_runs(root / "run1", root / "run2", run.c[9]);

  for (auto& [k, s] : run.seconds) std::cout << "time " << k << " " << s << " s\n";
  int failed = 0;
  for (int i = 1; i <= 9; ++i) {
    std::cout << "criterion " << i << " " << (run.c[i].pass ? "PASS" : "FAIL") << " (" << names[i] << ")";
    if (!run.c[i].detail.empty()) std::cout << ": " << run.c[i].detail;
    std::cout << "\n";
    failed += !run.c[i].pass;
  }
  return failed ? 1 : 0;
}
