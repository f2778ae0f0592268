// krtool: checks, graphs and homology tables for the E(3,6), E(3,8), E(5,10) computations.

#include "kr/reports.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace kr;

namespace {

struct Opts {
  RunConfig cfg;
  std::string window;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* s, Opts& o) {
  s->add_option("--algebra", o.cfg.algebra, "e36, e38 or e510")->check(CLI::IsMember({"e36", "e38", "e510"}));
  s->add_option("--window", o.window, "degree window jmin:jmax");
  s->add_option("--cutoff", o.cfg.cutoff, "U-degree truncation N")->check(CLI::PositiveNumber);
  s->add_option("--range", o.cfg.range, "coordinate range")->check(CLI::NonNegativeNumber);
  s->add_option("--figure", o.cfg.figure, "1 (E(3,8)) or 2 (E(5,10))")->check(CLI::IsMember({1, 2}));
  s->add_option("--name", o.cfg.name, "morphism family (nabla, nabla2, nabla3, nablaA, nablaB, nablaC, nablaA_raw, paths)");
  s->add_option("--node", o.cfg.node, "node name, e.g. A_m2_n2");
  s->add_option("--max-udeg", o.cfg.max_udeg, "largest U-degree of homology blocks")->check(CLI::NonNegativeNumber);
  s->add_option("--format", o.format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  s->add_option("--out", o.out, "output file (standard output when absent)");
}

void parse_window(Opts& o) {
  if (o.window.empty()) return;
  auto p = o.window.find(':');
  if (p == std::string::npos) throw CLI::ValidationError("--window", "expected jmin:jmax");
  try {
    o.cfg.jmin = std::stoi(o.window.substr(0, p));
    o.cfg.jmax = std::stoi(o.window.substr(p + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--window", "expected integers jmin:jmax");
  }
  if (o.cfg.jmin > o.cfg.jmax) throw CLI::ValidationError("--window", "jmin > jmax");
  o.cfg.window_set = true;
}

void emit(const Opts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

int emit_json(const Opts& o, const Json& r) {
  emit(o, r.dump(2) + "\n");
  return report_failed(r) ? 1 : 0;
}

int run_check(const std::string& kind, Opts& o) {
  RunConfig& c = o.cfg;
  if (kind == "jacobi") return emit_json(o, report_jacobi(c));
  if (kind == "relations") return emit_json(o, report_relations(c));
  if (kind == "embedding") return emit_json(o, report_embedding(c));
  Workspace ws(c.id(), c.cutoff);
  if (kind == "singular") return emit_json(o, report_singular(ws, c));
  return emit_json(o, report_nilpotent(ws, c));
}

void figure_algebra(Opts& o) {
  o.cfg.algebra = o.cfg.figure == 2 ? "e510" : "e38";
}

int run_graph(Opts& o) {
  figure_algebra(o);
  Workspace ws(o.cfg.id(), o.cfg.cutoff);
  FigureGraph g = figure_graph(ws, o.cfg.figure, o.cfg.range);
  if (o.format == "dot") {
    emit(o, g.dot());
    return 0;
  }
  if (o.format == "csv") throw CLI::ValidationError("--format", "graph supports json and dot");
  return emit_json(o, report_graph(g, o.cfg));
}

int run_homology(Opts& o) {
  figure_algebra(o);
  int cutoff = std::max(o.cfg.cutoff, o.cfg.max_udeg + 3);
  Workspace ws(o.cfg.id(), cutoff);
  FigureGraph g = figure_graph(ws, o.cfg.figure, o.cfg.range);
  std::vector<HomologyReport> reps;
  if (!o.cfg.node.empty()) {
    if (!g.has_node(o.cfg.node)) throw CLI::ValidationError("--node", "no node " + o.cfg.node + " in the figure");
    reps.push_back(homology_at(ws, g, o.cfg.node, o.cfg.max_udeg));
  } else {
    for (auto& n : g.nodes) reps.push_back(homology_at(ws, g, n.name, o.cfg.max_udeg));
  }
  if (o.format == "csv") {
    emit(o, homology_csv(reps));
    return 0;
  }
  if (o.format == "dot") throw CLI::ValidationError("--format", "homology supports json and csv");
  return emit_json(o, report_homology(reps, o.cfg));
}

int run_report(Opts& o) {
  RunConfig& c = o.cfg;
  Json r = report_skeleton("report", c);
  std::vector<Json> parts;
  parts.push_back(report_jacobi(c));
  parts.push_back(report_relations(c));
  if (c.id() == AlgebraId::E36) parts.push_back(report_embedding(c));
  if (c.id() != AlgebraId::E36) {
    Workspace ws(c.id(), c.cutoff);
    parts.push_back(report_singular(ws, c));
    parts.push_back(report_nilpotent(ws, c));
  }
  for (auto& p : parts) {
    std::string check = p["check"];
    for (auto& v : p["violations"]) {
      Json w = v;
      w["check"] = check;
      r["violations"].push_back(w);
    }
    r["dimensions"][check] = p["dimensions"];
    r["counts"][check] = p["counts"];
  }
  report_finish(r);
  return emit_json(o, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"krtool: degenerate Verma module computations for E(3,6), E(3,8), E(5,10)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "optional config file with the same keys as the flags");
  Opts o;
  o.cfg.workers = default_workers();
  std::string check_kind;
  auto* check = app.add_subcommand("check", "run a property check");
  check->require_subcommand(1);
  for (const char* k : {"jacobi", "relations", "embedding", "singular", "nilpotent"}) {
    auto* s = check->add_subcommand(k, std::string(k) + " check");
    add_common(s, o);
    s->callback([&check_kind, k] { check_kind = k; });
  }
  auto* graph = app.add_subcommand("graph", "arrow graph of a figure");
  add_common(graph, o);
  auto* hom = app.add_subcommand("homology", "homology table of figure nodes");
  add_common(hom, o);
  auto* rep = app.add_subcommand("report", "all checks for one algebra");
  add_common(rep, o);

  try {
    app.parse(argc, argv);
    parse_window(o);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (check->parsed()) return run_check(check_kind, o);
    if (graph->parsed()) return run_graph(o);
    if (hom->parsed()) return run_homology(o);
    if (rep->parsed()) return run_report(o);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
