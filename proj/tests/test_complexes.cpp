#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/complexes.hpp"

#include <algorithm>
#include <set>

using namespace kr;

namespace {

Workspace& e38() {
  static Workspace ws(AlgebraId::E38, 6);
  return ws;
}

Workspace& e510() {
  static Workspace ws(AlgebraId::E510, 4);
  return ws;
}

const FigureGraph& fig1() {
  static FigureGraph g = figure_graph(e38(), 1, 3);
  return g;
}

const ComplexArrow* find_arrow(const FigureGraph& g, const std::string& name) {
  for (auto& a : g.arrows)
    if (a.name == name) return &a;
  return nullptr;
}

std::string node(char t, int a, int b) { return std::string(1, t) + "_m" + std::to_string(a) + "_n" + std::to_string(b); }

int total(const HomologyReport& h) {
  int s = 0;
  for (auto& [d, v] : h.by_degree()) s += v;
  return s;
}

std::map<std::string, int> table(const HomologyReport& h) {
  std::map<std::string, int> t;
  for (auto& r : h.rows) t[std::to_string(r.udeg) + weight_str(r.weight)] = r.dim_h * 1000 + r.dim_ker;
  return t;
}

}  // namespace

TEST_CASE("figure 1 arrows follow the block shifts") {
  const FigureGraph& g = fig1();
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      std::string s = node('A', a, b), t = node('A', a - 1, b - 1);
      CHECK_MESSAGE(find_arrow(g, "arrow_nabla_" + s + "_" + t), s);
    }
  const ComplexArrow* n2 = find_arrow(g, "arrow_nabla2_A_m2_n0_B_m0_n0");
  REQUIRE(n2);
  CHECK(n2->udeg == 2);
  CHECK_FALSE(n2->ghost);
  int ghosts = 0;
  for (auto& a : g.arrows) ghosts += a.ghost;
  CHECK(ghosts == 3);
  CHECK(g.node("A_m0_n1").aliases == std::vector<std::string>{"D_m0_n1"});
  CHECK(g.node("A_m0_n0").partial);
  CHECK_FALSE(g.node("A_m2_n2").partial);
  CHECK(g.dot() == figure_graph(e38(), 1, 3).dot());
}

TEST_CASE("every non-ghost arrow carries a singular vector") {
  const FigureGraph& g = fig1();
  auto gens = singular_generators(e38().model());
  int n = 0;
  for (auto& a : g.arrows) {
    if (a.ghost) continue;
    REQUIRE(a.phi);
    CHECK_MESSAGE(verify_singular(e38().U(), *a.phi, gens, &e38().rho()).pass, a.name);
    ++n;
  }
  CHECK(n > 20);
}

TEST_CASE("length-2 paths of figure 1 compose to zero") {
  const FigureGraph& g = fig1();
  std::set<std::string> kinds;
  for (auto [a1, a2] : g.paths2()) {
    ComposeReport r = compose_check(e38(), *a2->phi, *a1->phi, 6, true);
    CHECK_MESSAGE(r.pass(), std::string(a1->name + " then " + a2->name));
    kinds.insert(a1->kind + "," + a2->kind);
  }
  CHECK(kinds.count("nabla,nabla"));
  CHECK(kinds.count("nabla2,nabla"));
}

TEST_CASE("figure 2 has no nabla_A arrows out of the n = 0 row") {
  FigureGraph g = figure_graph(e510(), 2, 3);
  for (auto& a : g.arrows)
    if (a.kind == "nablaA") CHECK(g.node(a.source).b > 0);
  std::string dot = g.dot();
  CHECK(dot.find("arrow_nablaA_A_m1_n0") == std::string::npos);
  CHECK(dot.find("arrow_nablaA_A_m1_n1_A_m1_n0") != std::string::npos);
}

TEST_CASE("nabla_C squares to zero and theta identities hold") {
  MorphismElement c1 = build_morphism(e510(), "nablaC", 'C', 2, 1);
  REQUIRE(c1.target);
  auto& t = static_cast<const S5Ground&>(*c1.target).component();
  MorphismElement c2 = build_morphism(e510(), "nablaC", 'C', t.m, t.n);
  CHECK(compose_check(e510(), c2, c1, 4, true).pass());
  CHECK(theta_identity_violations(S5Space::C, 2, 1) == 0);
}

TEST_CASE("homology at generic and special nodes") {
  Workspace ws(AlgebraId::E38, 7);
  FigureGraph g = figure_graph(ws, 1, 4);
  CHECK(total(homology_at(ws, g, "A_m2_n3", 4)) == 0);
  CHECK(total(homology_at(ws, g, "B_m2_n2", 4)) == 0);
  HomologyReport a11 = homology_at(ws, g, "A_m1_n1", 4);
  auto deg = a11.by_degree();
  auto first = std::find_if(deg.begin(), deg.end(), [](auto& p) { return p.second != 0; });
  REQUIRE(first != deg.end());
  CHECK(first->first == 3);
  CHECK(first->second == dim_irrep_g0(1, 0, 0));
  HomologyReport a00 = homology_at(ws, g, "A_m0_n0", 2);
  CHECK(a00.partial);
  CHECK(a00.by_degree()[0] == 1);
  CHECK_THROWS(homology_at(ws, g, "A_m2_n2", 7));
}

TEST_CASE("homology does not depend on the PBW order") {
  Workspace& ws = e38();
  int n = ws.U().ngens();
  // Reverse the order inside the even and inside the odd generators.
  std::vector<int> evens, odds, order;
  for (int g = 0; g < n; ++g) (ws.U().gen_parity(g) ? odds : evens).push_back(g);
  std::reverse(evens.begin(), evens.end());
  std::reverse(odds.begin(), odds.end());
  order = evens;
  order.insert(order.end(), odds.begin(), odds.end());
  Workspace alt(AlgebraId::E38, 6, order);
  FigureGraph g1 = figure_graph(ws, 1, 2), g2 = figure_graph(alt, 1, 2);
  for (const char* v : {"A_m1_n1", "A_m2_n2", "B_m1_n1", "A_m2_n0"})
    CHECK_MESSAGE(table(homology_at(ws, g1, v, 3)) == table(homology_at(alt, g2, v, 3)), v);
}

TEST_CASE("quotient by the kernel of nabla keeps the ground in degree 0") {
  for (auto [p, r] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
    MorphismElement phi = build_morphism(e38(), "nabla", 'A', p, r);
    const InducedModule& S = e38().induced(phi.source, 1);
    const InducedModule& T = e38().induced(phi.target, 2);
    GradedBlockMap G = induce_map(phi, S, T, 1);
    int ker0 = 0;
    for (auto& [key, B] : G.blocks)
      if (key.udeg == 0) ker0 += B.cols() - rank_of(B);
    auto& blk = static_cast<const FockGround&>(*phi.source).block();
    CHECK(S.dim(0) - ker0 == dim_irrep_g0(blk.label.p, blk.label.q, blk.label.r));
  }
}
