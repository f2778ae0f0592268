#include "kr/reports.hpp"

#include <stdexcept>

namespace kr {

std::pair<int, int> RunConfig::window() const {
  if (window_set) return {jmin, jmax};
  return {algebra_depth(id()), 4};
}

Json RunConfig::to_json() const {
  auto [a, b] = window();
  Json j;
  j["window"] = std::to_string(a) + ":" + std::to_string(b);
  j["cutoff"] = cutoff;
  j["range"] = range;
  j["figure"] = figure;
  j["max_udeg"] = max_udeg;
  j["name"] = name;
  j["node"] = node;
  return j;
}

std::string rat_str(const Rational& q) { return q.str(); }

std::string weight_key(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].str();
  return s + ")";
}

Json report_skeleton(const std::string& check, const RunConfig& c) {
  Json r;
  r["check"] = check;
  r["algebra"] = c.algebra;
  r["config"] = c.to_json();
  r["status"] = "pass";
  r["violations"] = Json::array();
  r["dimensions"] = Json::object();
  r["counts"] = Json::object();
  return r;
}

void report_finish(Json& r) {
  if (!r["violations"].empty())
    r["status"] = "fail";
  else if (r["status"] != "partial")
    r["status"] = "pass";
}

bool report_failed(const Json& r) { return !r.at("violations").empty(); }

Json report_jacobi(const RunConfig& c) {
  Json r = report_skeleton("jacobi", c);
  auto [a, b] = c.window();
  AlgebraModel M = build_algebra(c.id(), a, b);
  JacobiReport rep = jacobi_check(M, a, b, c.workers);
  for (auto& v : rep.violations) r["violations"].push_back({{"type", v.type}, {"elements", v.elements}, {"residual", v.residual}});
  for (int j = a; j <= b; ++j) r["dimensions"][std::to_string(j)] = M.dim(j);
  r["counts"]["pairs"] = rep.pairs_checked;
  r["counts"]["triples"] = rep.triples_checked;
  report_finish(r);
  return r;
}

namespace {

bool same(const SuperElement& x, const SuperElement& y) { return x.terms() == y.terms(); }

// Degree-0 elements of E(3,6) and E(3,8) share their symbols; realize them as fields on C^{3|2}.
SuperElement realize_g0(const SuperElement& x) {
  SuperElement y(AlgebraId::E36);
  for (auto& [s, c] : x.terms()) y.add(s, c);
  return embed_e36_in_e510(y);
}

SuperElement diag_field(const std::vector<std::pair<int, Rational>>& coeffs) {
  VecField v = zero_field(5);
  const Universe u = Universe::plain(5);
  for (auto& [i, c] : coeffs) v[static_cast<size_t>(i)] += Poly::var(u, i) * c;
  return field_element(AlgebraId::E510, v);
}

void relations_fock(Json& r, const RunConfig& c) {
  AlgebraId id = c.id();
  bool sharp = id == AlgebraId::E38;
  AlgebraModel M = build_algebra(id, algebra_depth(id), 2);
  auto E = [&](const std::string& n) { return M.element(n); };
  long count = 0;
  auto rel = [&](const std::string& name, const SuperElement& lhs, const SuperElement& rhs) {
    ++count;
    if (!same(lhs, rhs)) r["violations"].push_back({{"relation", name}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  };
  SuperElement zero(id);
  rel("[e'0,f0]=f2", M.bracket(E("e'0"), E("f0")), E("f2"));
  if (sharp) {
    rel("[es0,f0]=hs0", M.bracket(E("es0"), E("f0")), E("hs0"));
    rel("hs0=x1d1-z+d+", realize_g0(E("hs0")), diag_field({{0, Rational(1)}, {3, Rational(-1)}}));
  } else {
    rel("[eb0,f0]=hb0", M.bracket(E("eb0"), E("f0")), E("hb0"));
    rel("hb0=-x2d2-x3d3+2z-d-", realize_g0(E("hb0")), diag_field({{1, Rational(-1)}, {2, Rational(-1)}, {4, Rational(2)}}));
  }
  rel("[e'0,d+1]=f2", M.bracket(E("e'0"), E("d+1")), E("f2"));
  rel("[e'0,d+2]=-f12", M.bracket(E("e'0"), E("d+2")), Rational(-1) * E("f12"));
  rel("[e'0,d+3]=0", M.bracket(E("e'0"), E("d+3")), zero);
  for (int i = 1; i <= 3; ++i) rel("[e'0,d-" + std::to_string(i) + "]=0", M.bracket(E("e'0"), E("d-" + std::to_string(i))), zero);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      std::string si = std::to_string(i), sj = std::to_string(j);
      for (std::string s : {"+", "-"}) rel("[d" + s + si + ",d" + s + sj + "]=0", M.bracket(E("d" + s + si), E("d" + s + sj)), zero);
      rel("[d+" + si + ",d-" + sj + "]+[d+" + sj + ",d-" + si + "]=0",
          M.bracket(E("d+" + si), E("d-" + sj)) + M.bracket(E("d+" + sj), E("d-" + si)), zero);
    }
  Flavor fl = sharp ? Flavor::Sharp : Flavor::Flat;
  HeisOp Y = y_operator(fl);
  for (Lagrangian X : {Lagrangian::A, Lagrangian::B, Lagrangian::C, Lagrangian::D}) {
    ++count;
    Rational want = sharp ? theorem_y(X, 0, 0) : Rational(std::array<int, 4>{0, 2, -2, 0}[static_cast<size_t>(X)]);
    FockVector got = fock_apply(Y, FockVector::vacuum(X));
    FockVector exp(X);
    if (!want.is_zero()) {
      exp = FockVector::vacuum(X);
      exp *= want;
    }
    r["dimensions"][std::string("Y(1_") + lagrangian_char(X) + ")"] = rat_str(want);
    if (!(got == exp))
      r["violations"].push_back({{"relation", std::string("Y 1_") + lagrangian_char(X) + " = " + rat_str(want) + " 1_" + lagrangian_char(X)},
                                 {"lhs", got.str()},
                                 {"rhs", exp.str()}});
  }
  r["counts"]["relations"] = count;
}

void relations_s5(Json& r, const RunConfig& c) {
  long count = 0;
  for (S5Space X : {S5Space::A, S5Space::B, S5Space::C})
    for (int m = 0; m <= c.range; ++m)
      for (int n = 0; m + n <= c.range; ++n) {
        ++count;
        int bad = theta_identity_violations(X, m, n);
        std::string key = std::string(1, s5_char(X)) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        if (bad) r["violations"].push_back({{"relation", "theta identity"}, {"space", key}, {"failing_quadruples", bad}});
      }
  r["counts"]["bidegrees"] = count;
}

}  // namespace

Json report_relations(const RunConfig& c) {
  Json r = report_skeleton("relations", c);
  if (c.id() == AlgebraId::E510)
    relations_s5(r, c);
  else
    relations_fock(r, c);
  report_finish(r);
  return r;
}

namespace {

long flat_dim(int j) {
  if (j % 2 == 0) {
    if (j < -2) return 0;
    long d = static_cast<long>(divfree_fields(3, (j + 2) / 2).size());
    return j == 0 ? d + 3 : d;
  }
  if (j < -1) return 0;
  return 2 * static_cast<long>(monomials_of_degree(3, (j + 3) / 2).size());
}

}  // namespace

Json report_embedding(const RunConfig& c) {
  RunConfig cc = c;
  cc.algebra = "e36";
  Json r = report_skeleton("embedding", cc);
  auto [a, b] = cc.window();
  a = std::max(a, -2);
  AlgebraModel M6 = build_algebra(AlgebraId::E36, -2, b);
  AlgebraModel M10 = build_algebra(AlgebraId::E510, -2, b);
  long pairs6 = 0;
  for (int i = a; i <= b; ++i)
    for (int j = i; j <= b && i + j <= b; ++j)
      for (auto& x : M6.basis(i))
        for (auto& y : M6.basis(j)) {
          ++pairs6;
          SuperElement lhs = embed_e36_in_e510(M6.bracket(x, y));
          SuperElement rhs = M10.bracket(embed_e36_in_e510(x), embed_e36_in_e510(y));
          if (!same(lhs, rhs))
            r["violations"].push_back({{"map", "e36->e510"}, {"pair", {x.str(), y.str()}}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
        }
  AlgebraModel M8 = build_algebra(AlgebraId::E38, -3, b);
  std::map<int, std::vector<SuperElement>> B;
  for (int j = -3; j <= b; ++j) B[j] = sharp_basis(j);
  long pairs8 = 0;
  for (int i = -3; i <= b; ++i)
    for (int j = i; j <= b && i + j <= b; ++j)
      for (auto& x : B[i])
        for (auto& y : B[j]) {
          ++pairs8;
          SuperElement z = M8.bracket(x, y);
          if (!in_sharp_subalgebra(z)) {
            r["violations"].push_back({{"map", "sharp->flat"}, {"pair", {x.str(), y.str()}}, {"lhs", z.str()}, {"rhs", "outside the subalgebra"}});
            continue;
          }
          SuperElement lhs = sharp_to_flat(z);
          SuperElement rhs = M6.bracket(sharp_to_flat(x), sharp_to_flat(y));
          if (!same(lhs, rhs))
            r["violations"].push_back({{"map", "sharp->flat"}, {"pair", {x.str(), y.str()}}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
        }
  long kernel_total = 0;
  for (int j = -3; j <= b; ++j) {
    const auto& Bj = B[j];
    int n = static_cast<int>(Bj.size());
    int rows = j >= -2 ? M6.dim(j) : 0;
    SparseMatrix A(rows, n);
    for (int k = 0; k < n; ++k) {
      SuperElement y = sharp_to_flat(Bj[static_cast<size_t>(k)]);
      if (y.is_zero()) continue;
      for (auto& [row, v] : M6.coords(y, j)) A.set(row, k, v);
    }
    RankKernel rk = rank_kernel(A);
    long kd = n - rk.rank;
    kernel_total += kd;
    r["dimensions"][std::to_string(j)] = kd;
    if (rk.rank != flat_dim(j))
      r["violations"].push_back({{"map", "sharp->flat"}, {"degree", j}, {"rank", rk.rank}, {"target_dim", flat_dim(j)}});
    for (auto& kv : rk.kernel) {
      SuperElement k(AlgebraId::E38);
      for (auto& [idx, v] : kv) k += v * Bj[static_cast<size_t>(idx)];
      for (int i = -3; i <= b && i + j <= b; ++i)
        for (auto& y : B[i]) {
          SuperElement z = M8.bracket(k, y);
          if (!z.is_zero())
            r["violations"].push_back({{"map", "sharp->flat"}, {"kernel_element", k.str()}, {"not_central_with", y.str()}, {"bracket", z.str()}});
        }
    }
  }
  if (kernel_total != 2) r["violations"].push_back({{"map", "sharp->flat"}, {"kernel_dim", kernel_total}, {"expected", 2}});
  r["counts"]["pairs_e36"] = pairs6;
  r["counts"]["pairs_sharp"] = pairs8;
  r["counts"]["kernel_dim"] = kernel_total;
  report_finish(r);
  return r;
}

std::vector<std::string> family_names(AlgebraId id) {
  if (id == AlgebraId::E510) return {"nablaA", "nablaB", "nablaC"};
  return {"nabla", "nabla2", "nabla3"};
}

std::vector<std::tuple<char, int, int>> family_sources(AlgebraId id, const std::string& name, int range) {
  std::vector<std::tuple<char, int, int>> out;
  if (id == AlgebraId::E510) {
    char tag;
    if (name == "nablaA" || name == "nablaA_raw")
      tag = 'A';
    else if (name == "nablaB")
      tag = 'B';
    else if (name == "nablaC")
      tag = 'C';
    else
      throw std::invalid_argument("unknown morphism " + name + " for e510");
    for (int m = 0; m <= range; ++m)
      for (int n = 0; m + n <= range; ++n) out.emplace_back(tag, m, n);
    return out;
  }
  if (name == "nabla") {
    for (char t : {'A', 'B', 'C', 'D'})
      for (int a = 0; a <= range; ++a)
        for (int b = 0; b <= range; ++b) out.emplace_back(t, a, b);
  } else if (name == "nabla2") {
    for (char t : {'A', 'C'})
      for (int a = 0; a <= range; ++a) out.emplace_back(t, a, 0);
  } else if (name == "nabla3") {
    for (char t : {'A', 'B'})
      for (int b = 0; b <= range; ++b) out.emplace_back(t, 0, b);
  } else {
    throw std::invalid_argument("unknown morphism " + name + " for " + algebra_name(id));
  }
  return out;
}

Json report_singular(Workspace& ws, const RunConfig& c) {
  Json r = report_skeleton("singular", c);
  auto gens = singular_generators(ws.model());
  std::vector<std::string> names = c.name.empty() ? family_names(ws.id()) : std::vector<std::string>{c.name};
  long count = 0, nonzero = 0;
  for (auto& name : names)
    for (auto [tag, a, b] : family_sources(ws.id(), name, c.range)) {
      MorphismElement phi = build_morphism(ws, name, tag, a, b);
      ++count;
      if (phi.is_zero()) continue;
      ++nonzero;
      SingularReport rep = verify_singular(ws.U(), phi, gens, &ws.rho());
      for (auto& res : rep.residuals)
        if (!res.zero)
          r["violations"].push_back(
              {{"morphism", phi.name}, {"generator", res.generator}, {"nonzero_entries", res.nonzero_entries}, {"sample", res.sample}});
    }
  r["counts"]["morphisms"] = count;
  r["counts"]["nonzero_morphisms"] = nonzero;
  r["counts"]["generators"] = gens.size();
  report_finish(r);
  return r;
}

namespace {

void add_compose(Json& r, const ComposeReport& cr) {
  if (!cr.pass())
    r["violations"].push_back({{"first", cr.first},
                               {"second", cr.second},
                               {"element_nonzero_entries", cr.element_nonzero},
                               {"block_violations", cr.block_violations}});
}

// Label coordinates (tag, p or q, r) of a Fock ground.
std::tuple<char, int, int> fock_label(const GroundModule& g) {
  const FockBlock& b = static_cast<const FockGround&>(g).block();
  int a = b.label.type == Lagrangian::A || b.label.type == Lagrangian::B ? b.label.p : b.label.q;
  return {lagrangian_char(b.tag), a, b.label.r};
}

bool accepts(const std::string& name, char tag, int a, int b) {
  if (name == "nabla2") return (tag == 'A' || tag == 'C') && b == 0;
  if (name == "nabla3") return (tag == 'A' || tag == 'B') && a == 0;
  return true;
}

// Ordered pairs (first, second) of families whose composite should vanish.
std::vector<std::pair<std::string, std::string>> fock_pairs(const std::string& name) {
  if (name == "nabla") return {{"nabla", "nabla"}};
  if (name == "nabla2" || name == "nabla3") return {{name, "nabla"}, {"nabla", name}};
  if (name.empty()) return {{"nabla", "nabla"}, {"nabla2", "nabla"}, {"nabla", "nabla2"}, {"nabla3", "nabla"}, {"nabla", "nabla3"}};
  throw std::invalid_argument("unknown morphism " + name + " for nilpotency");
}

}  // namespace

Json report_nilpotent(Workspace& ws, const RunConfig& c) {
  Json r = report_skeleton("nilpotent", c);
  long paths = 0, blocks = 0;
  if (c.name == "paths") {
    FigureGraph g = figure_graph(ws, ws.id() == AlgebraId::E510 ? 2 : 1, c.range);
    bool with_blocks = ws.id() != AlgebraId::E510;
    for (auto [a1, a2] : g.paths2()) {
      ++paths;
      ComposeReport cr = compose_check(ws, *a2->phi, *a1->phi, c.cutoff, with_blocks);
      blocks += cr.blocks_checked;
      add_compose(r, cr);
    }
  } else if (ws.id() != AlgebraId::E510) {
    for (auto& [n1, n2] : fock_pairs(c.name)) {
      long here = 0;
      for (auto [tag, a, b] : family_sources(ws.id(), n1, c.range)) {
        MorphismElement first = build_morphism(ws, n1, tag, a, b);
        if (!first.target || first.is_zero()) continue;
        auto [t2, a2, b2] = fock_label(*first.target);
        if (!accepts(n2, t2, a2, b2)) continue;
        MorphismElement second = build_morphism(ws, n2, t2, a2, b2);
        ++paths;
        ++here;
        if (!second.target || second.is_zero()) continue;
        ComposeReport cr = compose_check(ws, second, first, c.cutoff, true);
        blocks += cr.blocks_checked;
        add_compose(r, cr);
      }
      r["counts"]["paths_" + n1 + "_then_" + n2] = here;
    }
  } else {
    std::vector<std::string> names = c.name.empty() ? family_names(ws.id()) : std::vector<std::string>{c.name};
    for (auto& name : names)
      for (auto [tag, m, n] : family_sources(ws.id(), name, c.range)) {
        MorphismElement first = build_morphism(ws, name, tag, m, n);
        if (first.is_zero()) continue;
        auto& th = static_cast<const S5Ground&>(*first.target).component();
        MorphismElement second = build_morphism(ws, name, tag, th.m, th.n);
        ++paths;
        if (second.is_zero()) continue;
        add_compose(r, compose_check(ws, second, first, c.cutoff, false));
      }
  }
  r["counts"]["paths"] = paths;
  r["counts"]["blocks_checked"] = blocks;
  report_finish(r);
  return r;
}

Json report_kernels(Workspace& ws, const RunConfig& c, const std::vector<std::tuple<std::string, char, int, int>>& samples, int udeg) {
  Json r = report_skeleton("kernels", c);
  for (auto& [name, tag, a, b] : samples) {
    MorphismElement phi = build_morphism(ws, name, tag, a, b);
    const InducedModule& S = ws.induced(phi.source, udeg);
    long ker = 0;
    if (phi.target) {
      const InducedModule& T = ws.induced(phi.target, udeg + phi.udeg);
      GradedBlockMap G = induce_map(phi, S, T, udeg);
      for (auto& [key, M] : G.blocks) ker += M.cols() - rank_of(M);
    } else {
      for (int k = 0; k <= udeg; ++k) ker += S.dim(k);
    }
    r["dimensions"][phi.name] = ker;
    if (ker == 0) r["violations"].push_back({{"morphism", phi.name}, {"kernel_dim", 0}, {"max_udeg", udeg}});
  }
  report_finish(r);
  return r;
}

Json report_pluecker(const RunConfig& c, bool literal) {
  RunConfig cc = c;
  cc.algebra = "e510";
  Json r = report_skeleton(literal ? "pluecker" : "pluecker_incidence", cc);
  for (int m = 0; m <= c.range; ++m)
    for (int n = 0; m + n <= c.range; ++n) {
      long k = pluecker_kernel_dim(m, n, !literal);
      long want = dim_irrep_sl5(m, n, 0, 0);
      std::string key = std::to_string(m) + "," + std::to_string(n);
      r["dimensions"][key] = k;
      if (k != want) r["violations"].push_back({{"bidegree", key}, {"kernel_dim", k}, {"expected", want}});
    }
  report_finish(r);
  return r;
}

Json report_vanishing(Workspace& ws, const RunConfig& c) {
  Json r = report_skeleton("vanishing", c);
  for (char tag : {'A', 'C'})
    for (int m = 0; m <= c.range; ++m)
      for (int n = 0; n <= c.range; ++n) {
        MorphismElement phi = build_morphism(ws, std::string("nabla") + tag, tag, m, n);
        bool zero = phi.is_zero();
        bool want = tag == 'A' ? n == 0 : m == 0;
        std::string key = std::string(1, tag) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        r["dimensions"][key] = zero ? 0 : 1;
        if (zero != want) r["violations"].push_back({{"morphism", phi.name}, {"zero", zero}, {"expected_zero", want}});
      }
  report_finish(r);
  return r;
}

Json report_graph(const FigureGraph& g, const RunConfig& c) {
  Json r = report_skeleton("graph", c);
  Json nodes = Json::array(), arrows = Json::array();
  for (auto& n : g.nodes) {
    nodes.push_back({{"name", n.name}, {"tag", std::string(1, n.tag)}, {"a", n.a}, {"b", n.b}, {"label", n.label},
                     {"aliases", n.aliases}, {"partial", n.partial}});
    r["dimensions"][n.name] = n.ground->dim();
  }
  std::vector<const ComplexArrow*> order;
  for (auto& a : g.arrows) order.push_back(&a);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->name < y->name; });
  for (auto* a : order)
    arrows.push_back({{"name", a->name}, {"kind", a->kind}, {"source", a->source}, {"target", a->target}, {"ghost", a->ghost}, {"udeg", a->udeg}});
  r["counts"]["nodes"] = g.nodes.size();
  r["counts"]["arrows"] = g.arrows.size();
  r["graph"] = {{"nodes", nodes}, {"arrows", arrows}};
  report_finish(r);
  return r;
}

Json report_homology(const std::vector<HomologyReport>& reps, const RunConfig& c) {
  Json r = report_skeleton("homology", c);
  bool partial = false;
  for (auto& h : reps) {
    partial = partial || h.partial;
    std::string pre = reps.size() == 1 ? "" : h.node + ":";
    long total = 0;
    for (auto& row : h.rows) {
      r["dimensions"][pre + std::to_string(row.udeg) + "," + weight_key(row.weight)] = row.dim_h;
      total += row.dim_h;
    }
    r["counts"][h.node] = {{"total_H", total}, {"partial", h.partial}, {"has_outgoing", h.has_outgoing}};
  }
  if (partial) r["status"] = "partial";
  report_finish(r);
  return r;
}

std::string homology_csv(const std::vector<HomologyReport>& reps) {
  std::string s = "node,block_degree,weight,dim_ker,dim_im,dim_H,partial\n";
  for (auto& h : reps)
    for (auto& row : h.rows)
      s += h.node + "," + std::to_string(row.udeg) + ",\"" + weight_key(row.weight) + "\"," + std::to_string(row.dim_ker) + "," +
           std::to_string(row.dim_im) + "," + std::to_string(row.dim_h) + "," + (h.partial ? "true" : "false") + "\n";
  return s;
}

}  // namespace kr
