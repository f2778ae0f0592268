#include "kr/complexes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

AlgebraModel model_for(AlgebraId id) {
  switch (id) {
    case AlgebraId::E36: return build_algebra(id, -2, 2);
    case AlgebraId::E38: return build_algebra(id, -3, 2);
    case AlgebraId::E510: return build_algebra(id, -2, 2);
  }
  throw std::invalid_argument("unknown algebra");
}

}  // namespace

Workspace::Workspace(AlgebraId id, int cutoff, std::vector<int> pbw_order) : model_(model_for(id)) {
  if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
  U_ = std::make_unique<Enveloping>(model_, cutoff, std::move(pbw_order));
  cartan_ = cartan_elements(model_);
}

std::shared_ptr<const FockGround> Workspace::fock(Lagrangian X, int pq, int r) {
  if (pq < 0 || r < 0) return nullptr;
  int m = creates_q(X, 0) ? pq : -pq;
  int n = creates_q(X, 3) ? r : -r;
  return fock_weight(X, m, n);
}

std::shared_ptr<const FockGround> Workspace::fock_weight(Lagrangian X, int m, int n) {
  if (id() == AlgebraId::E510) throw std::invalid_argument("Fock modules belong to E(3,6) and E(3,8)");
  std::string key = std::string("fock:") + lagrangian_char(X) + std::to_string(m) + "," + std::to_string(n);
  auto it = grounds_.find(key);
  if (it != grounds_.end()) return std::static_pointer_cast<const FockGround>(it->second);
  std::shared_ptr<const FockGround> g;
  try {
    g = std::make_shared<FockGround>(weight_block(X, m, n, id() == AlgebraId::E36 ? Flavor::Flat : Flavor::Sharp));
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
  grounds_[key] = g;
  return g;
}

std::shared_ptr<const S5Ground> Workspace::s5(S5Space X, int m, int n, bool raw) {
  if (id() != AlgebraId::E510) throw std::invalid_argument("S_X spaces belong to E(5,10)");
  if (m < 0 || n < 0) return nullptr;
  std::string key = std::string(raw ? "raw:" : "s5:") + s5_char(X) + std::to_string(m) + "," + std::to_string(n);
  auto it = grounds_.find(key);
  if (it != grounds_.end()) return std::static_pointer_cast<const S5Ground>(it->second);
  auto g = std::make_shared<S5Ground>(raw ? raw_component(X, m, n) : high_component(X, m, n));
  grounds_[key] = g;
  return g;
}

const InducedModule& Workspace::induced(const std::shared_ptr<const GroundModule>& V, int max_udeg) {
  max_udeg = std::min(max_udeg, cutoff());
  auto& slot = induced_[V->name()];
  if (!slot || slot->max_udeg() < max_udeg || &slot->ground() != V.get())
    slot = std::make_unique<InducedModule>(*U_, V, cartan_, max_udeg);
  return *slot;
}

namespace {

Lagrangian other(Lagrangian X, const std::string& name) {
  if (name == "nabla2") return X == Lagrangian::A ? Lagrangian::B : Lagrangian::D;
  if (name == "nabla3") return X == Lagrangian::A ? Lagrangian::C : Lagrangian::D;
  return X;
}

std::string sign_name(int s) { return s == 0 ? "+" : "-"; }

MorphismElement build_fock(Workspace& ws, const std::string& name, char tag, int a, int b) {
  const Enveloping& U = ws.U();
  Lagrangian X = parse_lagrangian(tag);
  auto src = ws.fock(X, a, b);
  if (!src) throw std::invalid_argument("invalid source block for " + name);
  struct Term {
    std::vector<int> factors;
    HeisOp op;
  };
  std::vector<Term> terms;
  auto partials = [](std::initializer_list<int> modes) {
    Monomial mo;
    for (int k : modes) mo.e[static_cast<size_t>(heis_p(k))] += 1;
    return HeisOp::monomial(mo);
  };
  int dm = 0, dn = 0;
  if (name == "nabla") {
    dm = -1;
    dn = -1;
    for (int i = 0; i < 3; ++i)
      for (int s = 0; s < 2; ++s)
        terms.push_back({{U.find_gen("d" + sign_name(s) + std::to_string(i + 1))}, partials({i, 3 + s})});
  } else if (name == "nabla2") {
    if (!((X == Lagrangian::A || X == Lagrangian::C) && b == 0)) throw std::invalid_argument("nabla2 needs a source in the rows A' or C'");
    dm = -2;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        terms.push_back({{U.find_gen("d-" + std::to_string(i + 1)), U.find_gen("d+" + std::to_string(j + 1))}, partials({i, j})});
  } else if (name == "nabla3") {
    if (!((X == Lagrangian::A || X == Lagrangian::B) && a == 0)) throw std::invalid_argument("nabla3 needs a source in the columns A'' or B''");
    dn = -3;
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int s3 = 0; s3 < 2; ++s3)
          terms.push_back({{U.find_gen("d" + sign_name(s1) + "1"), U.find_gen("d" + sign_name(s2) + "2"), U.find_gen("d" + sign_name(s3) + "3")},
                           partials({3 + s1, 3 + s2, 3 + s3})});
  } else {
    throw std::invalid_argument("unknown morphism " + name);
  }
  Lagrangian T = other(X, name);
  auto tgt = ws.fock_weight(T, src->block().m + dm, src->block().n + dn);
  MorphismElement phi;
  phi.source = src;
  phi.target = tgt;
  phi.udeg = U.udeg(Word(terms.front().factors.begin(), terms.front().factors.end()));
  phi.name = name + ":" + src->name() + "->" + (tgt ? tgt->name() : std::string("none"));
  const FockBlock& sb = src->block();
  for (auto& t : terms) {
    SparseMatrix l(tgt ? tgt->dim() : 0, sb.dim());
    for (int c = 0; c < sb.dim(); ++c) {
      FockVector w = fock_apply(t.op, FockVector::monomial(X, sb.basis[static_cast<size_t>(c)]));
      if (w.is_zero()) continue;
      if (T != X) w = relabel(w, T);
      if (!tgt) throw std::logic_error("nonzero image without a target block");
      for (auto& [r, v] : tgt->block().coords(w)) l.set(r, c, v);
    }
    UElem u = U.straighten(t.factors);
    phi.add(u, l);
    Word w0(t.factors.begin(), t.factors.end());
    if (U.is_normal(w0)) phi.hom_desc[w0] = t.op.str();
  }
  return phi;
}

MorphismElement build_s5(Workspace& ws, const std::string& name, char tag, int a, int b) {
  const Enveloping& U = ws.U();
  bool raw = name == "nablaA_raw";
  S5Space X = parse_s5(tag);
  char want = raw ? 'A' : name.back();
  if (tag != want) throw std::invalid_argument(name + " acts on S_" + std::string(1, want));
  if (a < 0 || b < 0) throw std::invalid_argument("negative bidegree");
  auto src = ws.s5(X, a, b, raw);
  int ta = a, tb = b;
  switch (X) {
    case S5Space::A: tb = b - 1; break;
    case S5Space::B: tb = b + 1; break;
    case S5Space::C: ta = a - 1; tb = b + 1; break;
  }
  auto tgt = ws.s5(X, ta, tb, raw);
  MorphismElement phi;
  phi.source = src;
  phi.target = tgt;
  phi.udeg = 1;
  phi.name = name + ":" + src->name() + "->" + (tgt ? tgt->name() : std::string("none"));
  const HighComponent& h = src->component();
  std::vector<Poly> polys;
  for (int c = 0; c < h.dim(); ++c) polys.push_back(h.poly(c));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      SparseMatrix l(tgt ? tgt->dim() : 0, h.dim());
      for (int c = 0; c < h.dim(); ++c) {
        Poly g = theta(X, i, j, polys[static_cast<size_t>(c)]) * Rational(2);
        if (g.is_zero()) continue;
        if (!tgt) throw std::logic_error("nonzero image without a target");
        for (auto& [r, v] : tgt->component().coords(g)) l.set(r, c, v);
      }
      Word w{static_cast<uint8_t>(U.find_gen("d" + std::to_string(i) + std::to_string(j)))};
      phi.add(UElem{{w, Rational(1)}}, l);
      phi.hom_desc[w] = "2 theta_" + std::to_string(i) + std::to_string(j);
    }
  return phi;
}

}  // namespace

MorphismElement build_morphism(Workspace& ws, const std::string& name, char tag, int a, int b) {
  if (ws.id() == AlgebraId::E510) {
    if (name != "nablaA" && name != "nablaB" && name != "nablaC" && name != "nablaA_raw")
      throw std::invalid_argument("unknown morphism " + name + " for e510");
    return build_s5(ws, name, tag, a, b);
  }
  return build_fock(ws, name, tag, a, b);
}

SparseMatrix identification(Workspace& ws, const S5Ground& from, const S5Ground& to) {
  const HighComponent& f = from.component();
  const HighComponent& t = to.component();
  if (f.dim() != t.dim()) throw std::invalid_argument("components of different dimension");
  const Universe& uf = s5_universe(f.X);
  const Universe& ut = s5_universe(t.X);
  std::vector<int> vmap(static_cast<size_t>(uf.n_even), -1);
  for (int i = 0; i < uf.n_even; ++i)
    for (int k = 0; k < ut.n_even; ++k)
      if (uf.even_names[static_cast<size_t>(i)] == ut.even_names[static_cast<size_t>(k)]) vmap[static_cast<size_t>(i)] = k;
  SparseMatrix M(t.dim(), f.dim());
  for (int c = 0; c < f.dim(); ++c) {
    Poly p(ut);
    Poly src = f.poly(c);
    for (auto& [mo, v] : src.terms()) {
      Monomial m2;
      for (int i = 0; i < uf.n_even; ++i) {
        if (!mo.deg(i)) continue;
        if (vmap[static_cast<size_t>(i)] < 0) throw std::invalid_argument("no matching variable for " + uf.even_names[static_cast<size_t>(i)] + " in " + from.name() + " -> " + to.name());
        m2.e[static_cast<size_t>(vmap[static_cast<size_t>(i)])] = mo.e[static_cast<size_t>(i)];
      }
      p.add_term(m2, v);
    }
    for (auto& [r, v] : t.coords(p)) M.set(r, c, v);
  }
  for (auto& x : ws.model().basis(0))
    if (!(rho_matrix(to, x) * M == M * rho_matrix(from, x)))
      throw std::logic_error("identification " + from.name() + " -> " + to.name() + " is not g_0-equivariant");
  return M;
}

MorphismElement precompose(const MorphismElement& phi, std::shared_ptr<const GroundModule> source, const SparseMatrix& iso) {
  MorphismElement r;
  r.name = phi.name;
  r.source = std::move(source);
  r.target = phi.target;
  r.udeg = phi.udeg;
  r.hom_desc = phi.hom_desc;
  for (auto& [w, l] : phi.terms) {
    SparseMatrix t = l * iso;
    if (!t.is_zero()) r.terms.emplace(w, std::move(t));
  }
  return r;
}

namespace {

MorphismElement postcompose(const MorphismElement& phi, std::shared_ptr<const GroundModule> target, const SparseMatrix& iso) {
  MorphismElement r;
  r.name = phi.name;
  r.source = phi.source;
  r.target = std::move(target);
  r.udeg = phi.udeg;
  r.hom_desc = phi.hom_desc;
  for (auto& [w, l] : phi.terms) {
    SparseMatrix t = iso * l;
    if (!t.is_zero()) r.terms.emplace(w, std::move(t));
  }
  return r;
}

std::string node_name(char tag, int a, int b) {
  return std::string(1, tag) + "_m" + std::to_string(a) + "_n" + std::to_string(b);
}

std::string arrow_name(const std::string& kind, const std::string& s, const std::string& t) {
  return "arrow_" + kind + "_" + s + "_" + t;
}

struct Ghost {
  const char* kind;
  int sa, sb, ta, tb;
  int udeg;
};
// A(0,2) -> D(1,1), A(1,0) -> D(0,2), A(0,1) -> D(1,2).
constexpr Ghost kGhosts[] = {{"nabla4p", 0, 2, 1, 1, 4}, {"nabla4pp", 1, 0, 0, 2, 4}, {"nablatilde", 0, 1, 1, 2, 0}};

std::string dynkin_str(const std::array<int, 4>& l) {
  return "F(" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) + "," + std::to_string(l[3]) + ")";
}

FigureGraph figure1(Workspace& ws, int range) {
  FigureGraph g;
  g.figure = 1;
  g.id = ws.id();
  g.range = range;
  auto partial_ghost = [](char tag, int a, int b) {
    for (auto& gh : kGhosts)
      if ((tag == 'A' && gh.sa == a && gh.sb == b) || (tag == 'D' && gh.ta == a && gh.tb == b)) return true;
    return false;
  };
  std::vector<std::pair<ComplexNode, std::vector<MorphismElement>>> cand;
  for (char tag : {'A', 'B', 'C', 'D'})
    for (int a = 0; a <= range; ++a)
      for (int b = 0; b <= range; ++b) {
        if (tag == 'D' && a == 0 && b == 1) continue;  // identified with A(0,1)
        Lagrangian X = parse_lagrangian(tag);
        ComplexNode n;
        n.name = node_name(tag, a, b);
        n.tag = tag;
        n.a = a;
        n.b = b;
        n.ground = ws.fock(X, a, b);
        n.label = static_cast<const FockGround&>(*n.ground).block().label.str();
        if (tag == 'A' && a == 0 && b == 1) n.aliases.push_back(node_name('D', 0, 1));
        std::vector<MorphismElement> outs;
        outs.push_back(build_morphism(ws, "nabla", tag, a, b));
        if ((tag == 'A' || tag == 'C') && b == 0) outs.push_back(build_morphism(ws, "nabla2", tag, a, b));
        if ((tag == 'A' || tag == 'B') && a == 0) outs.push_back(build_morphism(ws, "nabla3", tag, a, b));
        bool live = false;
        for (auto& o : outs)
          if (o.target && !o.is_zero()) live = true;
        n.partial = partial_ghost(tag, a, b) || !live;
        cand.push_back({n, std::move(outs)});
      }
  for (auto& [n, outs] : cand) g.nodes.push_back(n);
  for (auto& [n, outs] : cand)
    for (auto& o : outs) {
      if (!o.target || o.is_zero()) continue;
      auto& tb = static_cast<const FockGround&>(*o.target).block();
      int ta = tb.label.type == Lagrangian::A || tb.label.type == Lagrangian::B ? tb.label.p : tb.label.q;
      std::string tname = node_name(lagrangian_char(tb.tag), ta, tb.label.r);
      if (!g.has_node(tname)) continue;
      ComplexArrow ar;
      ar.kind = o.name.substr(0, o.name.find(':'));
      ar.source = n.name;
      ar.target = tname;
      ar.name = arrow_name(ar.kind, ar.source, ar.target);
      ar.udeg = o.udeg;
      ar.phi = std::make_shared<const MorphismElement>(o);
      g.arrows.push_back(std::move(ar));
    }
  for (auto& gh : kGhosts) {
    std::string s = node_name('A', gh.sa, gh.sb), t = node_name('D', gh.ta, gh.tb);
    if (!g.has_node(s) || !g.has_node(t)) continue;
    ComplexArrow ar;
    ar.kind = gh.kind;
    ar.source = s;
    ar.target = t;
    ar.name = arrow_name(ar.kind, s, t);
    ar.ghost = true;
    ar.udeg = gh.udeg;
    g.arrows.push_back(std::move(ar));
  }
  return g;
}

// Canonical node of a family point: A(m,0) = C(m,0) and B(m,0) = C(0,m), all three at (0,0).
std::pair<char, std::pair<int, int>> canonical(char tag, int m, int n) {
  if (tag == 'C' && n == 0) return {'A', {m, 0}};
  if (tag == 'B' && n == 0) return m == 0 ? std::make_pair('A', std::make_pair(0, 0)) : std::make_pair('C', std::make_pair(0, m));
  return {tag, {m, n}};
}

FigureGraph figure2(Workspace& ws, int range) {
  FigureGraph g;
  g.figure = 2;
  g.id = ws.id();
  g.range = range;
  std::map<std::string, ComplexNode> nodes;
  for (char tag : {'A', 'B', 'C'})
    for (int m = 0; m <= range; ++m)
      for (int n = 0; n <= range; ++n) {
        auto [ct, cc] = canonical(tag, m, n);
        std::string cname = node_name(ct, cc.first, cc.second);
        if (ct != tag || cc.first != m || cc.second != n) continue;
        ComplexNode nd;
        nd.name = cname;
        nd.tag = tag;
        nd.a = m;
        nd.b = n;
        nd.ground = ws.s5(parse_s5(tag), m, n);
        nd.label = dynkin_str(top_label(parse_s5(tag), m, n));
        g.nodes.push_back(nd);
      }
  for (char tag : {'A', 'B', 'C'})
    for (int m = 0; m <= range; ++m)
      for (int n = 0; n <= range; ++n) {
        auto [ct, cc] = canonical(tag, m, n);
        std::string cname = node_name(ct, cc.first, cc.second);
        if (ct != tag || cc.first != m || cc.second != n) {
          for (auto& nd : g.nodes)
            if (nd.name == cname) nd.aliases.push_back(node_name(tag, m, n));
        }
      }
  for (char tag : {'A', 'B', 'C'})
    for (int m = 0; m <= range; ++m)
      for (int n = 0; n <= range; ++n) {
        MorphismElement phi = build_morphism(ws, std::string("nabla") + tag, tag, m, n);
        if (!phi.target || phi.is_zero()) continue;
        auto& th = static_cast<const S5Ground&>(*phi.target).component();
        if (th.m > range || th.n > range) continue;
        auto [st, sc] = canonical(tag, m, n);
        auto [tt, tc] = canonical(tag, th.m, th.n);
        std::string sname = node_name(st, sc.first, sc.second), tname = node_name(tt, tc.first, tc.second);
        const ComplexNode& sn = g.node(sname);
        const ComplexNode& tn = g.node(tname);
        if (sn.ground.get() != phi.source.get()) {
          auto& from = static_cast<const S5Ground&>(*sn.ground);
          phi = precompose(phi, sn.ground, identification(ws, from, static_cast<const S5Ground&>(*phi.source)));
        }
        if (tn.ground.get() != phi.target.get()) {
          auto& to = static_cast<const S5Ground&>(*tn.ground);
          phi = postcompose(phi, tn.ground, identification(ws, static_cast<const S5Ground&>(*phi.target), to));
        }
        ComplexArrow ar;
        ar.kind = std::string("nabla") + tag;
        ar.source = sname;
        ar.target = tname;
        ar.name = arrow_name(ar.kind, sname, tname);
        ar.udeg = 1;
        ar.phi = std::make_shared<const MorphismElement>(std::move(phi));
        g.arrows.push_back(std::move(ar));
      }
  return g;
}

}  // namespace

const ComplexNode& FigureGraph::node(const std::string& name) const {
  for (auto& n : nodes)
    if (n.name == name) return n;
  for (auto& n : nodes)
    for (auto& a : n.aliases)
      if (a == name) return n;
  throw std::out_of_range("no node " + name);
}

bool FigureGraph::has_node(const std::string& name) const {
  for (auto& n : nodes)
    if (n.name == name) return true;
  return false;
}

std::vector<const ComplexArrow*> FigureGraph::incoming(const std::string& name, bool with_ghosts) const {
  std::vector<const ComplexArrow*> r;
  for (auto& a : arrows)
    if (a.target == name && (with_ghosts || !a.ghost)) r.push_back(&a);
  return r;
}

std::vector<const ComplexArrow*> FigureGraph::outgoing(const std::string& name, bool with_ghosts) const {
  std::vector<const ComplexArrow*> r;
  for (auto& a : arrows)
    if (a.source == name && (with_ghosts || !a.ghost)) r.push_back(&a);
  return r;
}

std::vector<std::pair<const ComplexArrow*, const ComplexArrow*>> FigureGraph::paths2() const {
  std::vector<std::pair<const ComplexArrow*, const ComplexArrow*>> r;
  for (auto& a : arrows) {
    if (a.ghost) continue;
    for (auto* b : outgoing(a.target)) r.push_back({&a, b});
  }
  return r;
}

std::string FigureGraph::dot() const {
  std::ostringstream os;
  os << "digraph figure" << figure << " {\n";
  os << "  node [shape=circle];\n";
  for (auto& n : nodes) {
    os << "  " << n.name << " [label=\"" << n.name << "\\n" << n.label << "\"";
    if (n.partial) os << ", style=dashed";
    os << "];\n";
  }
  std::vector<const ComplexArrow*> sorted;
  for (auto& a : arrows) sorted.push_back(&a);
  std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) { return x->name < y->name; });
  for (auto* a : sorted) {
    os << "  " << a->source << " -> " << a->target << " [id=\"" << a->name << "\", label=\"" << a->kind << "\"";
    if (a->ghost)
      os << ", style=dashed, color=gray";
    else if (a->kind == "nabla2")
      os << ", style=dotted";
    else if (a->kind == "nabla3")
      os << ", style=dashed";
    os << "];\n";
  }
  for (auto& n : nodes)
    for (auto& al : n.aliases) os << "  // " << al << " = " << n.name << "\n";
  os << "}\n";
  return os.str();
}

FigureGraph figure_graph(Workspace& ws, int figure, int range) {
  if (range < 0) throw std::invalid_argument("negative range");
  if (figure == 1) {
    if (ws.id() != AlgebraId::E38) throw std::invalid_argument("figure 1 needs e38");
    return figure1(ws, range);
  }
  if (figure == 2) {
    if (ws.id() != AlgebraId::E510) throw std::invalid_argument("figure 2 needs e510");
    return figure2(ws, range);
  }
  throw std::invalid_argument("figure must be 1 or 2");
}

ComposeReport compose_check(Workspace& ws, const MorphismElement& phi1, const MorphismElement& phi2, int cutoff, bool blocks) {
  if (!phi2.target || !phi1.source || phi2.target->name() != phi1.source->name())
    throw std::invalid_argument("shape mismatch: " + phi2.name + " does not end where " + phi1.name + " starts");
  ComposeReport rep;
  rep.first = phi2.name;
  rep.second = phi1.name;
  MorphismElement psi = compose_elements(ws.U(), phi1, phi2);
  for (auto& [w, l] : psi.terms) rep.element_nonzero += static_cast<long>(l.entries().size());
  rep.element_zero = rep.element_nonzero == 0;
  if (!blocks) return rep;
  int s1 = phi1.udeg, s2 = phi2.udeg;
  int top = cutoff - s1 - s2;
  if (top < 0) return rep;
  const InducedModule& src = ws.induced(phi2.source, top);
  const InducedModule& mid = ws.induced(phi2.target, top + s2);
  const InducedModule& tgt = ws.induced(phi1.target, cutoff);
  GradedBlockMap g2 = induce_map(phi2, src, mid, top);
  GradedBlockMap g1 = induce_map(phi1, mid, tgt, top + s2);
  for (auto& [key, M2] : g2.blocks) {
    ++rep.blocks_checked;
    if (M2.rows() == 0) continue;
    auto it = g1.blocks.find(BlockKey{key.udeg + s2, key.weight});
    if (it == g1.blocks.end()) throw std::logic_error("missing block of the second map");
    if (!(it->second * M2).is_zero()) ++rep.block_violations;
  }
  return rep;
}

std::map<int, int> HomologyReport::by_degree() const {
  std::map<int, int> r;
  for (auto& row : rows) r[row.udeg] += row.dim_h;
  return r;
}

HomologyReport homology_at(Workspace& ws, const FigureGraph& g, const std::string& name, int max_udeg) {
  const ComplexNode& nd = g.node(name);
  HomologyReport rep;
  rep.node = nd.name;
  rep.partial = nd.partial;
  auto outs = g.outgoing(nd.name);
  auto ins = g.incoming(nd.name);
  rep.has_outgoing = !outs.empty();
  for (auto* a : outs)
    if (max_udeg + a->udeg > ws.cutoff())
      throw std::out_of_range("cutoff " + std::to_string(ws.cutoff()) + " too small for " + a->name + " at U-degree " + std::to_string(max_udeg));
  const InducedModule& M = ws.induced(nd.ground, max_udeg);
  std::vector<GradedBlockMap> out_maps, in_maps;
  for (auto* a : outs) {
    const InducedModule& T = ws.induced(a->phi->target, max_udeg + a->udeg);
    out_maps.push_back(induce_map(*a->phi, M, T, max_udeg));
  }
  for (auto* a : ins) {
    if (max_udeg - a->udeg < 0) {
      in_maps.push_back(GradedBlockMap{a->name, a->udeg, {}});
      continue;
    }
    const InducedModule& S = ws.induced(a->phi->source, max_udeg - a->udeg);
    in_maps.push_back(induce_map(*a->phi, S, M, max_udeg - a->udeg));
  }
  for (auto& [key, basis] : M.blocks()) {
    if (key.udeg > max_udeg) continue;
    HomologyRow row;
    row.udeg = key.udeg;
    row.weight = key.weight;
    row.dim = static_cast<int>(basis.size());
    std::vector<SparseVec> rows;
    int off = 0;
    for (auto& G : out_maps) {
      auto it = G.blocks.find(key);
      if (it == G.blocks.end()) throw std::logic_error("missing outgoing block");
      for (auto& r : it->second.row_vectors())
        if (!r.empty()) rows.push_back(r);
      off += it->second.rows();
    }
    row.dim_ker = row.dim - rank_of_rows(rows);
    std::vector<SparseVec> cols;
    for (auto& G : in_maps) {
      BlockKey sk{key.udeg - G.shift, key.weight};
      auto it = G.blocks.find(sk);
      if (it == G.blocks.end()) continue;
      for (auto& c : it->second.transpose().row_vectors())
        if (!c.empty()) cols.push_back(c);
    }
    row.dim_im = rank_of_rows(cols);
    row.dim_h = row.dim_ker - row.dim_im;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

Poly theta_s(S5Space X, int i, int j, const Poly& f) {
  if (i == j) return Poly(f.universe());
  return theta(X, i, j, f);
}

}  // namespace

int theta_identity_violations(S5Space X, int m, int n) {
  std::vector<Poly> ground;
  HighComponent h = X == S5Space::C ? raw_component(X, m, n) : high_component(X, m, n);
  for (int c = 0; c < h.dim(); ++c) ground.push_back(h.poly(c));
  std::unique_ptr<HighComponent> tq;
  if (X == S5Space::B) tq = std::make_unique<HighComponent>(high_component(X, m, n + 2));
  int bad = 0;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 5; ++c)
        for (int d = 1; d <= 5; ++d) {
          bool ok = true;
          for (auto& f : ground) {
            Poly r = theta_s(X, a, b, theta_s(X, c, d, f)) - theta_s(X, a, c, theta_s(X, b, d, f)) + theta_s(X, a, d, theta_s(X, b, c, f));
            if (r.is_zero()) continue;
            if (tq && tq->vanishes(r)) continue;
            ok = false;
            break;
          }
          if (!ok) ++bad;
        }
  return bad;
}

}  // namespace kr
