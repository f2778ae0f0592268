#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/complexes.hpp"

using namespace kr;

namespace {

Workspace& e38() {
  static Workspace ws(AlgebraId::E38, 5);
  return ws;
}

Workspace& e510() {
  static Workspace ws(AlgebraId::E510, 4);
  return ws;
}

Word word(const Enveloping& U, std::initializer_list<const char*> names) {
  Word w;
  for (auto n : names) w.push_back(static_cast<uint8_t>(U.find_gen(n)));
  return w;
}

UElem unit(const Word& w, const Rational& c = Rational(1)) { return {{w, c}}; }

// Label coordinates of the weight block (m, n) of X.
std::pair<int, int> label_of(Lagrangian X, int m, int n) {
  FockBlock b = weight_block(X, m, n);
  int pq = b.label.type == Lagrangian::A || b.label.type == Lagrangian::B ? b.label.p : b.label.q;
  return {pq, b.label.r};
}

MorphismElement fock_morphism(const char* name, Lagrangian X, int m, int n) {
  auto [pq, r] = label_of(X, m, n);
  return build_morphism(e38(), name, lagrangian_char(X), pq, r);
}

int block_index(const FockBlock& b, std::initializer_list<int> exps) {
  Monomial m;
  int k = 0;
  for (int e : exps) m.e[static_cast<size_t>(k++)] = static_cast<uint8_t>(e);
  return b.index.at(m);
}

// Image of an induced vector under w (x) a -> w u_m (x) l_m a.
InducedVector apply_phi(const Enveloping& U, const MorphismElement& phi, const InducedVector& v) {
  InducedVector r;
  for (auto& [key, c] : v)
    for (auto& [u, l] : phi.terms) {
      SparseVec col = l.column(key.second);
      if (col.empty()) continue;
      for (auto& [w2, cw] : U.mul(key.first, u))
        for (auto& [b, cb] : col) {
          Rational& t = r[{w2, b}];
          t += c * cw * cb;
          if (t.is_zero()) r.erase({w2, b});
        }
    }
  return r;
}

InducedVector basis_vector(const Word& w, int a) { return {{{w, a}, Rational(1)}}; }

InducedVector add(InducedVector a, const InducedVector& b, const Rational& c = Rational(1)) {
  for (auto& [k, v] : b) {
    Rational& t = a[k];
    t += c * v;
    if (t.is_zero()) a.erase(k);
  }
  return a;
}

}  // namespace

TEST_CASE("PBW straightening") {
  const Enveloping& U = e38().U();
  int p1 = U.find_gen("d+1"), m2 = U.find_gen("d-2"), D1 = U.find_gen("D1"), D2 = U.find_gen("D2");
  CHECK(U.straighten({p1, p1}).empty());
  CHECK(U.straighten({D2, D1}) == unit(word(U, {"D1", "D2"})));
  UElem expect = unit(word(U, {"d+1", "d-2"}), Rational(-1));
  for (auto& [w, c] : U.element_of(U.model().bracket(U.gen(m2), U.gen(p1)))) expect[w] += c;
  CHECK(U.straighten({m2, p1}) == expect);
  long bad = 0;
  for (int k = 0; k <= 4; ++k)
    for (auto& w : U.words(k)) {
      std::vector<int> f(w.begin(), w.end());
      if (!(U.straighten(f) == unit(w)) || U.udeg(w) != k || !U.is_normal(w)) ++bad;
    }
  CHECK(bad == 0);
}

TEST_CASE("action of non-negative degrees on induced vectors") {
  Workspace& ws = e38();
  const Enveloping& U = ws.U();
  auto V = ws.fock_weight(Lagrangian::A, 1, 1);
  const AlgebraModel& M = ws.model();
  int a = 0;
  CHECK(act_full(U, *V, M.element("e'0"), basis_vector({}, a)).empty());
  SparseVec f2v = V->act(M.element("f2"), SparseVec{{a, Rational(1)}});
  InducedVector expect;
  for (auto& [b, c] : f2v) expect[{Word{}, b}] = c;
  CHECK(act_full(U, *V, M.element("e'0"), basis_vector(word(U, {"d+1"}), a)) == expect);
  CHECK(act_full(U, *V, M.element("f2"), basis_vector({}, a)) == expect);
}

TEST_CASE("act_full is a representation at truncation") {
  Workspace& ws = e38();
  const Enveloping& U = ws.U();
  const AlgebraModel& M = ws.model();
  auto V = ws.fock_weight(Lagrangian::A, 1, 1);
  std::vector<SuperElement> xs;
  for (auto& [n, g] : singular_generators(M)) xs.push_back(g);
  for (const char* n : {"d+1", "d-3"}) xs.push_back(M.element(n));
  xs.push_back(U.gen(U.find_gen("D2")));
  long bad = 0, checked = 0;
  for (int k = 0; k <= 2; ++k)
    for (auto& w : U.words(k))
      for (int a = 0; a < V->dim(); a += 2) {
        InducedVector m = basis_vector(w, a);
        for (auto& x : xs)
          for (auto& y : xs) {
            int dx = x.degree(), dy = y.degree();
            if (k - std::min(dx, 0) - std::min(dy, 0) > U.cutoff() || dx + dy > M.jmax()) continue;
            int s = (x.parity() & y.parity()) ? -1 : 1;
            InducedVector lhs = add(act_full(U, *V, x, act_full(U, *V, y, m)), act_full(U, *V, y, act_full(U, *V, x, m)), Rational(-s));
            ++checked;
            if (!(lhs == act_full(U, *V, M.bracket(x, y), m))) ++bad;
          }
      }
  CHECK(checked > 1000);
  CHECK(bad == 0);
}

TEST_CASE("nabla, nabla2, nabla3 on ground vectors") {
  Workspace& ws = e38();
  const Enveloping& U = ws.U();
  MorphismElement nab = fock_morphism("nabla", Lagrangian::A, 1, 1);
  REQUIRE(nab.target);
  auto& src = static_cast<const FockGround&>(*nab.source).block();
  auto& tgt = static_cast<const FockGround&>(*nab.target).block();
  CHECK(tgt.m == 0);
  CHECK(tgt.n == 0);
  InducedVector img = apply_phi(U, nab, basis_vector({}, block_index(src, {1, 0, 0, 1, 0})));
  CHECK(img == basis_vector(word(U, {"d+1"}), 0));

  MorphismElement zero = fock_morphism("nabla", Lagrangian::A, 0, 0);
  CHECK(zero.is_zero());

  MorphismElement n2 = fock_morphism("nabla2", Lagrangian::A, 2, 0);
  REQUIRE(n2.target);
  auto& s2 = static_cast<const FockGround&>(*n2.source).block();
  CHECK(static_cast<const FockGround&>(*n2.target).block().tag == Lagrangian::B);
  InducedVector i2 = apply_phi(U, n2, basis_vector({}, block_index(s2, {2, 0, 0, 0, 0})));
  InducedVector e2;
  for (auto& [w, c] : U.straighten({U.find_gen("d-1"), U.find_gen("d+1")})) e2[{w, 0}] = 2 * c;
  CHECK(i2 == e2);

  MorphismElement n3 = fock_morphism("nabla3", Lagrangian::A, 0, 3);
  CHECK(n3.udeg == 3);
  CHECK_FALSE(n3.is_zero());

  // Hom-part bookkeeping: nabla lowers both weight coordinates of V_A by one.
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      MorphismElement phi = fock_morphism("nabla", Lagrangian::A, m, n);
      REQUIRE(phi.target);
      auto& t = static_cast<const FockGround&>(*phi.target).block();
      CHECK(t.m == m - 1);
      CHECK(t.n == n - 1);
    }
}

TEST_CASE("singular vectors") {
  Workspace& ws = e38();
  const Enveloping& U = ws.U();
  auto gens = singular_generators(ws.model());
  CHECK(gens.size() == 14);
  MorphismElement nab = fock_morphism("nabla", Lagrangian::A, 2, 2);
  SingularReport r = verify_singular(U, nab, gens, &ws.rho());
  CHECK(r.pass);
  for (auto& res : r.residuals) CHECK_MESSAGE(res.zero, res.generator);
  Workspace& w5 = e510();
  MorphismElement na = build_morphism(w5, "nablaA", 'A', 1, 1);
  CHECK(verify_singular(w5.U(), na, singular_generators(w5.model()), &w5.rho()).pass);
  MorphismElement raw = build_morphism(w5, "nablaA_raw", 'A', 1, 1);
  CHECK_FALSE(verify_singular(w5.U(), raw, singular_generators(w5.model()), &w5.rho()).pass);
  CHECK(build_morphism(w5, "nablaA", 'A', 2, 0).is_zero());
  CHECK_THROWS_AS(build_morphism(ws, "nabla2", 'A', 1, 1), std::invalid_argument);
}

// w (x) a -> w Phi a is right multiplication, so it commutes with the action without signs.
TEST_CASE("induced maps are equivariant") {
  struct Case {
    Workspace* ws;
    MorphismElement phi;
  };
  std::vector<Case> cases = {{&e38(), fock_morphism("nabla", Lagrangian::A, 2, 1)},
                             {&e38(), fock_morphism("nabla2", Lagrangian::C, -2, 0)},
                             {&e510(), build_morphism(e510(), "nablaC", 'C', 1, 1)}};
  for (auto& [ws, phi] : cases) {
    REQUIRE(phi.target);
    const Enveloping& U = ws->U();
    const AlgebraModel& M = ws->model();
    std::vector<std::pair<SuperElement, int>> xs;  // element and the U-degree it adds
    for (int g = 0; g < U.ngens(); ++g) xs.push_back({U.gen(g), U.gen_udeg(g)});
    for (auto& [n, g] : singular_generators(M)) xs.push_back({g, 0});
    long bad = 0, checked = 0;
    for (int k = 0; k + phi.udeg <= U.cutoff(); ++k)
      for (auto& w : U.words(k))
        for (int a = 0; a < phi.source->dim(); ++a) {
          InducedVector m = basis_vector(w, a);
          for (auto& [x, du] : xs) {
            if (k + du + phi.udeg > U.cutoff() || k > 2) continue;
            InducedVector lhs = apply_phi(U, phi, act_full(U, *phi.source, x, m, &ws->rho()));
            InducedVector rhs = act_full(U, *phi.target, x, apply_phi(U, phi, m), &ws->rho());
            ++checked;
            if (!(lhs == rhs)) {
              ++bad;
              if (bad < 4) MESSAGE(std::string(x.str() + " on " + U.word_str(w)));
            }
          }
        }
    CHECK_MESSAGE(bad == 0, phi.name);
    CHECK(checked > 0);
  }
}

TEST_CASE("induce_map agrees with the element-level image") {
  Workspace& ws = e38();
  MorphismElement phi = fock_morphism("nabla", Lagrangian::A, 2, 2);
  const InducedModule& S = ws.induced(phi.source, 2);
  const InducedModule& T = ws.induced(phi.target, 3);
  GradedBlockMap G = induce_map(phi, S, T, 2);
  CHECK(G.shift == 1);
  long bad = 0;
  for (auto& [key, B] : G.blocks) {
    auto& sb = S.blocks().at(key);
    BlockKey tk{key.udeg + 1, key.weight};
    for (int c = 0; c < B.cols(); ++c) {
      InducedVector fromB;
      for (auto& [r, v] : B.column(c)) fromB[T.blocks().at(tk)[static_cast<size_t>(r)]] = v;
      if (!(fromB == apply_phi(ws.U(), phi, basis_vector(sb[static_cast<size_t>(c)].first, sb[static_cast<size_t>(c)].second)))) ++bad;
    }
  }
  CHECK(bad == 0);
  // The degree-0 part is injective, so the quotient by the kernel keeps the whole ground.
  int rank0 = 0;
  for (auto& [key, B] : G.blocks)
    if (key.udeg == 0) rank0 += rank_of(B);
  auto& blk = static_cast<const FockGround&>(*phi.source).block();
  CHECK(rank0 == dim_irrep_g0(blk.label.p, blk.label.q, blk.label.r));
}
