#include "kr/verma.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

struct GenSpec {
  std::string name;
  SuperElement x;
};

std::vector<GenSpec> canonical_gens(const AlgebraModel& M) {
  AlgebraId id = M.id();
  std::vector<GenSpec> g;
  int n = algebra_nvars(id);
  for (int i = 0; i < n; ++i)
    g.push_back({"D" + std::to_string(i + 1), SuperElement(id, BasisSymbol{Kind::Field, static_cast<int8_t>(i), Monomial{}})});
  if (id == AlgebraId::E510) {
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        std::string nm = "d" + std::to_string(i) + std::to_string(j);
        g.push_back({nm, M.element(nm)});
      }
    return g;
  }
  if (id == AlgebraId::E38) {
    g.push_back({"d+", M.element("d+")});
    g.push_back({"d-", M.element("d-")});
  }
  for (const char* s : {"+", "-"})
    for (int i = 1; i <= 3; ++i) {
      std::string nm = std::string("d") + s + std::to_string(i);
      g.push_back({nm, M.element(nm)});
    }
  return g;
}

void add_to(UElem& r, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto it = r.find(w);
  if (it == r.end()) {
    r.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) r.erase(it);
}

void add_all(UElem& r, const UElem& x, const Rational& c) {
  for (auto& [w, v] : x) add_to(r, w, v * c);
}

}  // namespace

Enveloping::Enveloping(const AlgebraModel& model, int cutoff, std::vector<int> order) : model_(&model), cutoff_(cutoff) {
  auto specs = canonical_gens(model);
  int n = static_cast<int>(specs.size());
  if (order.empty())
    for (int i = 0; i < n; ++i) order.push_back(i);
  std::vector<int> chk = order;
  std::sort(chk.begin(), chk.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(chk.size()) != n || chk[static_cast<size_t>(i)] != i)
      throw std::invalid_argument("PBW order is not a permutation of the generators");
  for (int k : order) {
    auto& s = specs[static_cast<size_t>(k)];
    int d = s.x.degree();
    if (!model.in_window(d)) throw std::invalid_argument("model window does not contain L_-");
    int g = static_cast<int>(gens_.size());
    gens_.push_back(s.x);
    names_.push_back(s.name);
    udeg_.push_back(-d);
    par_.push_back(s.x.parity());
    if (!gen_span_[d].add(model.coords(s.x, d))) throw std::logic_error("dependent generators of L_-");
    gen_of_deg_[d].push_back(g);
  }
  for (auto& [d, v] : gen_of_deg_)
    if (static_cast<int>(v.size()) != model.dim(d)) throw std::logic_error("generators do not span L_-");
  brackets_.assign(static_cast<size_t>(n), std::vector<UElem>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      brackets_[static_cast<size_t>(a)][static_cast<size_t>(b)] = element_of(model.bracket(gens_[static_cast<size_t>(a)], gens_[static_cast<size_t>(b)]));
}

int Enveloping::find_gen(const std::string& name) const {
  for (int g = 0; g < ngens(); ++g)
    if (names_[static_cast<size_t>(g)] == name) return g;
  throw std::out_of_range("no generator " + name);
}

int Enveloping::udeg(const Word& w) const {
  int d = 0;
  for (auto g : w) d += udeg_[g];
  return d;
}

int Enveloping::parity(const Word& w) const {
  int p = 0;
  for (auto g : w) p ^= par_[g];
  return p;
}

bool Enveloping::is_normal(const Word& w) const {
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i] < w[i - 1]) return false;
    if (w[i] == w[i - 1] && par_[w[i]]) return false;
  }
  return true;
}

std::string Enveloping::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += names_[w[i]];
  }
  return s;
}

UElem Enveloping::element_of(const SuperElement& x) const {
  UElem r;
  for (auto& [d, xd] : x.by_degree()) {
    if (d >= 0) throw std::invalid_argument("element is not in L_-");
    auto it = gen_span_.find(d);
    if (it == gen_span_.end()) continue;  // below the depth
    auto c = it->second.coords(model_->coords(xd, d));
    if (!c) throw std::logic_error("element outside the span of the generators");
    for (auto& [k, v] : *c) add_to(r, Word{static_cast<uint8_t>(gen_of_deg_.at(d)[static_cast<size_t>(k)])}, v);
  }
  return r;
}

UElem Enveloping::bracket_gens(int a, int b) const { return brackets_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

UElem Enveloping::left_mul(int g, const Word& w) const {
  if (udeg_[static_cast<size_t>(g)] + udeg(w) > cutoff_)
    throw std::out_of_range("U-degree exceeds the cutoff " + std::to_string(cutoff_));
  if (w.empty() || g < w[0] || (g == w[0] && !par_[static_cast<size_t>(g)])) {
    Word r;
    r.reserve(w.size() + 1);
    r.push_back(static_cast<uint8_t>(g));
    r.insert(r.end(), w.begin(), w.end());
    return UElem{{r, Rational(1)}};
  }
  auto key = std::make_pair(g, w);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = lmemo_.find(key);
    if (it != lmemo_.end()) return it->second;
  }
  UElem res;
  int f = w[0];
  Word rest(w.begin() + 1, w.end());
  if (g == f) {
    // g odd: g g = [g,g]/2
    for (auto& [bw, c] : bracket_gens(g, g)) add_all(res, left_mul(bw[0], rest), c * rat(1, 2));
  } else {
    Rational s = (par_[static_cast<size_t>(g)] && par_[static_cast<size_t>(f)]) ? Rational(-1) : Rational(1);
    for (auto& [w1, c1] : left_mul(g, rest)) add_all(res, left_mul(f, w1), c1 * s);
    for (auto& [bw, c] : bracket_gens(g, f)) add_all(res, left_mul(bw[0], rest), c);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return lmemo_.emplace(key, std::move(res)).first->second;
}

UElem Enveloping::mul(const Word& a, const Word& b) const {
  UElem cur{{b, Rational(1)}};
  for (size_t i = a.size(); i-- > 0;) {
    UElem nxt;
    for (auto& [w, c] : cur) add_all(nxt, left_mul(a[i], w), c);
    cur = std::move(nxt);
  }
  return cur;
}

UElem Enveloping::mul(const UElem& a, const UElem& b) const {
  UElem r;
  for (auto& [wa, ca] : a)
    for (auto& [wb, cb] : b) add_all(r, mul(wa, wb), ca * cb);
  return r;
}

UElem Enveloping::straighten(const std::vector<int>& factors) const {
  UElem cur{{Word{}, Rational(1)}};
  for (size_t i = factors.size(); i-- > 0;) {
    UElem nxt;
    for (auto& [w, c] : cur) add_all(nxt, left_mul(factors[i], w), c);
    cur = std::move(nxt);
  }
  return cur;
}

const std::vector<Word>& Enveloping::words(int d) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = words_.find(d);
    if (it != words_.end()) return it->second;
  }
  std::vector<Word> out;
  Word cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int g = start; g < ngens(); ++g) {
      int u = udeg_[static_cast<size_t>(g)];
      if (u > left) continue;
      cur.push_back(static_cast<uint8_t>(g));
      rec(par_[static_cast<size_t>(g)] ? g + 1 : g, left - u);
      cur.pop_back();
    }
  };
  if (d >= 0) rec(0, d);
  std::lock_guard<std::mutex> lk(mu_);
  return words_.emplace(d, std::move(out)).first->second;
}

const Enveloping::Action& Enveloping::act_word(int j, int idx, const Word& w) const {
  auto key = std::make_tuple(j, idx, w);
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = amemo_.find(key);
    if (it != amemo_.end()) return it->second;
  }
  Action res;
  auto add_rem = [&](const Word& ww, int r, const Rational& c) {
    if (c.is_zero()) return;
    auto& v = res[ww];
    auto it = v.find(r);
    if (it == v.end()) {
      v.emplace(r, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
    }
    if (v.empty()) res.erase(ww);
  };
  const SuperElement& x = model_->basis(j)[static_cast<size_t>(idx)];
  if (w.empty()) {
    if (j == 0) add_rem(Word{}, idx, Rational(1));
  } else {
    int w1 = w[0];
    Word rest(w.begin() + 1, w.end());
    SuperElement y = model_->bracket(x, gens_[static_cast<size_t>(w1)]);
    int dy = j - udeg_[static_cast<size_t>(w1)];
    if (!y.is_zero()) {
      if (dy < 0) {
        for (auto& [gw, c] : element_of(y))
          for (auto& [w2, c2] : left_mul(gw[0], rest)) add_rem(w2, -1, c * c2);
      } else {
        for (auto& [b, c] : model_->coords(y, dy))
          for (auto& [w2, rem] : act_word(dy, b, rest))
            for (auto& [r, c2] : rem) add_rem(w2, r, c * c2);
      }
    }
    Rational s = (x.parity() && par_[static_cast<size_t>(w1)]) ? Rational(-1) : Rational(1);
    for (auto& [w2, rem] : act_word(j, idx, rest))
      for (auto& [w3, c3] : left_mul(w1, w2))
        for (auto& [r, c2] : rem) add_rem(w3, r, s * c3 * c2);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return amemo_.emplace(key, std::move(res)).first->second;
}

SparseMatrix rho_matrix(const GroundModule& V, const SuperElement& x) {
  int n = V.dim();
  SparseMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (auto& [r, c] : V.act(x, SparseVec{{i, Rational(1)}})) M.set(r, i, c);
  return M;
}

std::string FockGround::basis_label(int i) const {
  return FockVector::monomial(b_.tag, b_.basis[static_cast<size_t>(i)]).str();
}

SparseVec FockGround::act(const SuperElement& x, const SparseVec& v) const {
  return b_.coords(fock_apply(g0_embed(x, b_.flavor), b_.vector(v)));
}

SparseVec S5Ground::act(const SuperElement& x, const SparseVec& v) const {
  // x_a d_b acts as E_ab.
  Poly f(s5_universe(h_.X));
  for (auto& [i, c] : v) f += h_.poly(i) * c;
  Poly out(s5_universe(h_.X));
  for (auto& [s, c] : x.terms()) {
    if (s.kind != Kind::Field || s.mono.even_degree() != 1 || s.mono.odd)
      throw std::invalid_argument("not a degree-0 element of E(5,10)");
    int a = 0;
    while (s.mono.deg(a) == 0) ++a;
    out += sl5_act(h_.X, a + 1, s.a + 1, f) * c;
  }
  return h_.coords(out);
}

bool MorphismElement::is_zero() const {
  for (auto& [w, l] : terms)
    if (!l.is_zero()) return false;
  return true;
}

void MorphismElement::add(const UElem& u, const SparseMatrix& l) {
  for (auto& [w, c] : u) {
    auto it = terms.find(w);
    SparseMatrix t = l.scaled(c);
    if (it == terms.end()) {
      if (!t.is_zero()) terms.emplace(w, std::move(t));
      continue;
    }
    it->second = it->second + t;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].pretty();
  }
  return s + ")";
}

std::vector<SuperElement> cartan_elements(const AlgebraModel& m) {
  if (m.id() == AlgebraId::E510) return {m.element("H1"), m.element("H2"), m.element("H3"), m.element("H4")};
  std::vector<SuperElement> out;
  for (int i = 0; i < 3; ++i) {
    Monomial mo;
    mo.e[static_cast<size_t>(i)] = 1;
    out.push_back(SuperElement(m.id(), BasisSymbol{Kind::Field, static_cast<int8_t>(i), mo}));
  }
  out.push_back(m.element("h3"));
  return out;
}

namespace {

Rational eigenvalue(const SparseVec& image, const SparseVec& v) {
  if (v.empty()) throw std::logic_error("zero vector has no eigenvalue");
  auto [k, c] = *v.begin();
  auto it = image.find(k);
  Rational lam = it == image.end() ? Rational(0) : it->second / c;
  SparseVec diff = image;
  axpy(diff, -lam, v);
  if (!diff.empty()) throw std::logic_error("basis vector is not a weight vector");
  return lam;
}

}  // namespace

InducedModule::InducedModule(const Enveloping& U, std::shared_ptr<const GroundModule> V, const std::vector<SuperElement>& cartan,
                             int max_udeg)
    : U_(&U), V_(std::move(V)), max_udeg_(max_udeg < 0 ? U.cutoff() : std::min(max_udeg, U.cutoff())) {
  const AlgebraModel& M = U.model();
  for (int g = 0; g < U.ngens(); ++g) {
    Weight w;
    int d = -U.gen_udeg(g);
    for (auto& H : cartan) w.push_back(eigenvalue(M.coords(M.bracket(H, U.gen(g)), d), M.coords(U.gen(g), d)));
    genw_.push_back(std::move(w));
  }
  for (int a = 0; a < V_->dim(); ++a) {
    Weight w;
    SparseVec e{{a, Rational(1)}};
    for (auto& H : cartan) w.push_back(eigenvalue(V_->act(H, e), e));
    gw_.push_back(std::move(w));
  }
  for (int k = 0; k <= max_udeg_; ++k)
    for (auto& w : U.words(k)) {
      Weight ww = word_weight(w);
      for (int a = 0; a < V_->dim(); ++a) {
        BlockKey key{k, ww};
        for (size_t i = 0; i < ww.size(); ++i) key.weight[i] += gw_[static_cast<size_t>(a)][i];
        auto& blk = blocks_[key];
        index_[{w, a}] = {key, static_cast<int>(blk.size())};
        blk.push_back({w, a});
      }
    }
}

Weight InducedModule::word_weight(const Word& w) const {
  Weight r(genw_.empty() ? gw_.front().size() : genw_.front().size());
  for (auto g : w)
    for (size_t i = 0; i < r.size(); ++i) r[i] += genw_[g][i];
  return r;
}

std::pair<BlockKey, int> InducedModule::locate(const Word& w, int a) const {
  auto it = index_.find({w, a});
  if (it == index_.end()) throw std::out_of_range("vector outside the truncated module");
  return it->second;
}

int InducedModule::dim(int udeg) const {
  int d = 0;
  for (auto& [k, b] : blocks_)
    if (k.udeg == udeg) d += static_cast<int>(b.size());
  return d;
}

std::string induced_str(const Enveloping& U, const InducedVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + c.pretty() + ") " + U.word_str(k.first) + " (x) v" + std::to_string(k.second);
  }
  return s;
}

namespace {

const SparseMatrix& rho_cached(const Enveloping& U, const GroundModule& V, int k, RhoCache& cache) {
  auto key = std::make_pair(&V, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, rho_matrix(V, U.model().basis(0)[static_cast<size_t>(k)])).first->second;
}

void add_iv(InducedVector& r, const Word& w, int a, const Rational& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(w, a);
  auto it = r.find(key);
  if (it == r.end()) {
    r.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) r.erase(it);
}

}  // namespace

InducedVector act_full(const Enveloping& U, const GroundModule& V, const SuperElement& x, const InducedVector& v, RhoCache* cache) {
  RhoCache local;
  RhoCache& rc = cache ? *cache : local;
  const AlgebraModel& M = U.model();
  InducedVector r;
  for (auto& [d, xd] : x.by_degree()) {
    if (d < 0) {
      UElem e = U.element_of(xd);
      for (auto& [key, c] : v)
        for (auto& [g, cg] : e)
          for (auto& [w2, c2] : U.left_mul(g[0], key.first)) add_iv(r, w2, key.second, c * cg * c2);
      continue;
    }
    if (!M.in_window(d)) throw std::out_of_range("element outside the model window");
    for (auto& [b, cb] : M.coords(xd, d))
      for (auto& [key, c] : v)
        for (auto& [w2, rem] : U.act_word(d, b, key.first))
          for (auto& [rr, cr] : rem) {
            Rational f = c * cb * cr;
            if (rr < 0) {
              add_iv(r, w2, key.second, f);
            } else {
              for (auto& [row, cv] : rho_cached(U, V, rr, rc).column(key.second)) add_iv(r, w2, row, f * cv);
            }
          }
  }
  return r;
}

MorphismElement phi_act(const Enveloping& U, const SuperElement& v, const MorphismElement& phi, RhoCache* cache) {
  RhoCache local;
  RhoCache& rc = cache ? *cache : local;
  const AlgebraModel& M = U.model();
  MorphismElement res;
  res.name = phi.name;
  res.source = phi.source;
  res.target = phi.target;
  res.udeg = phi.udeg;
  for (auto& [d, vd] : v.by_degree()) {
    if (d < 0) throw std::invalid_argument("phi_act needs an element of non-negative degree");
    for (auto& [b, cb] : M.coords(vd, d)) {
      for (auto& [u, l] : phi.terms) {
        std::map<int, SparseMatrix> prod;  // rho_T(r) l
        for (auto& [w2, rem] : U.act_word(d, b, u))
          for (auto& [r, cr] : rem) {
            if (r < 0) {
              res.add(UElem{{w2, cb * cr}}, l);
              continue;
            }
            auto it = prod.find(r);
            if (it == prod.end()) it = prod.emplace(r, rho_cached(U, *phi.target, r, rc) * l).first;
            res.add(UElem{{w2, cb * cr}}, it->second);
          }
        if (d == 0) res.add(UElem{{u, -cb}}, l * rho_cached(U, *phi.source, b, rc));
      }
    }
  }
  return res;
}

SingularReport verify_singular(const Enveloping& U, const MorphismElement& phi,
                               const std::vector<std::pair<std::string, SuperElement>>& generators, RhoCache* cache) {
  SingularReport rep;
  rep.morphism = phi.name;
  for (auto& [nm, x] : generators) {
    SingularResidual r;
    r.generator = nm;
    MorphismElement res = phi_act(U, x, phi, cache);
    for (auto& [w, l] : res.terms) {
      r.nonzero_entries += static_cast<long>(l.entries().size());
      for (auto& [rc, c] : l.entries()) {
        if (r.sample.size() >= 3) break;
        r.sample.push_back(U.word_str(w) + ": (" + std::to_string(rc.first) + "," + std::to_string(rc.second) + ")=" + c.str());
      }
    }
    r.zero = r.nonzero_entries == 0;
    if (!r.zero) rep.pass = false;
    rep.residuals.push_back(std::move(r));
  }
  return rep;
}

std::vector<std::pair<std::string, SuperElement>> singular_generators(const AlgebraModel& m) {
  std::vector<std::pair<std::string, SuperElement>> out;
  if (m.id() == AlgebraId::E510) {
    for (int j = 0; j <= 1; ++j)
      for (size_t k = 0; k < m.basis(j).size(); ++k)
        out.push_back({"g" + std::to_string(j) + "[" + std::to_string(k) + "]", m.basis(j)[k]});
    return out;
  }
  for (const char* nm : {"e1", "e2", "e3", "e12", "f1", "f2", "f3", "f12", "h1", "h2", "h3", "Y", "e'0"})
    out.push_back({nm, m.element(nm)});
  if (m.id() == AlgebraId::E38) out.push_back({"es0", m.element("es0")});
  return out;
}

GradedBlockMap induce_map(const MorphismElement& phi, const InducedModule& src, const InducedModule& tgt, int max_source_udeg) {
  const Enveloping& U = src.U();
  GradedBlockMap G;
  G.name = phi.name;
  G.shift = phi.udeg;
  // Columns of every Hom part.
  std::vector<std::pair<const Word*, std::vector<SparseVec>>> cols;
  for (auto& [u, l] : phi.terms) cols.push_back({&u, l.transpose().row_vectors()});
  for (auto& [key, basis] : src.blocks()) {
    if (key.udeg > max_source_udeg || key.udeg + G.shift > tgt.max_udeg()) continue;
    BlockKey tk{key.udeg + G.shift, key.weight};
    auto tit = tgt.blocks().find(tk);
    int rows = tit == tgt.blocks().end() ? 0 : static_cast<int>(tit->second.size());
    SparseMatrix B(rows, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) {
      auto& [w, a] = basis[c];
      for (auto& [u, lc] : cols) {
        if (static_cast<size_t>(a) >= lc.size() || lc[static_cast<size_t>(a)].empty()) continue;
        for (auto& [w2, cw] : U.mul(w, *u))
          for (auto& [b, cb] : lc[static_cast<size_t>(a)]) {
            auto [k2, pos] = tgt.locate(w2, b);
            if (!(k2 == tk)) throw std::logic_error("map does not preserve weights: " + key.str() + " -> " + k2.str());
            B.add(pos, static_cast<int>(c), cw * cb);
          }
      }
    }
    G.blocks.emplace(key, std::move(B));
  }
  return G;
}

MorphismElement compose_elements(const Enveloping& U, const MorphismElement& phi1, const MorphismElement& phi2) {
  if (phi2.target->name() != phi1.source->name()) throw std::invalid_argument("morphisms are not composable");
  MorphismElement r;
  r.name = phi1.name + "o" + phi2.name;
  r.source = phi2.source;
  r.target = phi1.target;
  r.udeg = phi1.udeg + phi2.udeg;
  for (auto& [u2, l2] : phi2.terms)
    for (auto& [u1, l1] : phi1.terms) r.add(U.mul(u2, u1), l1 * l2);
  return r;
}

}  // namespace kr
