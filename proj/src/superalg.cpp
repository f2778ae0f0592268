#include "kr/superalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kr {

std::string algebra_name(AlgebraId id) {
  switch (id) {
    case AlgebraId::E36: return "e36";
    case AlgebraId::E38: return "e38";
    case AlgebraId::E510: return "e510";
  }
  return "?";
}

AlgebraId parse_algebra(const std::string& s) {
  if (s == "e36" || s == "E36") return AlgebraId::E36;
  if (s == "e38" || s == "E38") return AlgebraId::E38;
  if (s == "e510" || s == "E510") return AlgebraId::E510;
  throw std::invalid_argument("unknown algebra: " + s);
}

int algebra_depth(AlgebraId id) { return id == AlgebraId::E38 ? -3 : -2; }
int algebra_nvars(AlgebraId id) { return id == AlgebraId::E510 ? 5 : 3; }

int symbol_degree(AlgebraId id, const BasisSymbol& s) {
  int k = 2 * s.mono.even_degree();
  switch (s.kind) {
    case Kind::Field: return k - 2;
    case Kind::Current: return k;
    case Kind::OddScalar: return k - 3;
    case Kind::OddOneForm: return k - 1;
    case Kind::OddTwoForm: return k + 1;
    case Kind::ClosedTwoForm: return id == AlgebraId::E510 ? k - 1 : k + 4;
  }
  return 0;
}

int symbol_parity(AlgebraId id, const BasisSymbol& s) {
  switch (s.kind) {
    case Kind::Field:
    case Kind::Current: return 0;
    case Kind::ClosedTwoForm: return id == AlgebraId::E510 ? 1 : 0;
    default: return 1;
  }
}

SuperElement::SuperElement(AlgebraId id, const BasisSymbol& s, const Rational& c) : id_(id) { add(s, c); }

void SuperElement::add(const BasisSymbol& s, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void SuperElement::check(const SuperElement& o) const {
  if (o.id_ != id_ && !o.t_.empty() && !t_.empty()) throw std::invalid_argument("elements of different algebras");
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  check(o);
  if (t_.empty()) id_ = o.id_;
  for (auto& [s, c] : o.t_) add(s, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  check(o);
  if (t_.empty()) id_ = o.id_;
  for (auto& [s, c] : o.t_) add(s, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const Rational& c) {
  if (c.is_zero()) t_.clear();
  for (auto& kv : t_) kv.second *= c;
  return *this;
}

int SuperElement::degree() const {
  if (t_.empty()) throw std::logic_error("degree of zero element");
  int d = symbol_degree(id_, t_.begin()->first);
  for (auto& kv : t_)
    if (symbol_degree(id_, kv.first) != d) throw std::logic_error("inhomogeneous element");
  return d;
}

int SuperElement::parity() const {
  if (t_.empty()) return 0;
  int p = symbol_parity(id_, t_.begin()->first);
  for (auto& kv : t_)
    if (symbol_parity(id_, kv.first) != p) throw std::logic_error("element of mixed parity");
  return p;
}

std::map<int, SuperElement> SuperElement::by_degree() const {
  std::map<int, SuperElement> out;
  for (auto& [s, c] : t_) {
    auto it = out.try_emplace(symbol_degree(id_, s), id_).first;
    it->second.add(s, c);
  }
  return out;
}

namespace {

const char* kSl2[3] = {"e", "f", "h"};

std::string mono_str(int n, const Monomial& m) {
  Monomial e = m;
  Poly p = Poly::monomial(m.odd ? Universe::forms(n) : Universe::plain(n), e);
  return p.str();
}

}  // namespace

std::string SuperElement::str() const {
  if (t_.empty()) return "0";
  int n = algebra_nvars(id_);
  std::ostringstream os;
  bool first = true;
  for (auto& [s, c] : t_) {
    std::string body;
    std::string m = mono_str(n, s.mono);
    bool unit = m == "1";
    switch (s.kind) {
      case Kind::Field: body = (unit ? "" : m + "*") + "D" + std::to_string(s.a + 1); break;
      case Kind::Current: body = (unit ? "" : m + "*") + "(" + kSl2[s.a] + ")"; break;
      case Kind::ClosedTwoForm: body = m; break;
      default: body = (unit ? "" : m + "*") + (s.a == 0 ? "E+" : "E-"); break;
    }
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.sign() < 0 ? -c : c;
    if (!(a == Rational(1))) os << a.pretty() << "*";
    os << body;
    first = false;
  }
  return os.str();
}

SuperElement field_element(AlgebraId id, const VecField& d) {
  SuperElement r(id);
  for (size_t i = 0; i < d.size(); ++i)
    for (auto& [m, c] : d[i].terms()) r.add(BasisSymbol{Kind::Field, static_cast<int8_t>(i), m}, c);
  return r;
}

SuperElement current_element(AlgebraId id, const Poly& a, int x) {
  SuperElement r(id);
  for (auto& [m, c] : a.terms()) r.add(BasisSymbol{Kind::Current, static_cast<int8_t>(x), m}, c);
  return r;
}

SuperElement form_element(AlgebraId id, Kind kind, const Poly& w, int sign) {
  SuperElement r(id);
  for (auto& [m, c] : w.terms()) r.add(BasisSymbol{kind, static_cast<int8_t>(sign), m}, c);
  return r;
}

VecField field_part(const SuperElement& x) {
  int n = algebra_nvars(x.algebra());
  VecField d = zero_field(n);
  for (auto& [s, c] : x.terms())
    if (s.kind == Kind::Field) d[static_cast<size_t>(s.a)].add_term(s.mono, c);
  return d;
}

Poly current_part(const SuperElement& x, int X) {
  Poly p(Universe::plain(algebra_nvars(x.algebra())));
  for (auto& [s, c] : x.terms())
    if (s.kind == Kind::Current && s.a == X) p.add_term(s.mono, c);
  return p;
}

Poly form_part(const SuperElement& x, Kind kind, int sign) {
  int n = algebra_nvars(x.algebra());
  Poly p(kind == Kind::OddScalar ? Universe::plain(n) : Universe::forms(n));
  for (auto& [s, c] : x.terms())
    if (s.kind == kind && (kind == Kind::ClosedTwoForm || s.a == sign)) p.add_term(s.mono, c);
  return p;
}

namespace {

struct Ctx {
  AlgebraId id;
  int n;
  Universe pu, fu;
  explicit Ctx(AlgebraId i) : id(i), n(algebra_nvars(i)), pu(Universe::plain(n)), fu(Universe::forms(n)) {}
};

Poly fn_of(const Ctx& c, const BasisSymbol& s) {
  Monomial m = s.mono;
  m.odd = 0;
  return Poly::monomial(c.pu, m);
}

Poly form_of(const Ctx& c, const BasisSymbol& s) { return Poly::monomial(c.fu, s.mono); }

VecField field_of(const Ctx& c, const BasisSymbol& s) {
  VecField d = zero_field(c.n);
  d[static_cast<size_t>(s.a)] = fn_of(c, s);
  return d;
}

// X . eps^s = coef * eps^out
bool sl2_act(int X, int s, Rational& coef, int& out) {
  if (X == 2) {
    coef = s == 0 ? Rational(1) : Rational(-1);
    out = s;
    return true;
  }
  if (X == 0 && s == 1) {
    coef = 1;
    out = 0;
    return true;
  }
  if (X == 1 && s == 0) {
    coef = 1;
    out = 1;
    return true;
  }
  return false;
}

std::vector<std::pair<Rational, int>> sl2_bracket(int X, int Y) {
  auto base = [](int a, int b) -> std::vector<std::pair<Rational, int>> {
    if (a == 2 && b == 0) return {{Rational(2), 0}};
    if (a == 2 && b == 1) return {{Rational(-2), 1}};
    if (a == 0 && b == 1) return {{Rational(1), 2}};
    return {};
  };
  auto r = base(X, Y);
  if (!r.empty()) return r;
  r = base(Y, X);
  for (auto& t : r) t.first = -t.first;
  return r;
}

// eps+ ^ eps- = 1
Rational pm_wedge(int u, int v) {
  if (u == 0 && v == 1) return 1;
  if (u == 1 && v == 0) return -1;
  return 0;
}

// Symmetric square of C^2 identified with sl2.
std::vector<std::pair<Rational, int>> pm_sym(int u, int v) {
  if (u == 0 && v == 0) return {{Rational(1), 0}};
  if (u == 1 && v == 1) return {{Rational(-1), 1}};
  return {{rat(-1, 2), 2}};
}

void add_field(SuperElement& r, const VecField& d, const Rational& c = Rational(1)) {
  for (size_t i = 0; i < d.size(); ++i)
    for (auto& [m, x] : d[i].terms()) r.add(BasisSymbol{Kind::Field, static_cast<int8_t>(i), m}, x * c);
}

void add_current(SuperElement& r, const Poly& a, int X, const Rational& c = Rational(1)) {
  for (auto& [m, x] : a.terms()) r.add(BasisSymbol{Kind::Current, static_cast<int8_t>(X), m}, x * c);
}

void add_form(SuperElement& r, Kind kind, const Poly& w, int sign, const Rational& c = Rational(1)) {
  for (auto& [m, x] : w.terms()) r.add(BasisSymbol{kind, static_cast<int8_t>(sign), m}, x * c);
}

// Brackets shared by all three algebras on the even part.
bool even_even(const Ctx& c, const BasisSymbol& s, const BasisSymbol& t, SuperElement& r) {
  if (s.kind == Kind::Field && t.kind == Kind::Field) {
    add_field(r, lie_bracket(field_of(c, s), field_of(c, t)));
    return true;
  }
  if (s.kind == Kind::Field && t.kind == Kind::Current) {
    add_current(r, apply_field(field_of(c, s), fn_of(c, t)), t.a);
    return true;
  }
  if (s.kind == Kind::Current && t.kind == Kind::Current) {
    Poly ab = poly_mul(fn_of(c, s), fn_of(c, t));
    for (auto& [k, Z] : sl2_bracket(s.a, t.a)) add_current(r, ab, Z, k);
    return true;
  }
  return false;
}

SuperElement e36_bracket(const Ctx& c, const BasisSymbol& s, const BasisSymbol& t) {
  SuperElement r(c.id);
  if (even_even(c, s, t, r)) return r;
  if (s.kind == Kind::Field && t.kind == Kind::OddOneForm) {
    add_form(r, Kind::OddOneForm, twisted_action(field_of(c, s), form_of(c, t), rat(-1, 2)), t.a);
  } else if (s.kind == Kind::Current && t.kind == Kind::OddOneForm) {
    Rational k;
    int out;
    if (sl2_act(s.a, t.a, k, out)) add_form(r, Kind::OddOneForm, poly_mul(as_form(fn_of(c, s), c.n), form_of(c, t)), out, k);
  } else if (s.kind == Kind::OddOneForm && t.kind == Kind::OddOneForm) {
    Poly w = form_of(c, s), v = form_of(c, t);
    Rational k = pm_wedge(s.a, t.a);
    if (!k.is_zero()) add_field(r, form_to_field(poly_mul(w, v)), -k);
    Poly three = poly_mul(ext_d(w), v) + poly_mul(w, ext_d(v));
    if (!three.is_zero()) {
      Poly f = top_to_function(three);
      for (auto& [q, Z] : pm_sym(s.a, t.a)) add_current(r, f, Z, -q);
    }
  } else {
    throw std::logic_error("no E(3,6) symbol of this kind");
  }
  return r;
}

SuperElement e510_bracket(const Ctx& c, const BasisSymbol& s, const BasisSymbol& t) {
  SuperElement r(c.id);
  if (s.kind == Kind::Field && t.kind == Kind::Field) {
    add_field(r, lie_bracket(field_of(c, s), field_of(c, t)));
  } else if (s.kind == Kind::Field && t.kind == Kind::ClosedTwoForm) {
    add_form(r, Kind::ClosedTwoForm, lie_derivative(field_of(c, s), form_of(c, t)), 0);
  } else if (s.kind == Kind::ClosedTwoForm && t.kind == Kind::ClosedTwoForm) {
    add_field(r, form_to_field(poly_mul(form_of(c, s), form_of(c, t))));
  } else {
    throw std::logic_error("no E(5,10) symbol of this kind");
  }
  return r;
}

// E(3,8): even W3 + sl2(Omega^0) + closed 2-forms, odd Omega^0 (x) C^2 + Omega^2 (x) C^2.
SuperElement e38_bracket(const Ctx& c, const BasisSymbol& s, const BasisSymbol& t) {
  SuperElement r(c.id);
  if (even_even(c, s, t, r)) return r;
  const Rational half = rat(1, 2);
  if (s.kind == Kind::Field && t.kind == Kind::OddScalar) {
    VecField D = field_of(c, s);
    Poly g = fn_of(c, t);
    Poly dv = divergence(D);
    add_form(r, Kind::OddScalar, apply_field(D, g) - poly_mul(dv, g) * half, t.a);
    Poly corr = poly_mul(ext_d(as_form(dv, c.n)), ext_d(as_form(g, c.n)));
    add_form(r, Kind::OddTwoForm, corr, t.a, half);
  } else if (s.kind == Kind::Field && t.kind == Kind::OddTwoForm) {
    add_form(r, Kind::OddTwoForm, twisted_action(field_of(c, s), form_of(c, t), -half), t.a);
  } else if (s.kind == Kind::Field && t.kind == Kind::ClosedTwoForm) {
    add_form(r, Kind::ClosedTwoForm, lie_derivative(field_of(c, s), form_of(c, t)), 0);
  } else if (s.kind == Kind::Current && t.kind == Kind::OddScalar) {
    Rational k;
    int out;
    if (sl2_act(s.a, t.a, k, out)) {
      Poly a = fn_of(c, s), g = fn_of(c, t);
      add_form(r, Kind::OddScalar, poly_mul(a, g), out, k);
      add_form(r, Kind::OddTwoForm, poly_mul(ext_d(as_form(a, c.n)), ext_d(as_form(g, c.n))), out, k);
    }
  } else if (s.kind == Kind::Current && t.kind == Kind::OddTwoForm) {
    Rational k;
    int out;
    if (sl2_act(s.a, t.a, k, out)) add_form(r, Kind::OddTwoForm, poly_mul(as_form(fn_of(c, s), c.n), form_of(c, t)), out, k);
  } else if (s.kind == Kind::OddScalar && t.kind == Kind::OddScalar) {
    Rational k = pm_wedge(s.a, t.a);
    if (!k.is_zero())
      add_field(r, form_to_field(poly_mul(ext_d(as_form(fn_of(c, s), c.n)), ext_d(as_form(fn_of(c, t), c.n)))), -k);
  } else if (s.kind == Kind::OddScalar && t.kind == Kind::OddTwoForm) {
    Poly f = fn_of(c, s);
    VecField W = form_to_field(form_of(c, t));
    Rational k = pm_wedge(s.a, t.a);
    if (!k.is_zero()) add_field(r, field_mul(f, W), -k);
    Poly q = apply_field(W, f) - poly_mul(f, divergence(W));
    if (!q.is_zero())
      for (auto& [z, Z] : pm_sym(s.a, t.a)) add_current(r, q, Z, -z);
  } else if (s.kind == Kind::OddScalar && t.kind == Kind::ClosedTwoForm) {
    // [Z_w, f (x) v] = f w (x) v
    add_form(r, Kind::OddTwoForm, poly_mul(as_form(fn_of(c, s), c.n), form_of(c, t)), s.a, Rational(-1));
  } else {
    throw std::logic_error("E(3,8) pair of non-negative elements has no closed formula");
  }
  return r;
}

}  // namespace

SuperElement formula_bracket(AlgebraId id, const BasisSymbol& s, const BasisSymbol& t) {
  if (t.kind < s.kind) {
    SuperElement r = formula_bracket(id, t, s);
    int sign = (symbol_parity(id, s) & symbol_parity(id, t)) ? 1 : -1;
    return r *= Rational(sign);
  }
  Ctx c(id);
  switch (id) {
    case AlgebraId::E36: return e36_bracket(c, s, t);
    case AlgebraId::E510: return e510_bracket(c, s, t);
    case AlgebraId::E38: return e38_bracket(c, s, t);
  }
  return SuperElement(id);
}

int AlgebraModel::dim(int j) const {
  auto it = pieces_.find(j);
  return it == pieces_.end() ? 0 : static_cast<int>(it->second.basis.size());
}

const std::vector<SuperElement>& AlgebraModel::basis(int j) const {
  static const std::vector<SuperElement> empty;
  auto it = pieces_.find(j);
  if (it == pieces_.end()) {
    if (!in_window(j)) throw std::out_of_range("degree " + std::to_string(j) + " outside window");
    return empty;
  }
  return it->second.basis;
}

SparseVec AlgebraModel::coords(const SuperElement& x, int j) const {
  if (x.is_zero()) return {};
  auto it = pieces_.find(j);
  if (it == pieces_.end()) throw std::out_of_range("degree " + std::to_string(j) + " outside window");
  const Piece& p = it->second;
  SparseVec v;
  for (auto& [s, c] : x.terms()) {
    auto k = p.index.find(s);
    if (k == p.index.end()) throw std::logic_error("element not in g_" + std::to_string(j) + ": " + x.str());
    v.emplace(k->second, c);
  }
  auto r = p.solver.coords(v);
  if (!r) throw std::logic_error("element not in g_" + std::to_string(j) + ": " + x.str());
  return *r;
}

SuperElement AlgebraModel::combine(int j, const SparseVec& c) const {
  SuperElement r(id_);
  const auto& b = basis(j);
  for (auto& [i, x] : c) r += b[static_cast<size_t>(i)] * x;
  return r;
}

void AlgebraModel::add_basis(int j, SuperElement e) {
  Piece& p = pieces_[j];
  SparseVec v;
  for (auto& [s, c] : e.terms()) {
    auto it = p.index.emplace(s, static_cast<int>(p.index.size())).first;
    v.emplace(it->second, c);
  }
  if (!p.solver.add(v)) throw std::logic_error("dependent basis element " + e.str());
  p.basis.push_back(std::move(e));
}

SuperElement AlgebraModel::bracket_homogeneous(const SuperElement& x, int dx, const SuperElement& y, int dy) const {
  SuperElement r(id_);
  int d = dx + dy;
  if (d < algebra_depth(id_)) return r;
  if (!in_window(d)) throw std::out_of_range("bracket degree " + std::to_string(d) + " outside window");
  if (id_ != AlgebraId::E38 || dx < 0 || dy < 0) {
    for (auto& [s, a] : x.terms())
      for (auto& [t, b] : y.terms()) r += formula_bracket(id_, s, t) * (a * b);
    return r;
  }
  SparseVec cx = coords(x, dx), cy = coords(y, dy);
  SparseVec acc;
  for (auto& [i, a] : cx)
    for (auto& [k, b] : cy) {
      auto it = table_.find({dx, i, dy, k});
      if (it == table_.end()) throw std::logic_error("missing structure constant");
      axpy(acc, a * b, it->second);
    }
  return combine(d, acc);
}

SuperElement AlgebraModel::bracket(const SuperElement& x, const SuperElement& y) const {
  if (!x.is_zero() && !y.is_zero() && x.algebra() != y.algebra()) throw std::invalid_argument("bracket across algebras");
  SuperElement r(id_);
  auto xs = x.by_degree(), ys = y.by_degree();
  for (auto& [dx, a] : xs) {
    if (!in_window(dx)) throw std::out_of_range("argument degree outside window");
    for (auto& [dy, b] : ys) {
      if (!in_window(dy)) throw std::out_of_range("argument degree outside window");
      r += bracket_homogeneous(a, dx, b, dy);
    }
  }
  return r;
}

const SuperElement& AlgebraModel::element(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end()) throw std::out_of_range("no distinguished element " + name);
  return it->second;
}

std::vector<std::string> AlgebraModel::element_names() const {
  std::vector<std::string> out;
  for (auto& kv : named_) out.push_back(kv.first);
  return out;
}

void AlgebraModel::build_e38_table() {
  // Solve [x,y] from its action on g_-1: [[x,y],u] = [x,[y,u]] - (-1)^{p(x)p(y)} [y,[x,u]].
  const auto& g1 = basis(-1);
  std::map<BasisSymbol, int> sym;
  auto vec_of = [&](const std::vector<SuperElement>& acts) {
    SparseVec v;
    for (size_t u = 0; u < acts.size(); ++u)
      for (auto& [s, c] : acts[u].terms()) {
        int k = sym.emplace(s, static_cast<int>(sym.size())).first->second;
        v.emplace(static_cast<int>(u) * 1000000 + k, c);
      }
    return v;
  };
  for (int d = 0; d <= jmax_; ++d) {
    SpanSolver act;
    for (auto& b : basis(d)) {
      std::vector<SuperElement> acts;
      for (auto& u : g1) acts.push_back(bracket_homogeneous(b, d, u, -1));
      if (!act.add(vec_of(acts))) throw std::logic_error("g_" + std::to_string(d) + " does not act faithfully on g_-1");
    }
    for (int i = 0; i <= d; ++i) {
      int j = d - i;
      const auto& bi = basis(i);
      const auto& bj = basis(j);
      for (size_t a = 0; a < bi.size(); ++a) {
        for (size_t b = 0; b < bj.size(); ++b) {
          const SuperElement& x = bi[a];
          const SuperElement& y = bj[b];
          int sgn = (x.parity() & y.parity()) ? -1 : 1;
          std::vector<SuperElement> acts;
          for (auto& u : g1) {
            SuperElement t(id_);
            SuperElement yu = bracket_homogeneous(y, j, u, -1);
            if (!yu.is_zero()) t += bracket_homogeneous(x, i, yu, j - 1);
            SuperElement xu = bracket_homogeneous(x, i, u, -1);
            if (!xu.is_zero()) t -= bracket_homogeneous(y, j, xu, i - 1) * Rational(sgn);
            acts.push_back(std::move(t));
          }
          auto c = act.coords(vec_of(acts));
          if (!c)
            throw std::logic_error("window exceeds the consistent range: [" + x.str() + ", " + y.str() + "] not in g_" +
                                   std::to_string(d));
          table_[{i, static_cast<int>(a), j, static_cast<int>(b)}] = *c;
        }
      }
    }
  }
}

namespace {

Monomial mono_x(std::initializer_list<int> exps) {
  Monomial m;
  size_t i = 0;
  for (int e : exps) m.e[i++] = static_cast<uint8_t>(e);
  return m;
}

BasisSymbol field_sym(int dir, Monomial m) { return BasisSymbol{Kind::Field, static_cast<int8_t>(dir), m}; }

void add_named_common(AlgebraId id, std::map<std::string, SuperElement>& named) {
  auto vf = [&](int i, int j) {  // x_i d_j, 1-based
    Monomial m;
    m.e[static_cast<size_t>(i - 1)] = 1;
    return SuperElement(id, field_sym(j - 1, m));
  };
  named["e1"] = vf(1, 2);
  named["e2"] = vf(2, 3);
  named["e12"] = vf(1, 3);
  named["f1"] = vf(2, 1);
  named["f2"] = vf(3, 2);
  named["f12"] = vf(3, 1);
  named["h1"] = vf(1, 1) - vf(2, 2);
  named["h2"] = vf(2, 2) - vf(3, 3);
  named["e3"] = SuperElement(id, BasisSymbol{Kind::Current, 0, Monomial{}});
  named["f3"] = SuperElement(id, BasisSymbol{Kind::Current, 1, Monomial{}});
  named["h3"] = SuperElement(id, BasisSymbol{Kind::Current, 2, Monomial{}});
  named["Y"] = (vf(1, 1) + vf(2, 2) + vf(3, 3)) * rat(2, 3);
}

}  // namespace

AlgebraModel build_algebra(AlgebraId id, int jmin, int jmax) {
  int depth = algebra_depth(id);
  if (jmin > depth) throw std::invalid_argument("window excludes the depth of " + algebra_name(id));
  if (jmax < 1) throw std::invalid_argument("window must reach degree 1");
  jmin = std::max(jmin, depth);
  AlgebraModel M;
  M.id_ = id;
  M.jmin_ = jmin;
  M.jmax_ = jmax;
  int n = algebra_nvars(id);
  auto mons = [&](int twice_k, int shift) -> std::vector<Monomial> {
    int t = twice_k - shift;
    if (t < 0 || t % 2) return {};
    return monomials_of_degree(n, t / 2);
  };
  for (int j = jmin; j <= jmax; ++j) {
    M.pieces_[j];
    if (id == AlgebraId::E510) {
      if (j % 2 == 0) {
        for (auto& d : divfree_fields(5, (j + 2) / 2)) M.add_basis(j, field_element(id, d));
      } else {
        for (auto& w : closed_two_forms(5, (j + 1) / 2)) M.add_basis(j, form_element(id, Kind::ClosedTwoForm, w));
      }
      continue;
    }
    if (j % 2 == 0) {
      for (int i = 0; i < 3; ++i)
        for (auto& m : mons(j, -2)) M.add_basis(j, SuperElement(id, field_sym(i, m)));
      for (int X = 0; X < 3; ++X)
        for (auto& m : mons(j, 0)) M.add_basis(j, SuperElement(id, BasisSymbol{Kind::Current, static_cast<int8_t>(X), m}));
      if (id == AlgebraId::E38 && j >= 4)
        for (auto& w : closed_two_forms(3, (j - 4) / 2)) M.add_basis(j, form_element(id, Kind::ClosedTwoForm, w));
    } else if (id == AlgebraId::E36) {
      for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 3; ++i)
          for (auto m : mons(j, -1)) {
            m.odd = 1u << i;
            M.add_basis(j, SuperElement(id, BasisSymbol{Kind::OddOneForm, static_cast<int8_t>(s), m}));
          }
    } else {
      for (int s = 0; s < 2; ++s)
        for (auto& m : mons(j, -3)) M.add_basis(j, SuperElement(id, BasisSymbol{Kind::OddScalar, static_cast<int8_t>(s), m}));
      for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 3; ++i)
          for (int k = i + 1; k < 3; ++k)
            for (auto m : mons(j, 1)) {
              m.odd = (1u << i) | (1u << k);
              M.add_basis(j, SuperElement(id, BasisSymbol{Kind::OddTwoForm, static_cast<int8_t>(s), m}));
            }
    }
  }

  auto& named = M.named_;
  if (id == AlgebraId::E510) {
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        if (a == b) continue;
        Monomial m;
        m.e[static_cast<size_t>(a - 1)] = 1;
        named["E" + std::to_string(a) + std::to_string(b)] = SuperElement(id, field_sym(b - 1, m));
      }
    for (int a = 1; a <= 4; ++a) {
      Monomial p, q;
      p.e[static_cast<size_t>(a - 1)] = 1;
      q.e[static_cast<size_t>(a)] = 1;
      named["H" + std::to_string(a)] = SuperElement(id, field_sym(a - 1, p)) - SuperElement(id, field_sym(a, q));
    }
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        Monomial m;
        m.odd = (1u << (i - 1)) | (1u << (j - 1));
        named["d" + std::to_string(i) + std::to_string(j)] = SuperElement(id, BasisSymbol{Kind::ClosedTwoForm, 0, m});
      }
    return M;
  }

  add_named_common(id, named);
  if (id == AlgebraId::E36) {
    auto one = [&](int s, int i, Monomial m, const Rational& c) {
      m.odd = 1u << i;
      return SuperElement(id, BasisSymbol{Kind::OddOneForm, static_cast<int8_t>(s), m}, c);
    };
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < 3; ++i)
        named[std::string("d") + (s == 0 ? "+" : "-") + std::to_string(i + 1)] = one(s, i, Monomial{}, Rational(1));
    named["f0"] = named["d+1"];
    named["e'0"] = one(1, 2, mono_x({0, 0, 1}), Rational(1));
    named["eb0"] = one(1, 1, mono_x({0, 0, 1}), Rational(1)) + one(1, 2, mono_x({0, 1, 0}), Rational(-1));
    named["hb0"] = named["h1"] * rat(2, 3) + named["h2"] * rat(1, 3) - named["h3"] - named["Y"];
  } else {
    auto sc = [&](int s, Monomial m, const Rational& c) {
      return SuperElement(id, BasisSymbol{Kind::OddScalar, static_cast<int8_t>(s), m}, c);
    };
    named["d+"] = sc(0, Monomial{}, 1);
    named["d-"] = sc(1, Monomial{}, 1);
    for (int s = 0; s < 2; ++s)
      for (int i = 0; i < 3; ++i) {
        Monomial m;
        m.e[static_cast<size_t>(i)] = 1;
        named[std::string("d") + (s == 0 ? "+" : "-") + std::to_string(i + 1)] = sc(s, m, 1);
      }
    named["f0"] = named["d+1"];
    named["e'0"] = sc(1, mono_x({0, 0, 2}), rat(1, 2));
    Monomial w;
    w.odd = (1u << 1) | (1u << 2);
    named["es0"] = SuperElement(id, BasisSymbol{Kind::OddTwoForm, 1, w}, Rational(-1));
    named["hs0"] = named["h1"] * rat(2, 3) + named["h2"] * rat(1, 3) - named["h3"] * rat(1, 2) + named["Y"] * rat(1, 2);
    M.build_e38_table();
  }
  return M;
}

}  // namespace kr
