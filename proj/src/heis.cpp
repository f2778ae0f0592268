#include "kr/heis.hpp"

#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

const Universe& heis_universe() {
  static const Universe u = [] {
    Universe v;
    v.n_even = 2 * kModes;
    v.even_names = {"x1", "x2", "x3", "z+", "z-", "D1", "D2", "D3", "D+", "D-"};
    return v;
  }();
  return u;
}

Rational falling(int n, int k) {  // n (n-1) ... (n-k+1)
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= Rational(n - i);
  return r;
}

Rational binom(int n, int k) { return falling(n, k) / falling(k, k); }

}  // namespace

int heis_q(int mode) { return mode; }
int heis_p(int mode) { return mode + kModes; }

HeisOp::HeisOp() : p_(heis_universe()) {}
HeisOp::HeisOp(const Rational& c) : p_(heis_universe(), c) {}

HeisOp HeisOp::gen(int g) {
  Monomial m;
  m.e[static_cast<size_t>(g)] = 1;
  return monomial(m);
}

HeisOp HeisOp::monomial(const Monomial& m, const Rational& c) {
  HeisOp h;
  h.p_.add_term(m, c);
  return h;
}

HeisOp heis_mul(const HeisOp& a, const HeisOp& b) {
  HeisOp r;
  for (auto& [ma, ca] : a.symbol().terms()) {
    for (auto& [mb, cb] : b.symbol().terms()) {
      // q^alpha p^beta q^gamma p^delta, reorder p^beta q^gamma mode by mode.
      std::vector<std::pair<Monomial, Rational>> acc;
      Monomial base;
      for (int k = 0; k < 2 * kModes; ++k) base.e[static_cast<size_t>(k)] = 0;
      acc.emplace_back(base, ca * cb);
      for (int k = 0; k < kModes; ++k) {
        int al = ma.deg(heis_q(k)), be = ma.deg(heis_p(k));
        int ga = mb.deg(heis_q(k)), de = mb.deg(heis_p(k));
        std::vector<std::pair<Monomial, Rational>> next;
        for (int j = 0; j <= std::min(be, ga); ++j) {
          Rational w = binom(be, j) * binom(ga, j) * falling(j, j);
          for (auto& [m, c] : acc) {
            Monomial t = m;
            t.e[static_cast<size_t>(heis_q(k))] = static_cast<uint8_t>(al + ga - j);
            t.e[static_cast<size_t>(heis_p(k))] = static_cast<uint8_t>(be - j + de);
            next.emplace_back(t, c * w);
          }
        }
        acc.swap(next);
      }
      for (auto& [m, c] : acc) r += HeisOp::monomial(m, c);
    }
  }
  return r;
}

HeisOp heis_commutator(const HeisOp& a, const HeisOp& b) { return heis_mul(a, b) - heis_mul(b, a); }

char lagrangian_char(Lagrangian X) { return "ABCD"[static_cast<int>(X)]; }

Lagrangian parse_lagrangian(char c) {
  switch (c) {
    case 'A': case 'a': return Lagrangian::A;
    case 'B': case 'b': return Lagrangian::B;
    case 'C': case 'c': return Lagrangian::C;
    case 'D': case 'd': return Lagrangian::D;
  }
  throw std::invalid_argument(std::string("unknown Fock module tag ") + c);
}

bool creates_q(Lagrangian X, int mode) {
  bool flavor_mode = mode >= 3;
  switch (X) {
    case Lagrangian::A: return true;
    case Lagrangian::B: return !flavor_mode;
    case Lagrangian::C: return flavor_mode;
    case Lagrangian::D: return false;
  }
  return true;
}

FockVector FockVector::vacuum(Lagrangian X) { return monomial(X, Monomial{}); }

FockVector FockVector::monomial(Lagrangian X, const Monomial& m, const Rational& c) {
  FockVector v(X);
  v.add(m, c);
  return v;
}

void FockVector::add(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (t_.empty()) X_ = o.X_;
  else if (!o.t_.empty() && o.X_ != X_) throw std::invalid_argument("adding vectors of different Fock modules");
  for (auto& [m, c] : o.t_) add(m, c);
  return *this;
}

FockVector& FockVector::operator*=(const Rational& c) {
  if (c.is_zero()) t_.clear();
  for (auto& kv : t_) kv.second *= c;
  return *this;
}

std::pair<int, int> FockVector::bidegree(Lagrangian X, const Monomial& m) {
  int a = m.deg(0) + m.deg(1) + m.deg(2), b = m.deg(3) + m.deg(4);
  return {creates_q(X, 0) ? a : -a, creates_q(X, 3) ? b : -b};
}

std::string FockVector::str() const {
  if (t_.empty()) return "0";
  static const char* qn[kModes] = {"x1", "x2", "x3", "z+", "z-"};
  static const char* pn[kModes] = {"D1", "D2", "D3", "D+", "D-"};
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.sign() < 0 ? -c : c;
    std::string body;
    for (int k = 0; k < kModes; ++k) {
      int e = m.deg(k);
      if (!e) continue;
      if (!body.empty()) body += "*";
      body += creates_q(X_, k) ? qn[k] : pn[k];
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (!(a == Rational(1)) || body.empty()) os << a.pretty() << (body.empty() ? "" : "*");
    os << body;
    first = false;
  }
  os << " 1_" << lagrangian_char(X_);
  return os.str();
}

FockVector fock_apply(const HeisOp& op, const FockVector& v) {
  FockVector r(v.tag());
  Lagrangian X = v.tag();
  for (auto& [mo, co] : op.symbol().terms()) {
    for (auto& [mv, cv] : v.terms()) {
      Rational c = co * cv;
      Monomial out = mv;
      for (int k = 0; k < kModes && !c.is_zero(); ++k) {
        int n = mv.deg(k), a = mo.deg(heis_q(k)), b = mo.deg(heis_p(k));
        if (creates_q(X, k)) {
          if (b > n) { c = 0; break; }
          c *= falling(n, b);
          n = n - b + a;
        } else {
          int up = n + b;
          if (a > up) { c = 0; break; }
          c *= falling(up, a);
          if (a & 1) c = -c;
          n = up - a;
        }
        out.e[static_cast<size_t>(k)] = static_cast<uint8_t>(n);
      }
      r.add(out, c);
    }
  }
  return r;
}

FockVector relabel(const FockVector& v, Lagrangian target) {
  FockVector r(target);
  for (auto& [m, c] : v.terms()) r.add(m, c);
  return r;
}

namespace {

HeisOp qp(int i, int j) { return heis_mul(HeisOp::gen(heis_q(i)), HeisOp::gen(heis_p(j))); }

HeisOp sum_xd() { return qp(0, 0) + qp(1, 1) + qp(2, 2); }
HeisOp sum_zd() { return qp(3, 3) + qp(4, 4); }

}  // namespace

HeisOp y_operator(Flavor flavor) {
  if (flavor == Flavor::Sharp) return rat(-4, 3) * sum_xd() + sum_zd();
  return rat(2, 3) * sum_xd() - sum_zd();
}

HeisOp g0_embed(const SuperElement& g, Flavor flavor) {
  if (g.algebra() == AlgebraId::E510 && !g.is_zero()) throw std::invalid_argument("g0_embed expects E(3,6) or E(3,8)");
  HeisOp r;
  HeisOp diag = rat(-1, 3) * sum_xd() + rat(1, 2) * y_operator(flavor);
  for (auto& [s, c] : g.terms()) {
    if (s.mono.odd) throw std::invalid_argument("g0_embed: not a degree-0 element");
    if (s.kind == Kind::Field && s.mono.even_degree() == 1) {
      int i = 0;
      while (s.mono.deg(i) == 0) ++i;
      int j = s.a;
      HeisOp t = qp(i, j);
      if (i == j) t += diag;
      r += c * t;
    } else if (s.kind == Kind::Current && s.mono.even_degree() == 0) {
      HeisOp t = s.a == 0 ? qp(3, 4) : s.a == 1 ? qp(4, 3) : qp(3, 3) - qp(4, 4);
      r += c * t;
    } else {
      throw std::invalid_argument("g0_embed: not a degree-0 element: " + g.str());
    }
  }
  return r;
}

std::string WeightLabel::str() const {
  std::ostringstream os;
  os << lagrangian_char(type) << "(" << p << "," << q << ";" << r << ";" << y.pretty() << ")";
  return os.str();
}

std::string FockBlock::name() const {
  int a = label.type == Lagrangian::A || label.type == Lagrangian::B ? label.p : label.q;
  return std::string(1, lagrangian_char(tag)) + "_m" + std::to_string(a) + "_n" + std::to_string(label.r);
}

SparseVec FockBlock::coords(const FockVector& v) const {
  if (!v.is_zero() && v.tag() != tag) throw std::invalid_argument("vector of another Fock module");
  SparseVec r;
  for (auto& [m, c] : v.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("vector leaves block " + name());
    r.emplace(it->second, c);
  }
  return r;
}

FockVector FockBlock::vector(const SparseVec& c) const {
  FockVector v(tag);
  for (auto& [i, x] : c) v.add(basis[static_cast<size_t>(i)], x);
  return v;
}

Rational theorem_y(Lagrangian X, int pq, int r) {
  switch (X) {
    case Lagrangian::A: return rat(-4, 3) * Rational(pq) + Rational(r);
    case Lagrangian::B: return rat(-4, 3) * Rational(pq) - Rational(r) - Rational(2);
    case Lagrangian::C: return rat(4, 3) * Rational(pq) + Rational(r) + Rational(4);
    case Lagrangian::D: return rat(4, 3) * Rational(pq) - Rational(r) + Rational(2);
  }
  return Rational(0);
}

FockBlock weight_block(Lagrangian X, int m, int n, Flavor flavor) {
  bool mpos = creates_q(X, 0), npos = creates_q(X, 3);
  if ((mpos && m < 0) || (!mpos && m > 0) || (npos && n < 0) || (!npos && n > 0))
    throw std::invalid_argument(std::string("block (") + std::to_string(m) + "," + std::to_string(n) +
                                ") does not exist for V_" + lagrangian_char(X));
  FockBlock b;
  b.tag = X;
  b.m = m;
  b.n = n;
  b.flavor = flavor;
  int a = std::abs(m), c = std::abs(n);
  for (auto& u : monomials_of_degree(3, a)) {
    for (auto& v : monomials_of_degree(2, c)) {
      Monomial t;
      for (int k = 0; k < 3; ++k) t.e[static_cast<size_t>(k)] = u.e[static_cast<size_t>(k)];
      for (int k = 0; k < 2; ++k) t.e[static_cast<size_t>(k + 3)] = v.e[static_cast<size_t>(k)];
      b.index.emplace(t, static_cast<int>(b.basis.size()));
      b.basis.push_back(t);
    }
  }
  // Highest vectors x1^p z+^r, x1^p D-^r, D3^q z+^r, D3^q D-^r.
  b.highest.e[mpos ? 0 : 2] = static_cast<uint8_t>(a);
  b.highest.e[npos ? 3 : 4] = static_cast<uint8_t>(c);
  b.label.type = X;
  b.label.r = c;
  if (mpos) b.label.p = a;
  else b.label.q = a;
  if (flavor == Flavor::Sharp) {
    b.label.y = theorem_y(X, a, c);
  } else {
    FockVector h = FockVector::monomial(X, b.highest);
    FockVector y = fock_apply(y_operator(flavor), h);
    b.label.y = y.is_zero() ? Rational(0) : y.terms().begin()->second;
  }
  return b;
}

FockBlock label_block(Lagrangian X, int pq, int r, Flavor flavor) {
  int m = creates_q(X, 0) ? pq : -pq;
  int n = creates_q(X, 3) ? r : -r;
  return weight_block(X, m, n, flavor);
}

long dim_irrep_g0(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("negative highest weight");
  return static_cast<long>(p + 1) * (q + 1) * (p + q + 2) / 2 * (r + 1);
}

}  // namespace kr
