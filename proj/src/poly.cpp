#include "kr/poly.hpp"

#include <sstream>

namespace kr {

int Monomial::even_degree() const {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

Universe Universe::plain(int n, const std::string& stem) {
  Universe u;
  u.n_even = n;
  for (int i = 0; i < n; ++i) u.even_names.push_back(stem + std::to_string(i + 1));
  return u;
}

Universe Universe::forms(int n) {
  Universe u = plain(n);
  u.n_odd = n;
  for (int i = 0; i < n; ++i) u.odd_names.push_back("dx" + std::to_string(i + 1));
  return u;
}

Poly::Poly(const Universe& u, const Rational& c) : u_(u) {
  if (!c.is_zero()) t_[Monomial{}] = c;
}

Poly Poly::var(const Universe& u, int i) {
  Monomial m;
  m.e[static_cast<size_t>(i)] = 1;
  return monomial(u, m);
}

Poly Poly::odd_var(const Universe& u, int i) {
  Monomial m;
  m.odd = 1u << i;
  return monomial(u, m);
}

Poly Poly::monomial(const Universe& u, const Monomial& m, const Rational& c) {
  Poly p(u);
  p.add_term(m, c);
  return p;
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (u_.n_even == 0 && u_.n_odd == 0 && t_.empty()) u_ = o.u_;
  for (auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (u_.n_even == 0 && u_.n_odd == 0 && t_.empty()) u_ = o.u_;
  for (auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& kv : t_) kv.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  return r *= Rational(-1);
}

int Poly::even_degree() const {
  int d = -1;
  for (auto& kv : t_) {
    int k = kv.first.even_degree();
    if (d >= 0 && k != d) throw std::logic_error("inhomogeneous polynomial");
    d = k;
  }
  return d;
}

int Poly::parity() const {
  int p = -1;
  for (auto& kv : t_) {
    int k = kv.first.odd_degree() & 1;
    if (p >= 0 && k != p) throw std::logic_error("mixed parity");
    p = k;
  }
  return p < 0 ? 0 : p;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    std::string mon;
    for (int i = 0; i < u_.n_even; ++i) {
      int k = m.deg(i);
      if (k == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += i < static_cast<int>(u_.even_names.size()) ? u_.even_names[static_cast<size_t>(i)]
                                                       : "v" + std::to_string(i);
      if (k > 1) mon += "^" + std::to_string(k);
    }
    std::string wedge;
    for (int i = 0; i < u_.n_odd; ++i) {
      if (!m.has_odd(i)) continue;
      if (!wedge.empty()) wedge += "^";
      wedge += i < static_cast<int>(u_.odd_names.size()) ? u_.odd_names[static_cast<size_t>(i)]
                                                        : "t" + std::to_string(i);
    }
    if (!wedge.empty()) mon += (mon.empty() ? "" : "*") + wedge;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.sign() < 0 ? -c : c;
    if (mon.empty()) os << a.pretty();
    else if (a == Rational(1)) os << mon;
    else os << a.pretty() << "*" << mon;
    first = false;
  }
  return os.str();
}

int koszul_sign(uint32_t a, uint32_t b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j: each must be swapped once.
  int swaps = 0;
  uint32_t bb = b;
  while (bb) {
    int j = __builtin_ctz(bb);
    bb &= bb - 1;
    uint32_t above = j >= 31 ? 0u : (a >> (j + 1));
    swaps += __builtin_popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (!(a.universe() == b.universe())) throw std::invalid_argument("variable universe mismatch");
  Poly r(a.universe());
  for (auto& [ma, ca] : a.terms()) {
    for (auto& [mb, cb] : b.terms()) {
      int s = koszul_sign(ma.odd, mb.odd);
      if (s == 0) continue;
      Monomial m;
      for (size_t i = 0; i < kMaxEven; ++i) m.e[i] = static_cast<uint8_t>(ma.e[i] + mb.e[i]);
      m.odd = ma.odd | mb.odd;
      Rational c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(m, c);
    }
  }
  return r;
}

Poly diff(const Poly& p, int i) {
  Poly r(p.universe());
  for (auto& [m, c] : p.terms()) {
    int k = m.deg(i);
    if (k == 0) continue;
    Monomial n = m;
    n.e[static_cast<size_t>(i)] = static_cast<uint8_t>(k - 1);
    r.add_term(n, c * Rational(k));
  }
  return r;
}

Poly odd_diff(const Poly& p, int i) {
  Poly r(p.universe());
  for (auto& [m, c] : p.terms()) {
    if (!m.has_odd(i)) continue;
    uint32_t below = m.odd & ((1u << i) - 1u);
    Monomial n = m;
    n.odd &= ~(1u << i);
    r.add_term(n, (__builtin_popcount(below) & 1) ? -c : c);
  }
  return r;
}

Poly map_terms(const Poly& p, const std::function<void(const Monomial&, const Rational&, Poly&)>& f) {
  Poly r(p.universe());
  for (auto& [m, c] : p.terms()) f(m, c, r);
  return r;
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m.e[static_cast<size_t>(i)] = static_cast<uint8_t>(left);
      out.push_back(m);
      return;
    }
    for (int a = left; a >= 0; --a) {
      m.e[static_cast<size_t>(i)] = static_cast<uint8_t>(a);
      rec(i + 1, left - a);
    }
    m.e[static_cast<size_t>(i)] = 0;
  };
  if (n == 0) {
    if (k == 0) out.push_back(m);
    return out;
  }
  rec(0, k);
  return out;
}

}  // namespace kr
