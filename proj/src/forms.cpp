#include "kr/forms.hpp"

#include "kr/sparse.hpp"

#include <map>
#include <stdexcept>

namespace kr {

VecField zero_field(int n) { return VecField(static_cast<size_t>(n), Poly(Universe::plain(n))); }

VecField coordinate_field(int n, int i) {
  VecField d = zero_field(n);
  d[static_cast<size_t>(i)] = Poly(Universe::plain(n), Rational(1));
  return d;
}

bool is_zero_field(const VecField& d) {
  for (auto& p : d)
    if (!p.is_zero()) return false;
  return true;
}

VecField field_add(const VecField& a, const VecField& b, const Rational& cb) {
  VecField r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i] * cb;
  return r;
}

VecField field_scale(const VecField& a, const Rational& c) {
  VecField r = a;
  for (auto& p : r) p *= c;
  return r;
}

VecField field_mul(const Poly& f, const VecField& a) {
  VecField r = a;
  for (auto& p : r) p = poly_mul(recast(f, p.universe()), p);
  return r;
}

Poly recast(const Poly& p, const Universe& u) {
  Poly r(u);
  for (auto& [m, c] : p.terms()) r.add_term(m, c);
  return r;
}

Poly apply_field(const VecField& d, const Poly& f) {
  Poly r(f.universe());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    Poly df = diff(f, static_cast<int>(i));
    if (df.is_zero()) continue;
    r += poly_mul(recast(d[i], f.universe()), df);
  }
  return r;
}

Poly divergence(const VecField& d) {
  Poly r(Universe::plain(static_cast<int>(d.size())));
  for (size_t i = 0; i < d.size(); ++i) r += recast(diff(d[i], static_cast<int>(i)), r.universe());
  return r;
}

VecField lie_bracket(const VecField& a, const VecField& b) {
  VecField r = zero_field(static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = apply_field(a, b[i]) - apply_field(b, a[i]);
  return r;
}

VecField gradient(const Poly& f) {
  int n = f.universe().n_even;
  VecField g = zero_field(n);
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = recast(diff(f, i), Universe::plain(n));
  return g;
}

VecField cross(const VecField& a, const VecField& b) {
  if (a.size() != 3 || b.size() != 3) throw std::invalid_argument("cross product needs n = 3");
  VecField r = zero_field(3);
  r[0] = poly_mul(a[1], b[2]) - poly_mul(a[2], b[1]);
  r[1] = poly_mul(a[2], b[0]) - poly_mul(a[0], b[2]);
  r[2] = poly_mul(a[0], b[1]) - poly_mul(a[1], b[0]);
  return r;
}

Poly as_form(const Poly& f, int n) { return recast(f, Universe::forms(n)); }

Poly volume_form(int n) {
  Monomial m;
  m.odd = (n >= 32) ? ~0u : ((1u << n) - 1u);
  return Poly::monomial(Universe::forms(n), m);
}

Poly ext_d(const Poly& w) {
  const Universe& u = w.universe();
  if (u.n_odd != u.n_even) throw std::invalid_argument("ext_d needs a form universe");
  Poly r(u);
  for (int k = 0; k < u.n_even; ++k) {
    Poly dk = diff(w, k);
    if (dk.is_zero()) continue;
    r += poly_mul(Poly::odd_var(u, k), dk);
  }
  return r;
}

Poly interior(const VecField& d, const Poly& w) {
  Poly r(w.universe());
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    Poly c = odd_diff(w, static_cast<int>(i));
    if (c.is_zero()) continue;
    r += poly_mul(recast(d[i], w.universe()), c);
  }
  return r;
}

Poly lie_derivative(const VecField& d, const Poly& w) { return interior(d, ext_d(w)) + ext_d(interior(d, w)); }

Poly twisted_action(const VecField& d, const Poly& w, const Rational& lambda) {
  Poly r = lie_derivative(d, w);
  if (!lambda.is_zero()) r += poly_mul(recast(divergence(d), w.universe()), w) * lambda;
  return r;
}

int form_degree(const Poly& w) {
  int k = -1;
  for (auto& [m, c] : w.terms()) {
    int j = m.odd_degree();
    if (k >= 0 && j != k) throw std::logic_error("form of mixed degree");
    k = j;
  }
  return k;
}

Poly field_to_form(const VecField& d) { return interior(d, volume_form(static_cast<int>(d.size()))); }

VecField form_to_field(const Poly& w) {
  int n = w.universe().n_even;
  uint32_t full = (1u << n) - 1u;
  VecField r = zero_field(n);
  for (auto& [m, c] : w.terms()) {
    uint32_t miss = full & ~m.odd;
    if (m.odd_degree() != n - 1 || __builtin_popcount(miss) != 1)
      throw std::invalid_argument("form_to_field needs an (n-1)-form");
    int i = __builtin_ctz(miss);
    Monomial e = m;
    e.odd = 0;
    r[static_cast<size_t>(i)].add_term(e, (i & 1) ? -c : c);
  }
  return r;
}

Poly function_to_top(const Poly& f, int n) {
  if (f.universe().n_odd != 0) {
    for (auto& [m, c] : f.terms())
      if (m.odd) throw std::invalid_argument("function_to_top needs a function");
  }
  return poly_mul(as_form(f, n), volume_form(n));
}

Poly top_to_function(const Poly& w) {
  int n = w.universe().n_even;
  uint32_t full = (1u << n) - 1u;
  Poly r(Universe::plain(n));
  for (auto& [m, c] : w.terms()) {
    if (m.odd != full) throw std::invalid_argument("top_to_function needs a top form");
    Monomial e = m;
    e.odd = 0;
    r.add_term(e, c);
  }
  return r;
}

std::vector<VecField> divfree_fields(int n, int k) {
  std::vector<VecField> out;
  if (k < 0) return out;
  auto mons = monomials_of_degree(n, k);
  auto low = monomials_of_degree(n, k - 1);
  std::map<Monomial, int> row;
  for (auto& m : low) row.emplace(m, static_cast<int>(row.size()));
  int cols = n * static_cast<int>(mons.size());
  SparseMatrix M(static_cast<int>(low.size()), cols);
  for (int i = 0; i < n; ++i) {
    for (size_t a = 0; a < mons.size(); ++a) {
      const Monomial& m = mons[a];
      int e = m.deg(i);
      if (e == 0) continue;
      Monomial t = m;
      t.e[static_cast<size_t>(i)] = static_cast<uint8_t>(e - 1);
      M.add(row.at(t), i * static_cast<int>(mons.size()) + static_cast<int>(a), Rational(e));
    }
  }
  auto rk = rank_kernel(M);
  Universe u = Universe::plain(n);
  for (auto& v : rk.kernel) {
    VecField d = zero_field(n);
    for (auto& [c, x] : v) {
      int i = c / static_cast<int>(mons.size());
      d[static_cast<size_t>(i)].add_term(mons[static_cast<size_t>(c % static_cast<int>(mons.size()))], x);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Poly> closed_two_forms(int n, int k) {
  std::vector<Poly> out;
  if (k < 0) return out;
  Universe u = Universe::forms(n);
  std::vector<Monomial> cols;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (auto m : monomials_of_degree(n, k)) {
        m.odd = (1u << i) | (1u << j);
        cols.push_back(m);
      }
  std::map<Monomial, int> row;
  std::vector<Poly> images;
  for (auto& m : cols) {
    Poly dw = ext_d(Poly::monomial(u, m));
    for (auto& [t, c] : dw.terms()) row.emplace(t, 0);
    images.push_back(std::move(dw));
  }
  int r = 0;
  for (auto& kv : row) kv.second = r++;
  SparseMatrix M(r, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (auto& [t, x] : images[c].terms()) M.add(row.at(t), static_cast<int>(c), x);
  auto rk = rank_kernel(M);
  for (auto& v : rk.kernel) {
    Poly w(u);
    for (auto& [c, x] : v) w.add_term(cols[static_cast<size_t>(c)], x);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace kr
