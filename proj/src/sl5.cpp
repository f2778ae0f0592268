#include "kr/sl5.hpp"

#include <algorithm>
#include <stdexcept>

namespace kr {

char s5_char(S5Space X) { return "ABC"[static_cast<int>(X)]; }

S5Space parse_s5(char c) {
  switch (c) {
    case 'A': case 'a': return S5Space::A;
    case 'B': case 'b': return S5Space::B;
    case 'C': case 'c': return S5Space::C;
  }
  throw std::invalid_argument(std::string("unknown space ") + c);
}

namespace {

std::array<std::pair<int, int>, 10> make_pairs() {
  std::array<std::pair<int, int>, 10> p{};
  int k = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) p[static_cast<size_t>(k++)] = {i, j};
  return p;
}

const std::array<std::pair<int, int>, 10> kPairs = make_pairs();

Universe make_universe(S5Space X) {
  Universe u;
  std::string s = X == S5Space::B ? "x*" : "x";
  for (int i = 1; i <= 5; ++i) u.even_names.push_back(s + std::to_string(i));
  if (X == S5Space::C) {
    for (int i = 1; i <= 5; ++i) u.even_names.push_back("x*" + std::to_string(i));
  } else {
    for (auto [i, j] : kPairs) u.even_names.push_back(s + std::to_string(i) + std::to_string(j));
  }
  u.n_even = static_cast<int>(u.even_names.size());
  return u;
}

void check_index(int i) {
  if (i < 1 || i > 5) throw std::out_of_range("sl5 index out of range");
}

// Signed pair variable x_pq as (index, sign); sign 0 when p == q.
std::pair<int, int> pair_var(int p, int q) {
  if (p == q) return {0, 0};
  if (p < q) return {s5_pair(p, q), 1};
  return {s5_pair(q, p), -1};
}

Poly pair_diff(const Poly& f, int p, int q) {
  auto [v, s] = pair_var(p, q);
  if (s == 0) return Poly(f.universe());
  Poly d = diff(f, v);
  return s > 0 ? d : -d;
}

Poly var_image(S5Space X, int a, int b, int v) {
  const Universe& u = s5_universe(X);
  Poly r(u);
  auto add_pair = [&](int p, int q, const Rational& c) {
    auto [w, s] = pair_var(p, q);
    if (s) r += Poly::var(u, w) * (c * Rational(s));
  };
  bool dual_vec = X == S5Space::B;
  if (v < 5) {
    int c = v + 1;
    if (!dual_vec) {
      if (b == c) r += Poly::var(u, s5_vec(a));
    } else if (a == c) {
      r -= Poly::var(u, s5_vec(b));
    }
    return r;
  }
  if (X == S5Space::C) {
    int c = v - 4;
    if (a == c) r -= Poly::var(u, s5_covec(b));
    return r;
  }
  auto [i, j] = kPairs[static_cast<size_t>(v - 5)];
  if (X == S5Space::A) {
    if (b == i) add_pair(a, j, 1);
    if (b == j) add_pair(i, a, 1);
  } else {
    if (a == i) add_pair(b, j, -1);
    if (a == j) add_pair(i, b, -1);
  }
  return r;
}

}  // namespace

const Universe& s5_universe(S5Space X) {
  static const Universe u[3] = {make_universe(S5Space::A), make_universe(S5Space::B), make_universe(S5Space::C)};
  return u[static_cast<int>(X)];
}

int s5_vec(int i) {
  check_index(i);
  return i - 1;
}

int s5_pair(int i, int j) {
  check_index(i);
  check_index(j);
  if (i >= j) throw std::invalid_argument("s5_pair needs i < j");
  for (int k = 0; k < 10; ++k)
    if (kPairs[static_cast<size_t>(k)] == std::make_pair(i, j)) return 5 + k;
  return -1;
}

int s5_covec(int i) {
  check_index(i);
  return 4 + i;
}

Poly s5_var(S5Space X, int v) { return Poly::var(s5_universe(X), v); }

std::pair<int, int> s5_bidegree(S5Space, const Monomial& m) {
  int a = 0, b = 0;
  for (int v = 0; v < 5; ++v) a += m.deg(v);
  for (int v = 5; v < 15; ++v) b += m.deg(v);
  return {a, b};
}

std::array<int, 5> s5_weight(S5Space X, const Monomial& m) {
  std::array<int, 5> w{};
  int sv = X == S5Space::B ? -1 : 1;
  for (int v = 0; v < 5; ++v) w[static_cast<size_t>(v)] += sv * m.deg(v);
  if (X == S5Space::C) {
    for (int v = 5; v < 10; ++v) w[static_cast<size_t>(v - 5)] -= m.deg(v);
  } else {
    int sp = X == S5Space::A ? 1 : -1;
    for (int k = 0; k < 10; ++k) {
      int e = m.deg(5 + k);
      w[static_cast<size_t>(kPairs[static_cast<size_t>(k)].first - 1)] += sp * e;
      w[static_cast<size_t>(kPairs[static_cast<size_t>(k)].second - 1)] += sp * e;
    }
  }
  return w;
}

std::vector<Monomial> s5_monomials(S5Space X, int m, int n) {
  std::vector<Monomial> out;
  if (m < 0 || n < 0) return out;
  int n2 = X == S5Space::C ? 5 : 10;
  for (auto& a : monomials_of_degree(5, m))
    for (auto& b : monomials_of_degree(n2, n)) {
      Monomial t = a;
      for (int k = 0; k < n2; ++k) t.e[static_cast<size_t>(5 + k)] = b.e[static_cast<size_t>(k)];
      out.push_back(t);
    }
  return out;
}

Poly sl5_act(S5Space X, int a, int b, const Poly& f) {
  check_index(a);
  check_index(b);
  const Universe& u = s5_universe(X);
  Poly r(u);
  for (int v = 0; v < u.n_even; ++v) {
    Poly d = diff(f, v);
    if (d.is_zero()) continue;
    Poly img = var_image(X, a, b, v);
    if (img.is_zero()) continue;
    r += poly_mul(img, d);
  }
  return r;
}

Poly pluecker_quadric(int a, int b, int c, int d) {
  const Universe& u = s5_universe(S5Space::B);
  Poly r(u);
  auto pv = [&](int p, int q) {
    auto [v, s] = pair_var(p, q);
    return s == 0 ? Poly(u) : Poly::var(u, v) * Rational(s);
  };
  r += poly_mul(pv(a, b), pv(c, d));
  r -= poly_mul(pv(a, c), pv(b, d));
  r += poly_mul(pv(a, d), pv(b, c));
  return r;
}

Poly pluecker_apply(S5Space X, const Poly& f, int a, int b, int c, int d) {
  for (int i : {a, b, c, d}) check_index(i);
  if (X == S5Space::B) return poly_mul(pluecker_quadric(a, b, c, d), f);
  if (X != S5Space::A) throw std::invalid_argument("Pluecker systems live on S_A and S_B");
  Poly r(f.universe());
  r += pair_diff(pair_diff(f, c, d), a, b);
  r -= pair_diff(pair_diff(f, b, d), a, c);
  r += pair_diff(pair_diff(f, b, c), a, d);
  return r;
}

Poly incidence_apply(const Poly& f, int i, int j, int k) {
  for (int a : {i, j, k}) check_index(a);
  Poly r(f.universe());
  r += diff(pair_diff(f, j, k), s5_vec(i));
  r -= diff(pair_diff(f, i, k), s5_vec(j));
  r += diff(pair_diff(f, i, j), s5_vec(k));
  return r;
}

Poly theta(S5Space X, int i, int j, const Poly& f) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("theta needs i != j");
  const Universe& u = s5_universe(X);
  switch (X) {
    case S5Space::A: return pair_diff(f, i, j);
    case S5Space::B: {
      auto [v, s] = pair_var(i, j);
      return poly_mul(Poly::var(u, v) * Rational(s), f);
    }
    case S5Space::C:
      return poly_mul(Poly::var(u, s5_covec(i)), diff(f, s5_vec(j))) -
             poly_mul(Poly::var(u, s5_covec(j)), diff(f, s5_vec(i)));
  }
  return Poly(u);
}

long dim_irrep_sl5(int m1, int m2, int m3, int m4) {
  int m[4] = {m1, m2, m3, m4};
  for (int x : m)
    if (x < 0) throw std::invalid_argument("negative highest weight");
  mpq_class r = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      long s = 0;
      for (int k = i; k < j; ++k) s += m[k] + 1;
      r *= mpq_class(s, j - i);
    }
  r.canonicalize();
  return r.get_num().get_si();
}

std::array<int, 4> top_label(S5Space X, int m, int n) {
  switch (X) {
    case S5Space::A: return {m, n, 0, 0};
    case S5Space::B: return {0, 0, n, m};
    case S5Space::C: return {m, 0, 0, n};
  }
  return {};
}

SparseVec HighComponent::monomial_vec(const Poly& f) const {
  SparseVec v;
  for (auto& [mo, c] : f.terms()) {
    auto it = mindex.find(mo);
    if (it == mindex.end()) throw std::logic_error("polynomial leaves bidegree of " + name());
    v.emplace(it->second, c);
  }
  return v;
}

Poly HighComponent::poly(int i) const {
  Poly p(s5_universe(X));
  for (auto& [k, c] : basis[static_cast<size_t>(i)]) p.add_term(monos[static_cast<size_t>(k)], c);
  return p;
}

namespace {

// Rows are fully reduced, so only pivots present in v itself need clearing.
SparseVec reduce_rows(const std::map<int, SparseVec>& rows, SparseVec v) {
  std::vector<std::pair<const SparseVec*, Rational>> hits;
  for (auto& [k, c] : v) {
    auto it = rows.find(k);
    if (it != rows.end()) hits.emplace_back(&it->second, -c);
  }
  for (auto& [row, a] : hits) axpy(v, a, *row);
  return v;
}

}  // namespace

SparseVec HighComponent::coords(const Poly& f) const {
  SparseVec v = monomial_vec(f);
  if (!quotient) {
    if (raw) return v;
    auto c = span.coords(v);
    if (!c) throw std::logic_error("polynomial not in " + name());
    return *c;
  }
  SparseVec r = reduce_rows(low_rows, std::move(v));
  // Basis vectors are unit vectors on representative monomials; basis index = position.
  SparseVec out;
  for (auto& [k, c] : r) {
    auto it = std::lower_bound(basis.begin(), basis.end(), k,
                               [](const SparseVec& b, int key) { return b.begin()->first < key; });
    if (it == basis.end() || it->begin()->first != k) throw std::logic_error("reduction left a pivot monomial");
    out.emplace(static_cast<int>(it - basis.begin()), c);
  }
  return out;
}

bool HighComponent::vanishes(const Poly& f) const {
  if (!quotient) return f.is_zero();
  return reduce_rows(low_rows, monomial_vec(f)).empty();
}

std::string HighComponent::name() const {
  return std::string(raw ? "S" : "V") + s5_char(X) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

namespace {

void init_monos(HighComponent& h) {
  h.monos = s5_monomials(h.X, h.m, h.n);
  for (size_t i = 0; i < h.monos.size(); ++i) h.mindex.emplace(h.monos[i], static_cast<int>(i));
}

std::map<Weight5, std::vector<int>> by_weight(const HighComponent& h) {
  std::map<Weight5, std::vector<int>> g;
  for (size_t i = 0; i < h.monos.size(); ++i) g[s5_weight(h.X, h.monos[i])].push_back(static_cast<int>(i));
  return g;
}

// Columns: local monomials; rows: output monomials of each operator, offset per operator.
template <class Op>
SparseMatrix operator_matrix(const HighComponent& h, const std::vector<int>& cols, int nops, Op op) {
  std::map<std::pair<int, Monomial>, int> row;
  std::vector<std::vector<std::pair<int, Rational>>> entries(cols.size());
  std::vector<std::tuple<int, Monomial, Rational, int>> trip;
  const Universe& u = s5_universe(h.X);
  for (size_t c = 0; c < cols.size(); ++c) {
    Poly f = Poly::monomial(u, h.monos[static_cast<size_t>(cols[c])]);
    for (int k = 0; k < nops; ++k) {
      Poly g = op(k, f);
      for (auto& [mo, x] : g.terms()) {
        int r = row.emplace(std::make_pair(k, mo), static_cast<int>(row.size())).first->second;
        trip.emplace_back(r, mo, x, static_cast<int>(c));
      }
    }
  }
  SparseMatrix M(static_cast<int>(row.size()), static_cast<int>(cols.size()));
  for (auto& [r, mo, x, c] : trip) M.add(r, c, x);
  return M;
}

const int kQuads[5][4] = {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}};

const int kTriples[10][3] = {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
                             {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};

bool dominant(const Weight5& w) {
  for (int i = 0; i < 4; ++i)
    if (w[static_cast<size_t>(i)] < w[static_cast<size_t>(i + 1)]) return false;
  return true;
}

int height(const Weight5& w) {
  int s = 0;
  for (int i = 0; i < 5; ++i) s += (4 - i) * w[static_cast<size_t>(i)];
  return s;
}

long expected_dim(const HighComponent& h) {
  auto l = top_label(h.X, h.m, h.n);
  return dim_irrep_sl5(l[0], l[1], l[2], l[3]);
}

}  // namespace

HighComponent raw_component(S5Space X, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative bidegree");
  HighComponent h;
  h.X = X;
  h.m = m;
  h.n = n;
  h.raw = true;
  init_monos(h);
  for (size_t i = 0; i < h.monos.size(); ++i) {
    h.basis.push_back(SparseVec{{static_cast<int>(i), Rational(1)}});
    h.weights.push_back(s5_weight(X, h.monos[i]));
  }
  return h;
}

long pluecker_kernel_dim(int m, int n, bool with_incidence) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative bidegree");
  HighComponent h;
  h.m = m;
  h.n = n;
  init_monos(h);
  long dim = 0;
  int nops = with_incidence ? 15 : 5;
  for (auto& [w, cols] : by_weight(h)) {
    SparseMatrix M = operator_matrix(h, cols, nops, [&](int k, const Poly& f) {
      if (k < 5) return pluecker_apply(S5Space::A, f, kQuads[k][0], kQuads[k][1], kQuads[k][2], kQuads[k][3]);
      const int* t = kTriples[k - 5];
      return incidence_apply(f, t[0], t[1], t[2]);
    });
    dim += static_cast<long>(cols.size()) - rank_of(M);
  }
  return dim;
}

HighComponent high_component(S5Space X, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("negative bidegree");
  HighComponent h;
  h.X = X;
  h.m = m;
  h.n = n;
  init_monos(h);
  auto groups = by_weight(h);
  if (X == S5Space::A) {
    for (auto& [w, cols] : groups) {
      SparseMatrix M = operator_matrix(h, cols, 15, [&](int k, const Poly& f) {
        if (k < 5) return pluecker_apply(S5Space::A, f, kQuads[k][0], kQuads[k][1], kQuads[k][2], kQuads[k][3]);
        const int* t = kTriples[k - 5];
        return incidence_apply(f, t[0], t[1], t[2]);
      });
      for (auto& v : rank_kernel(M).kernel) {
        SparseVec g;
        for (auto& [c, x] : v) g.emplace(cols[static_cast<size_t>(c)], x);
        h.span.add(g);
        h.basis.push_back(std::move(g));
        h.weights.push_back(w);
      }
    }
  } else {
    h.quotient = true;
    Weight5 top = s5_weight(X, h.monos.empty() ? Monomial{} : h.monos.front());
    {
      // The top weight is the unique maximum of the height among dominant weights.
      int best = -1 << 30;
      for (auto& [w, cols] : groups)
        if (dominant(w) && height(w) > best) {
          best = height(w);
          top = w;
        }
    }
    // Highest-weight vectors of non-top weight generate S_low.
    std::map<Weight5, std::vector<SparseVec>> low;
    std::vector<std::pair<int, Weight5>> order;
    for (auto& [w, cols] : groups) order.emplace_back(height(w), w);
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    const Universe& u = s5_universe(X);
    for (auto& [ht, w] : order) {
      const auto& cols = groups.at(w);
      std::vector<SparseVec> gens;
      if (dominant(w)) {
        SparseMatrix M = operator_matrix(h, cols, 4, [&](int k, const Poly& f) { return sl5_act(X, k + 1, k + 2, f); });
        auto ker = rank_kernel(M).kernel;
        if (w == top) {
          if (ker.size() != 1) throw std::logic_error("top weight of " + h.name() + " is not simple");
        } else {
          for (auto& v : ker) {
            SparseVec g;
            for (auto& [c, x] : v) g.emplace(cols[static_cast<size_t>(c)], x);
            gens.push_back(std::move(g));
          }
        }
      }
      for (int i = 0; i < 4; ++i) {
        Weight5 up = w;
        up[static_cast<size_t>(i)] += 1;
        up[static_cast<size_t>(i + 1)] -= 1;
        auto it = low.find(up);
        if (it == low.end()) continue;
        for (auto& v : it->second) {
          Poly f(u);
          for (auto& [k, c] : v) f.add_term(h.monos[static_cast<size_t>(k)], c);
          Poly g = sl5_act(X, i + 2, i + 1, f);
          if (!g.is_zero()) gens.push_back(h.monomial_vec(g));
        }
      }
      if (gens.empty()) continue;
      auto rows = rref_rows(gens);
      for (auto& r : rows) h.low_rows.emplace(r.begin()->first, r);
      h.low_dim += static_cast<int>(rows.size());
      low.emplace(w, std::move(rows));
    }
    for (size_t i = 0; i < h.monos.size(); ++i) {
      if (h.low_rows.count(static_cast<int>(i))) continue;
      h.basis.push_back(SparseVec{{static_cast<int>(i), Rational(1)}});
      h.weights.push_back(s5_weight(X, h.monos[i]));
    }
  }
  if (static_cast<long>(h.basis.size()) != expected_dim(h))
    throw std::logic_error("isotypic decomposition of " + h.name() + " has dimension " + std::to_string(h.basis.size()) +
                           ", expected " + std::to_string(expected_dim(h)));
  return h;
}

}  // namespace kr
