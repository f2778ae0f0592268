#include "kr/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace kr {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (auto& [i, v] : x) {
    auto [it, fresh] = y.emplace(i, a * v);
    if (!fresh) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
  SparseVec r;
  if (a.is_zero()) return r;
  for (auto& [i, v] : x) r.emplace(i, v * a);
  return r;
}

Rational SparseMatrix::get(int r, int c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  if (v.is_zero()) e_.erase({r, c});
  else e_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  if (v.is_zero()) return;
  auto [it, fresh] = e_.emplace(std::make_pair(r, c), v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) e_.erase(it);
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (auto& [rc, v] : e_) t.e_.emplace(std::make_pair(rc.second, rc.first), v);
  return t;
}

SparseVec SparseMatrix::column(int c) const {
  SparseVec v;
  for (auto& [rc, x] : e_)
    if (rc.second == c) v.emplace(rc.first, x);
  return v;
}

std::vector<SparseVec> SparseMatrix::row_vectors() const {
  std::vector<SparseVec> rows(static_cast<size_t>(rows_));
  for (auto& [rc, x] : e_) rows[static_cast<size_t>(rc.first)].emplace(rc.second, x);
  return rows;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (auto& [rc, v] : e_) {
    auto it = x.find(rc.second);
    if (it == x.end()) continue;
    auto [jt, fresh] = y.emplace(rc.first, v * it->second);
    if (!fresh) {
      jt->second += v * it->second;
      if (jt->second.is_zero()) y.erase(jt);
    }
  }
  return y;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
  SparseMatrix r(a.rows_, b.cols_);
  auto brows = b.row_vectors();
  for (auto& [rc, v] : a.e_) {
    for (auto& [c, w] : brows[static_cast<size_t>(rc.second)]) r.add(rc.first, c, v * w);
  }
  return r;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("shape mismatch in sum");
  SparseMatrix r = a;
  for (auto& [rc, v] : b.e_) r.add(rc.first, rc.second, v);
  return r;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  return a + b.scaled(Rational(-1));
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix r(rows_, cols_);
  if (c.is_zero()) return r;
  for (auto& [rc, v] : e_) r.e_.emplace(rc, v * c);
  return r;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.set(i, i, Rational(1));
  return r;
}

namespace {

// Integer row, sorted by column.
using IRow = std::vector<std::pair<int, mpz_class>>;

IRow to_integer_row(const SparseVec& v) {
  mpz_class l = 1;
  for (auto& [c, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  IRow r;
  r.reserve(v.size());
  for (auto& [c, x] : v) {
    mpz_class n = x.num() * (l / x.den());
    r.emplace_back(c, n);
  }
  return r;
}

void normalize_content(IRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (auto& [c, x] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, x] : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

// r := p*r - a*s where p is lead of s at column col and a is r's entry there.
void eliminate(IRow& r, const IRow& s, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const std::pair<int, mpz_class>& e, int c) { return e.first < c; });
  if (it == r.end() || it->first != col) return;
  mpz_class a = it->second;
  const mpz_class& p = s.front().second;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  mpz_class fr = p / g, fs = a / g;
  IRow out;
  out.reserve(r.size() + s.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j >= s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.emplace_back(r[i].first, r[i].second * fr);
      ++i;
    } else if (i >= r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -(s[j].second * fs));
      ++j;
    } else {
      mpz_class v = r[i].second * fr - s[j].second * fs;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r.swap(out);
  normalize_content(r);
}

// Echelon form with column-order pivots. Returns pivot rows keyed by lead column.
std::map<int, IRow> echelon(const std::vector<SparseVec>& rows, bool full_reduce) {
  std::map<int, IRow> piv;
  for (auto& v : rows) {
    if (v.empty()) continue;
    IRow r = to_integer_row(v);
    normalize_content(r);
    while (!r.empty()) {
      int lead = r.front().first;
      auto it = piv.find(lead);
      if (it == piv.end()) break;
      eliminate(r, it->second, lead);
    }
    if (r.empty()) continue;
    if (full_reduce) {
      // Clear the remaining pivot columns as well so insertion order does not matter.
      for (auto& [c, s] : piv) {
        if (c <= r.front().first) continue;
        eliminate(r, s, c);
      }
    }
    piv.emplace(r.front().first, std::move(r));
  }
  return piv;
}

std::vector<SparseVec> reduced_rows(std::map<int, IRow>& piv) {
  // Back substitution from the largest pivot column down.
  std::vector<int> cols;
  for (auto& kv : piv) cols.push_back(kv.first);
  for (size_t k = cols.size(); k-- > 0;) {
    const IRow& s = piv[cols[k]];
    for (size_t j = 0; j < k; ++j) eliminate(piv[cols[j]], s, cols[k]);
  }
  std::vector<SparseVec> out;
  for (int c : cols) {
    const IRow& r = piv[c];
    Rational lead(r.front().second);
    SparseVec v;
    for (auto& [cc, x] : r) v.emplace(cc, Rational(x) / lead);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

int rank_of_rows(const std::vector<SparseVec>& rows) {
  return static_cast<int>(echelon(rows, false).size());
}

int rank_of(const SparseMatrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() <= m.cols()) return rank_of_rows(m.row_vectors());
  return rank_of_rows(m.transpose().row_vectors());
}

std::vector<SparseVec> rref_rows(const std::vector<SparseVec>& rows) {
  auto piv = echelon(rows, false);
  return reduced_rows(piv);
}

RankKernel rank_kernel(const SparseMatrix& m) {
  RankKernel rk;
  auto R = rref_rows(m.row_vectors());
  rk.rank = static_cast<int>(R.size());
  std::vector<bool> is_piv(static_cast<size_t>(m.cols()), false);
  for (auto& r : R) {
    rk.pivots.push_back(r.begin()->first);
    is_piv[static_cast<size_t>(r.begin()->first)] = true;
  }
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[static_cast<size_t>(f)]) continue;
    SparseVec k;
    k.emplace(f, Rational(1));
    for (auto& r : R) {
      auto it = r.find(f);
      if (it != r.end()) k.emplace(r.begin()->first, -it->second);
    }
    rk.kernel.push_back(std::move(k));
  }
  return rk;
}

bool SpanSolver::add(const SparseVec& v) {
  SparseVec r = v;
  SparseVec combo;
  combo.emplace(accepted_, Rational(1));
  for (auto it = r.begin(); it != r.end();) {
    auto p = by_col_.find(it->first);
    if (p == by_col_.end()) {
      ++it;
      continue;
    }
    const Pivot& pv = piv_[static_cast<size_t>(p->second)];
    Rational a = -it->second;
    int col = it->first;
    axpy(r, a, pv.vec);
    axpy(combo, a, pv.combo);
    it = r.upper_bound(col);
  }
  if (r.empty()) return false;
  int lead = r.begin()->first;
  Rational inv = Rational(1) / r.begin()->second;
  Pivot pv{lead, scaled(r, inv), scaled(combo, inv)};
  by_col_[lead] = static_cast<int>(piv_.size());
  piv_.push_back(std::move(pv));
  ++accepted_;
  return true;
}

SparseVec SpanSolver::reduce(const SparseVec& t) const {
  SparseVec r = t;
  for (auto it = r.begin(); it != r.end();) {
    auto p = by_col_.find(it->first);
    if (p == by_col_.end()) {
      ++it;
      continue;
    }
    int col = it->first;
    axpy(r, -it->second, piv_[static_cast<size_t>(p->second)].vec);
    it = r.upper_bound(col);
  }
  return r;
}

bool SpanSolver::contains(const SparseVec& t) const { return reduce(t).empty(); }

std::optional<SparseVec> SpanSolver::coords(const SparseVec& t) const {
  SparseVec r = t;
  SparseVec combo;
  for (auto it = r.begin(); it != r.end();) {
    auto p = by_col_.find(it->first);
    if (p == by_col_.end()) return std::nullopt;
    const Pivot& pv = piv_[static_cast<size_t>(p->second)];
    Rational a = it->second;
    int col = it->first;
    axpy(r, -a, pv.vec);
    axpy(combo, a, pv.combo);
    it = r.upper_bound(col);
  }
  return combo;
}

}  // namespace kr
