#include "kr/jacobi.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace kr {

int default_workers() {
  const char* s = std::getenv("KR_WORKERS");
  if (!s) return 1;
  int w = std::atoi(s);
  return w < 1 ? 1 : w;
}

void parallel_for(int n, int workers, const std::function<void(int)>& body) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int w = std::min(workers, n);
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

StructureConstants structure_constants(const AlgebraModel& m, int jmin, int jmax, int workers) {
  StructureConstants sc;
  sc.id = m.id();
  sc.jmin = std::max(jmin, m.jmin());
  sc.jmax = std::min(jmax, m.jmax());
  std::map<int, int> offset;
  std::vector<const SuperElement*> elems;
  for (int j = sc.jmin; j <= sc.jmax; ++j) {
    offset[j] = static_cast<int>(elems.size());
    for (auto& e : m.basis(j)) {
      elems.push_back(&e);
      sc.degree.push_back(j);
      sc.parity.push_back(((j % 2) + 2) % 2);
      sc.label.push_back(e.str());
    }
  }
  int n = static_cast<int>(elems.size());
  sc.c.assign(static_cast<size_t>(n) * static_cast<size_t>(n), SparseVec{});
  sc.computed.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  int depth = algebra_depth(m.id());
  parallel_for(n, workers, [&](int a) {
    for (int b = 0; b < n; ++b) {
      int d = sc.degree[static_cast<size_t>(a)] + sc.degree[static_cast<size_t>(b)];
      size_t k = static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b);
      if (d < depth) {
        sc.computed[k] = 1;
        continue;
      }
      if (d < sc.jmin || d > sc.jmax) continue;
      SuperElement r = m.bracket(*elems[static_cast<size_t>(a)], *elems[static_cast<size_t>(b)]);
      SparseVec v;
      if (!r.is_zero())
        for (auto& [i, x] : m.coords(r, d)) v.emplace(offset[d] + i, x);
      sc.c[k] = std::move(v);
      sc.computed[k] = 1;
    }
  });
  return sc;
}

namespace {

std::string vec_str(const StructureConstants& sc, const SparseVec& v) {
  std::string s;
  for (auto& [i, x] : v) {
    if (!s.empty()) s += " + ";
    s += x.str() + "*[" + sc.label[static_cast<size_t>(i)] + "]";
  }
  return s;
}

}  // namespace

JacobiReport jacobi_check(const StructureConstants& sc, int workers, size_t max_listed) {
  JacobiReport rep;
  int n = sc.size();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (!sc.has(a, b) || !sc.has(b, a)) continue;
      ++rep.pairs_checked;
      SparseVec r = sc.at(a, b);
      int s = (sc.parity[static_cast<size_t>(a)] & sc.parity[static_cast<size_t>(b)]) ? 1 : -1;
      // [a,b] + (-1)^{p(a)p(b)} [b,a] must vanish
      axpy(r, Rational(-s), sc.at(b, a));
      if (!r.empty())
        rep.violations.push_back({"antisymmetry",
                                  {sc.label[static_cast<size_t>(a)], sc.label[static_cast<size_t>(b)]},
                                  rep.violations.size() < max_listed ? vec_str(sc, r) : ""});
    }
  int depth = algebra_depth(sc.id);
  std::vector<std::vector<JacobiViolation>> found(static_cast<size_t>(n));
  std::vector<long long> counts(static_cast<size_t>(n), 0);
  parallel_for(n, workers, [&](int x) {
    auto px = sc.parity[static_cast<size_t>(x)];
    for (int y = x; y < n; ++y) {
      if (!sc.has(x, y)) continue;
      auto py = sc.parity[static_cast<size_t>(y)];
      int sxy = (px & py) ? -1 : 1;
      for (int z = y; z < n; ++z) {
        int d = sc.degree[static_cast<size_t>(x)] + sc.degree[static_cast<size_t>(y)] + sc.degree[static_cast<size_t>(z)];
        if (d > sc.jmax || d < depth) continue;
        if (!sc.has(y, z) || !sc.has(x, z)) continue;
        ++counts[static_cast<size_t>(x)];
        // [x,[y,z]] - [[x,y],z] - (-1)^{p(x)p(y)} [y,[x,z]]
        SparseVec r;
        for (auto& [k, c] : sc.at(y, z)) axpy(r, c, sc.at(x, k));
        for (auto& [k, c] : sc.at(x, y)) axpy(r, -c, sc.at(k, z));
        for (auto& [k, c] : sc.at(x, z)) axpy(r, c * Rational(-sxy), sc.at(y, k));
        if (!r.empty()) {
          auto& f = found[static_cast<size_t>(x)];
          f.push_back({"jacobi",
                       {sc.label[static_cast<size_t>(x)], sc.label[static_cast<size_t>(y)], sc.label[static_cast<size_t>(z)]},
                       f.size() < max_listed ? vec_str(sc, r) : ""});
        }
      }
    }
  });
  for (int x = 0; x < n; ++x) {
    rep.triples_checked += counts[static_cast<size_t>(x)];
    for (auto& v : found[static_cast<size_t>(x)]) rep.violations.push_back(std::move(v));
  }
  return rep;
}

JacobiReport jacobi_check(const AlgebraModel& m, int jmin, int jmax, int workers) {
  return jacobi_check(structure_constants(m, jmin, jmax, workers), workers);
}

}  // namespace kr
