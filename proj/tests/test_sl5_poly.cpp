#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/complexes.hpp"
#include "kr/sl5.hpp"

using namespace kr;

namespace {

const S5Space kSpaces[] = {S5Space::A, S5Space::B, S5Space::C};

Poly v(S5Space X, int i) { return s5_var(X, s5_vec(i)); }
Poly w(S5Space X, int i, int j) { return s5_var(X, s5_pair(i, j)); }
Poly one(S5Space X) { return Poly(s5_universe(X), Rational(1)); }

// Weyl dimension formula for sl5 from the positive roots e_i - e_j.
long weyl_sl5(int m1, int m2, int m3, int m4) {
  int m[4] = {m1, m2, m3, m4};
  Rational d(1);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      long s = 0;
      for (int k = i; k < j; ++k) s += m[k] + 1;
      d *= Rational(s, j - i);
    }
  return d.num().get_si();
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Poly th(S5Space X, int i, int j, const Poly& f) {
  if (i == j) return Poly(s5_universe(X));
  return i < j ? theta(X, i, j, f) : -theta(X, j, i, f);
}

}  // namespace

TEST_CASE("natural and dual actions") {
  CHECK(sl5_act(S5Space::A, 1, 2, v(S5Space::A, 2)) == v(S5Space::A, 1));
  CHECK(sl5_act(S5Space::A, 1, 2, w(S5Space::A, 3, 4)).is_zero());
  CHECK(sl5_act(S5Space::B, 1, 2, v(S5Space::B, 1)) == -v(S5Space::B, 2));
}

TEST_CASE("sl5 commutation relations as operators") {
  long bad = 0;
  for (S5Space X : kSpaces)
    for (int deg = 1; deg <= 2; ++deg)
      for (int m = 0; m <= deg; ++m)
        for (auto& mono : s5_monomials(X, m, deg - m)) {
          Poly f = Poly::monomial(s5_universe(X), mono);
          for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b)
              for (int c = 1; c <= 5; ++c)
                for (int d = 1; d <= 5; ++d) {
                  if ((a + b + c + d) % 3) continue;  // a fixed third of the index tuples
                  Poly lhs = sl5_act(X, a, b, sl5_act(X, c, d, f)) - sl5_act(X, c, d, sl5_act(X, a, b, f));
                  Poly rhs(s5_universe(X));
                  if (b == c) rhs += sl5_act(X, a, d, f);
                  if (d == a) rhs -= sl5_act(X, c, b, f);
                  if (!(lhs == rhs)) ++bad;
                }
        }
  CHECK(bad == 0);
}

TEST_CASE("Pluecker operators") {
  S5Space A = S5Space::A;
  Poly q = poly_mul(w(A, 1, 2), w(A, 3, 4)) - poly_mul(w(A, 1, 3), w(A, 2, 4)) + poly_mul(w(A, 1, 4), w(A, 2, 3));
  CHECK(pluecker_apply(A, q, 1, 2, 3, 4) == one(A) * Rational(3));
  CHECK(pluecker_apply(A, poly_mul(w(A, 1, 2), w(A, 1, 2)), 1, 2, 3, 4).is_zero());
  Poly f = poly_mul(v(A, 1), poly_mul(v(A, 2), v(A, 2)));
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) CHECK(pluecker_apply(A, f, a, b, 3, 4).is_zero());
  CHECK(s5_monomials(A, 0, 2).size() == 55);
  CHECK(pluecker_kernel_dim(0, 2, false) == 50);
  CHECK(pluecker_kernel_dim(0, 2, false) == weyl_sl5(0, 2, 0, 0));
  // The Pluecker system alone does not see the x_i: it keeps S^m C^5 (x) F(0,n,0,0).
  CHECK(pluecker_kernel_dim(1, 1, false) == 5 * 10);
  CHECK(pluecker_kernel_dim(1, 1, true) == weyl_sl5(1, 1, 0, 0));
}

TEST_CASE("dimension formula") {
  CHECK(dim_irrep_sl5(1, 0, 0, 0) == 5);
  CHECK(dim_irrep_sl5(0, 0, 1, 0) == 10);
  CHECK(dim_irrep_sl5(1, 1, 0, 0) == 40);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) CHECK(dim_irrep_sl5(a, b, c, d) == weyl_sl5(a, b, c, d));
}

TEST_CASE("high components") {
  CHECK(high_component(S5Space::A, 0, 2).dim() == weyl_sl5(0, 2, 0, 0));
  for (int m = 0; m <= 4; ++m) CHECK(high_component(S5Space::A, m, 0).dim() == binom(m + 4, 4));
  CHECK(high_component(S5Space::C, 1, 1).dim() == 24);
  for (S5Space X : kSpaces)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; m + n <= 3; ++n) {
        auto l = top_label(X, m, n);
        CHECK(high_component(X, m, n).dim() == weyl_sl5(l[0], l[1], l[2], l[3]));
      }
  for (S5Space X : kSpaces) CHECK(raw_component(X, 1, 1).dim() == static_cast<int>(s5_monomials(X, 1, 1).size()));
}

TEST_CASE("Pluecker quadrics vanish in the quotient of S_B") {
  S5Space B = S5Space::B;
  long checked = 0;
  for (int m = 0; m <= 1; ++m)
    for (int n = 2; m + n <= 3; ++n) {
      HighComponent H = high_component(B, m, n);
      for (auto& mono : s5_monomials(B, m, n - 2)) {
        Poly g = Poly::monomial(s5_universe(B), mono);
        for (auto [a, b, c, d] : {std::tuple{1, 2, 3, 4}, std::tuple{1, 2, 3, 5}, std::tuple{2, 3, 4, 5}}) {
          CHECK(H.vanishes(poly_mul(pluecker_quadric(a, b, c, d), g)));
          ++checked;
        }
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("theta operators") {
  S5Space A = S5Space::A, B = S5Space::B, C = S5Space::C;
  CHECK(theta(A, 1, 2, poly_mul(w(A, 1, 2), w(A, 3, 4))) == w(A, 3, 4));
  CHECK(theta(B, 1, 2, one(B)) == w(B, 1, 2));
  CHECK(theta(C, 1, 2, v(C, 2)) == s5_var(C, s5_covec(1)));
  for (S5Space X : kSpaces)
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; m + n <= 2; ++n) CHECK(theta_identity_violations(X, m, n) == 0);
}

TEST_CASE("theta is equivariant as a family indexed like d_ij") {
  // [E_ab, theta_ij] = -delta_ai theta_bj - delta_aj theta_ib, the rule of the dual of L^2 C^5.
  long bad = 0;
  for (S5Space X : kSpaces)
    for (int m = 0; m <= 1; ++m)
      for (int n = 0; m + n <= 2; ++n)
        for (auto& mono : s5_monomials(X, m, n)) {
          Poly f = Poly::monomial(s5_universe(X), mono);
          for (int a = 1; a <= 5; ++a)
            for (int b = 1; b <= 5; ++b)
              for (int i = 1; i <= 5; ++i)
                for (int j = i + 1; j <= 5; ++j) {
                  Poly lhs = sl5_act(X, a, b, theta(X, i, j, f)) - theta(X, i, j, sl5_act(X, a, b, f));
                  Poly rhs(s5_universe(X));
                  if (a == i) rhs -= th(X, b, j, f);
                  if (a == j) rhs -= th(X, i, b, f);
                  if (!(lhs == rhs)) ++bad;
                }
        }
  CHECK(bad == 0);
}
