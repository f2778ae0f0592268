#pragma once
// Ground modules of E(5,10): S_A = S(C^5 + L^2 C^5), S_B = its dual, S_C = S(C^5 + C^5*),
// the sl5 action, the theta operators, Pluecker systems and the high isotypic component.
// Public indices are 1-based, as in the usual sl5 notation.

#include "kr/poly.hpp"
#include "kr/sparse.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace kr {

enum class S5Space { A, B, C };
char s5_char(S5Space X);
S5Space parse_s5(char c);

const Universe& s5_universe(S5Space X);
// Index of x_i (or x*_i) and of x_ij (or x*_ij, i < j) in the universe; 1-based i, j.
int s5_vec(int i);
int s5_pair(int i, int j);
int s5_covec(int i);  // space C only

Poly s5_var(S5Space X, int v);
std::pair<int, int> s5_bidegree(S5Space X, const Monomial& m);
// Eigenvalues of E_11, ..., E_55.
std::array<int, 5> s5_weight(S5Space X, const Monomial& m);
std::vector<Monomial> s5_monomials(S5Space X, int m, int n);

// E_ab acting as a derivation.
Poly sl5_act(S5Space X, int a, int b, const Poly& f);
// Pluecker operator on the index quadruple (a,b,c,d): second derivatives for A, multiplication for B.
Poly pluecker_apply(S5Space X, const Poly& f, int a, int b, int c, int d);
Poly pluecker_quadric(int a, int b, int c, int d);  // in S_B
// Incidence operator d_i d_jk - d_j d_ik + d_k d_ij on S_A; with the Pluecker operators it cuts out the top component.
Poly incidence_apply(const Poly& f, int i, int j, int k);
Poly theta(S5Space X, int i, int j, const Poly& f);

long dim_irrep_sl5(int m1, int m2, int m3, int m4);
// Dynkin labels of the top highest weight of bidegree (m, n).
std::array<int, 4> top_label(S5Space X, int m, int n);

using Weight5 = std::array<int, 5>;

// The top isotypic component of a bidegree: a subspace for A, a quotient for B and C.
// With raw = true the whole bidegree is used (no restriction, no quotient).
struct HighComponent {
  S5Space X = S5Space::A;
  int m = 0, n = 0;
  bool raw = false;
  bool quotient = false;
  std::vector<Monomial> monos;  // monomial basis of the bidegree
  std::map<Monomial, int> mindex;
  std::vector<SparseVec> basis;  // over monos: kernel vectors (A) or representative monomials (quotient)
  std::vector<Weight5> weights;  // weight of each basis vector
  // Quotient data: reduced rows of S_low, keyed by pivot monomial index.
  std::map<int, SparseVec> low_rows;
  int low_dim = 0;
  SpanSolver span;  // subspace case

  int dim() const { return static_cast<int>(basis.size()); }
  SparseVec monomial_vec(const Poly& f) const;  // throws if f leaves the bidegree
  Poly poly(int i) const;
  // Coordinates of f in the basis (image in the quotient for B, C). Throws if f is not in the subspace.
  SparseVec coords(const Poly& f) const;
  // Zero in the quotient (B, C) or zero polynomial (A).
  bool vanishes(const Poly& f) const;
  std::string name() const;
};

HighComponent high_component(S5Space X, int m, int n);
// dim of the common kernel on S_A of bidegree (m, n): Pluecker operators only, or with the incidence operators too.
long pluecker_kernel_dim(int m, int n, bool with_incidence);
HighComponent raw_component(S5Space X, int m, int n);

}  // namespace kr
