#pragma once
// Heisenberg algebra on x1,x2,x3,z+,z- and their partners, and its four Fock modules.

#include "kr/poly.hpp"
#include "kr/sparse.hpp"
#include "kr/superalg.hpp"

#include <string>
#include <vector>

namespace kr {

// Generator indices: 0..4 = x1,x2,x3,z+,z-; 5..9 = D1,D2,D3,D+,D-.
constexpr int kModes = 5;
int heis_q(int mode);
int heis_p(int mode);

// Normal-ordered element of H: every x, z factor left of every D factor.
class HeisOp {
 public:
  HeisOp();
  explicit HeisOp(const Rational& c);
  static HeisOp gen(int g);
  static HeisOp monomial(const Monomial& m, const Rational& c = Rational(1));

  const Poly& symbol() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  HeisOp& operator+=(const HeisOp& o) { p_ += o.p_; return *this; }
  HeisOp& operator-=(const HeisOp& o) { p_ -= o.p_; return *this; }
  HeisOp& operator*=(const Rational& c) { p_ *= c; return *this; }
  friend HeisOp operator+(HeisOp a, const HeisOp& b) { return a += b; }
  friend HeisOp operator-(HeisOp a, const HeisOp& b) { return a -= b; }
  friend HeisOp operator*(const Rational& c, HeisOp a) { return a *= c; }
  friend bool operator==(const HeisOp& a, const HeisOp& b) { return a.p_ == b.p_; }
  std::string str() const { return p_.str(); }

 private:
  Poly p_;
};

HeisOp heis_mul(const HeisOp& a, const HeisOp& b);
HeisOp heis_commutator(const HeisOp& a, const HeisOp& b);

// Fock module tags: which of x_i / D_i and z_a / D_a create.
enum class Lagrangian { A, B, C, D };
char lagrangian_char(Lagrangian X);
Lagrangian parse_lagrangian(char c);
bool creates_q(Lagrangian X, int mode);

// Polynomial in the creators of X times 1_X; e[k] is the exponent of mode k's creator.
class FockVector {
 public:
  using Terms = std::map<Monomial, Rational>;
  FockVector() = default;
  explicit FockVector(Lagrangian X) : X_(X) {}
  static FockVector vacuum(Lagrangian X);
  static FockVector monomial(Lagrangian X, const Monomial& m, const Rational& c = Rational(1));

  Lagrangian tag() const { return X_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Monomial& m, const Rational& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator*=(const Rational& c);
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.X_ == b.X_ && a.t_ == b.t_; }
  // (m, n) of one monomial: x-degree or minus D_i degree, z-degree or minus D_a degree.
  static std::pair<int, int> bidegree(Lagrangian X, const Monomial& m);
  std::string str() const;

 private:
  Lagrangian X_ = Lagrangian::A;
  Terms t_;
};

FockVector fock_apply(const HeisOp& op, const FockVector& v);
// Same polynomial read in another Fock module.
FockVector relabel(const FockVector& v, Lagrangian target);

enum class Flavor { Flat, Sharp };

// Image of a degree-0 element of E(3,6) or E(3,8) in H.
HeisOp g0_embed(const SuperElement& g, Flavor flavor);
HeisOp y_operator(Flavor flavor);

struct WeightLabel {
  int p = 0, q = 0, r = 0;
  Rational y;
  Lagrangian type = Lagrangian::A;
  std::string str() const;
};

struct FockBlock {
  Lagrangian tag = Lagrangian::A;
  int m = 0, n = 0;
  Flavor flavor = Flavor::Sharp;
  std::vector<Monomial> basis;
  std::map<Monomial, int> index;
  Monomial highest;
  WeightLabel label;
  std::string name() const;  // e.g. "A_m2_n3"
  int dim() const { return static_cast<int>(basis.size()); }
  SparseVec coords(const FockVector& v) const;  // throws if v leaves the block
  FockVector vector(const SparseVec& c) const;
};

// V^{m,n}_X. Throws for sign-inconsistent (X, m, n).
FockBlock weight_block(Lagrangian X, int m, int n, Flavor flavor = Flavor::Sharp);
// Block of X with highest-weight label (p or q, r).
FockBlock label_block(Lagrangian X, int pq, int r, Flavor flavor = Flavor::Sharp);
Rational theorem_y(Lagrangian X, int pq, int r);

long dim_irrep_g0(int p, int q, int r);

}  // namespace kr
