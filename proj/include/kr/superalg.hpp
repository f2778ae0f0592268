#pragma once
// Degree-windowed models of E(3,6), E(3,8), E(5,10).

#include "kr/forms.hpp"
#include "kr/sparse.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace kr {

enum class AlgebraId { E36, E38, E510 };

std::string algebra_name(AlgebraId id);  // "e36", "e38", "e510"
AlgebraId parse_algebra(const std::string& s);
int algebra_depth(AlgebraId id);
int algebra_nvars(AlgebraId id);

enum class Kind : uint8_t {
  Field,          // P d_i
  Current,        // a (x) X, X in {e, f, h}
  OddScalar,      // f (x) eps
  OddOneForm,     // f dx_i (x) eps
  OddTwoForm,     // f dx_i ^ dx_j (x) eps
  ClosedTwoForm,  // f dx_i ^ dx_j
};

// The coefficient monomial carries the form factor in its odd bits.
// Field: a = direction. Current: a = 0, 1, 2 for e, f, h. Decorated odd kinds: a = 0 for eps+, 1 for eps-.
struct BasisSymbol {
  Kind kind = Kind::Field;
  int8_t a = 0;
  Monomial mono;
  auto operator<=>(const BasisSymbol&) const = default;
};

int symbol_degree(AlgebraId id, const BasisSymbol& s);
int symbol_parity(AlgebraId id, const BasisSymbol& s);

class SuperElement {
 public:
  using Terms = std::map<BasisSymbol, Rational>;

  SuperElement() = default;
  explicit SuperElement(AlgebraId id) : id_(id) {}
  SuperElement(AlgebraId id, const BasisSymbol& s, const Rational& c = Rational(1));

  AlgebraId algebra() const { return id_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const BasisSymbol& s, const Rational& c);
  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement& operator*=(const Rational& c);
  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(const Rational& c, SuperElement a) { return a *= c; }
  friend SuperElement operator*(SuperElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const SuperElement& a, const SuperElement& b) { return a.id_ == b.id_ && a.t_ == b.t_; }

  // Degree of a homogeneous nonzero element; throws otherwise.
  int degree() const;
  int parity() const;
  std::map<int, SuperElement> by_degree() const;
  std::string str() const;

 private:
  void check(const SuperElement& o) const;
  AlgebraId id_ = AlgebraId::E38;
  Terms t_;
};

// Builders in terms of fields and forms.
SuperElement field_element(AlgebraId id, const VecField& d);
SuperElement current_element(AlgebraId id, const Poly& a, int x);
// Odd element f (x) eps (kind OddScalar), w (x) eps (OddOneForm / OddTwoForm) or a bare closed form.
SuperElement form_element(AlgebraId id, Kind kind, const Poly& w, int sign = 0);

// Component extraction: field part, current part for X, form part of a kind and sign.
VecField field_part(const SuperElement& x);
Poly current_part(const SuperElement& x, int X);
Poly form_part(const SuperElement& x, Kind kind, int sign = 0);

class AlgebraModel {
 public:
  AlgebraId id() const { return id_; }
  int jmin() const { return jmin_; }
  int jmax() const { return jmax_; }
  bool in_window(int j) const { return j >= jmin_ && j <= jmax_; }
  int dim(int j) const;
  const std::vector<SuperElement>& basis(int j) const;
  // Coordinates of a homogeneous element of degree j in the basis of g_j; throws if not in the span.
  SparseVec coords(const SuperElement& x, int j) const;
  SuperElement combine(int j, const SparseVec& c) const;

  SuperElement bracket(const SuperElement& x, const SuperElement& y) const;

  const SuperElement& element(const std::string& name) const;
  bool has_element(const std::string& name) const { return named_.count(name) > 0; }
  std::vector<std::string> element_names() const;

 private:
  friend AlgebraModel build_algebra(AlgebraId id, int jmin, int jmax);
  struct Piece {
    std::vector<SuperElement> basis;
    std::map<BasisSymbol, int> index;
    SpanSolver solver;
  };
  SuperElement bracket_homogeneous(const SuperElement& x, int dx, const SuperElement& y, int dy) const;
  void add_basis(int j, SuperElement e);
  void build_e38_table();

  AlgebraId id_ = AlgebraId::E38;
  int jmin_ = 0;
  int jmax_ = 0;
  std::map<int, Piece> pieces_;
  // Brackets of non-negative basis elements, keyed by (deg, index, deg, index).
  std::map<std::tuple<int, int, int, int>, SparseVec> table_;
  std::map<std::string, SuperElement> named_;
};

AlgebraModel build_algebra(AlgebraId id, int jmin, int jmax);

// Bracket of two symbols given by the closed formulas (used for all pairs in E(3,6), E(5,10)
// and for pairs involving a negative-degree element in E(3,8)).
SuperElement formula_bracket(AlgebraId id, const BasisSymbol& s, const BasisSymbol& t);

// Image of an E(3,6) element in E(5,10) (z+ = x4, z- = x5).
SuperElement embed_e36_in_e510(const SuperElement& x);

// Map from the subalgebra of E(3,8) spanned by divergence-free fields, constant currents and
// Omega^0 (x) C^2 into E(3,6): identity on the even part, f (x) v -> df (x) v on the odd part.
bool in_sharp_subalgebra(const SuperElement& x);
SuperElement sharp_to_flat(const SuperElement& x);
std::vector<SuperElement> sharp_basis(int j);

}  // namespace kr
