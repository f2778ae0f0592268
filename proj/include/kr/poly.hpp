#pragma once
// Multivariate super-polynomials: commuting even variables and anticommuting
// odd (exterior) variables, with exact rational coefficients.

#include "kr/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kr {

constexpr int kMaxEven = 16;
constexpr int kMaxOdd = 16;

struct Monomial {
  std::array<uint8_t, kMaxEven> e{};
  uint32_t odd = 0;  // bit i set <=> odd variable i present

  int deg(int i) const { return e[static_cast<size_t>(i)]; }
  int even_degree() const;
  int odd_degree() const { return __builtin_popcount(odd); }
  bool has_odd(int i) const { return (odd >> i) & 1u; }
  auto operator<=>(const Monomial&) const = default;
};

// Variable universe: how many even and odd variables, plus display names.
struct Universe {
  int n_even = 0;
  int n_odd = 0;
  std::vector<std::string> even_names;
  std::vector<std::string> odd_names;

  static Universe plain(int n, const std::string& stem = "x");
  // n coordinates x_i with their differentials dx_i as odd variables.
  static Universe forms(int n);
  bool operator==(const Universe& o) const { return n_even == o.n_even && n_odd == o.n_odd; }
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(const Universe& u) : u_(u) {}
  Poly(const Universe& u, const Rational& c);

  static Poly var(const Universe& u, int i);      // even variable
  static Poly odd_var(const Universe& u, int i);  // odd variable
  static Poly monomial(const Universe& u, const Monomial& m, const Rational& c = Rational(1));

  const Universe& universe() const { return u_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  // Total even degree if homogeneous, -1 for zero, throws if inhomogeneous.
  int even_degree() const;
  // Parity of the odd part (0 or 1), throws if mixed.
  int parity() const;

  std::string str() const;

 private:
  Universe u_;
  Terms t_;
};

// Product with Koszul signs for odd factors. Throws on universe mismatch.
Poly poly_mul(const Poly& a, const Poly& b);

// Sign of the product of two exterior monomials (0 if they share a factor).
int koszul_sign(uint32_t a, uint32_t b);

// d/dx_i on an even variable.
Poly diff(const Poly& p, int i);
// Left derivative with respect to odd variable i.
Poly odd_diff(const Poly& p, int i);
// Substitute: apply a linear map to the coefficients, keeping structure.
Poly map_terms(const Poly& p, const std::function<void(const Monomial&, const Rational&, Poly&)>& f);

// All monomials in n even variables of total degree k, in canonical order.
std::vector<Monomial> monomials_of_degree(int n, int k);

}  // namespace kr
