#pragma once
// Polynomial vector fields and differential forms on C^n.
// A vector field is a list of n coefficient polynomials over Universe::plain(n);
// a form is a Poly over Universe::forms(n) whose odd variables are the dx_i.

#include "kr/poly.hpp"

#include <vector>

namespace kr {

using VecField = std::vector<Poly>;

VecField zero_field(int n);
VecField coordinate_field(int n, int i);  // d/dx_i
bool is_zero_field(const VecField& d);
VecField field_add(const VecField& a, const VecField& b, const Rational& cb = Rational(1));
VecField field_scale(const VecField& a, const Rational& c);
VecField field_mul(const Poly& f, const VecField& a);

// Copy p into universe u (same monomials).
Poly recast(const Poly& p, const Universe& u);

Poly apply_field(const VecField& d, const Poly& f);  // D(f), acting on even variables only
Poly divergence(const VecField& d);
VecField lie_bracket(const VecField& a, const VecField& b);
VecField gradient(const Poly& f);
VecField cross(const VecField& a, const VecField& b);  // n = 3 only

Poly as_form(const Poly& f, int n);  // function -> 0-form
Poly volume_form(int n);
Poly ext_d(const Poly& w);
Poly interior(const VecField& d, const Poly& w);
Poly lie_derivative(const VecField& d, const Poly& w);
// D.w = L_D w + lambda div(D) w
Poly twisted_action(const VecField& d, const Poly& w, const Rational& lambda);
int form_degree(const Poly& w);  // -1 for zero, throws if mixed

// W_n ~ Omega^{n-1}: D -> i_D(dx_1 ^ ... ^ dx_n) and back.
Poly field_to_form(const VecField& d);
VecField form_to_field(const Poly& w);
// Omega^0 ~ Omega^n: f -> f dx_1 ^ ... ^ dx_n and back.
Poly function_to_top(const Poly& f, int n);
Poly top_to_function(const Poly& w);

// Divergence-free fields with coefficients of degree k, kernel basis of div.
std::vector<VecField> divfree_fields(int n, int k);
// Closed 2-forms with coefficients of degree k, kernel basis of d.
std::vector<Poly> closed_two_forms(int n, int k);

}  // namespace kr
