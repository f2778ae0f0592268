#include "kr/superalg.hpp"

#include <stdexcept>

namespace kr {

SuperElement embed_e36_in_e510(const SuperElement& x) {
  if (x.algebra() != AlgebraId::E36 && !x.is_zero()) throw std::invalid_argument("embedding expects an E(3,6) element");
  const Universe pu = Universe::plain(5), fu = Universe::forms(5);
  SuperElement r(AlgebraId::E510);
  Poly z[2] = {Poly::var(pu, 3), Poly::var(pu, 4)};
  for (auto& [s, c] : x.terms()) {
    Monomial m = s.mono;
    m.odd = 0;
    Poly f = Poly::monomial(pu, m, c);
    VecField v = zero_field(5);
    switch (s.kind) {
      case Kind::Field: {
        v[static_cast<size_t>(s.a)] = f;
        Poly dv = diff(f, s.a) * rat(-1, 2);
        v[3] = poly_mul(dv, z[0]);
        v[4] = poly_mul(dv, z[1]);
        r += field_element(AlgebraId::E510, v);
        break;
      }
      case Kind::Current: {
        if (s.a == 2) {
          v[3] = poly_mul(f, z[0]);
          v[4] = -poly_mul(f, z[1]);
        } else if (s.a == 0) {
          v[4] = poly_mul(f, z[0]);
        } else {
          v[3] = poly_mul(f, z[1]);
        }
        r += field_element(AlgebraId::E510, v);
        break;
      }
      case Kind::OddOneForm: {
        int i = __builtin_ctz(s.mono.odd);
        Poly dxi = Poly::odd_var(fu, i);
        Poly F = recast(f, fu);
        Poly zz = recast(z[s.a], fu);
        Poly w = poly_mul(poly_mul(zz, dxi), ext_d(F)) + poly_mul(poly_mul(F, dxi), Poly::odd_var(fu, 3 + s.a));
        r += form_element(AlgebraId::E510, Kind::ClosedTwoForm, w);
        break;
      }
      default: throw std::invalid_argument("not an E(3,6) symbol");
    }
  }
  return r;
}

bool in_sharp_subalgebra(const SuperElement& x) {
  if (x.is_zero()) return true;
  if (x.algebra() != AlgebraId::E38) return false;
  for (auto& [s, c] : x.terms()) {
    if (s.kind == Kind::Field || s.kind == Kind::OddScalar) continue;
    if (s.kind == Kind::Current && s.mono.even_degree() == 0) continue;
    return false;
  }
  return divergence(field_part(x)).is_zero();
}

SuperElement sharp_to_flat(const SuperElement& x) {
  if (!in_sharp_subalgebra(x)) throw std::invalid_argument("element outside the subalgebra: " + x.str());
  SuperElement r(AlgebraId::E36);
  for (auto& [s, c] : x.terms()) {
    if (s.kind != Kind::OddScalar) {
      r.add(s, c);
      continue;
    }
    Poly f = Poly::monomial(Universe::forms(3), s.mono, c);
    r += form_element(AlgebraId::E36, Kind::OddOneForm, ext_d(f), s.a);
  }
  return r;
}

std::vector<SuperElement> sharp_basis(int j) {
  std::vector<SuperElement> out;
  const AlgebraId id = AlgebraId::E38;
  if (j % 2 == 0) {
    if (j >= -2)
      for (auto& d : divfree_fields(3, (j + 2) / 2)) out.push_back(field_element(id, d));
    if (j == 0)
      for (int X = 0; X < 3; ++X) out.emplace_back(id, BasisSymbol{Kind::Current, static_cast<int8_t>(X), Monomial{}});
  } else if (j >= -3) {
    for (int s = 0; s < 2; ++s)
      for (auto& m : monomials_of_degree(3, (j + 3) / 2)) out.emplace_back(id, BasisSymbol{Kind::OddScalar, static_cast<int8_t>(s), m});
  }
  return out;
}

}  // namespace kr
