#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/jacobi.hpp"
#include "kr/superalg.hpp"

using namespace kr;

namespace {

const AlgebraModel& model(AlgebraId id) {
  static std::map<AlgebraId, AlgebraModel> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build_algebra(id, algebra_depth(id), 2)).first;
  return it->second;
}

Poly xvar(int n, int i) { return Poly::var(Universe::plain(n), i); }

SuperElement field(AlgebraId id, int dir, const Poly& coeff) {
  int n = algebra_nvars(id);
  VecField d = zero_field(n);
  d[static_cast<size_t>(dir)] = coeff;
  return field_element(id, d);
}

int sign_of(int px, int py) { return (px & py) ? 1 : -1; }

}  // namespace

TEST_CASE("graded dimensions of the models") {
  const AlgebraModel& e38 = model(AlgebraId::E38);
  CHECK(e38.dim(-3) == 2);
  CHECK(e38.dim(-2) == 3);
  CHECK(e38.dim(-1) == 6);
  CHECK(e38.dim(0) == 12);
  const AlgebraModel& e510 = model(AlgebraId::E510);
  CHECK(e510.dim(-2) == 5);
  CHECK(e510.dim(-1) == 10);
  CHECK(e510.dim(0) == 24);
  const AlgebraModel& e36 = model(AlgebraId::E36);
  CHECK(e36.dim(-2) == 3);
  CHECK(e36.dim(-1) == 6);
  CHECK(e36.dim(0) == 12);
}

TEST_CASE("calibration brackets") {
  const AlgebraModel& m = model(AlgebraId::E38);
  auto el = [&](const char* s) { return m.element(s); };
  Poly x3 = xvar(3, 2);
  CHECK(el("f2") == field(AlgebraId::E38, 1, x3));
  CHECK(m.bracket(el("e'0"), el("f0")) == el("f2"));
  CHECK(m.bracket(el("e'0"), el("d+1")) == el("f2"));
  CHECK(m.bracket(el("e'0"), el("d+2")) == -1 * el("f12"));
  CHECK(m.bracket(el("e'0"), el("d+3")).is_zero());
  CHECK(m.bracket(el("es0"), el("f0")) == el("hs0"));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::string pi = "d+" + std::to_string(i), pj = "d+" + std::to_string(j);
      std::string mi = "d-" + std::to_string(i), mj = "d-" + std::to_string(j);
      CHECK(m.bracket(el(pi.c_str()), el(pj.c_str())).is_zero());
      CHECK(m.bracket(el(mi.c_str()), el(mj.c_str())).is_zero());
      CHECK((m.bracket(el(pi.c_str()), el(mj.c_str())) + m.bracket(el(pj.c_str()), el(mi.c_str()))).is_zero());
    }
  // d/dx1 acting on x1 (x) eps+ by the twisted Lie derivative gives 1 (x) eps+.
  SuperElement d1 = field(AlgebraId::E38, 0, Poly(Universe::plain(3), Rational(1)));
  CHECK(m.bracket(d1, el("d+1")) == el("d+"));
}

TEST_CASE("E(5,10): [d12, d34] = d/dx5") {
  const AlgebraModel& m = model(AlgebraId::E510);
  SuperElement d5 = field(AlgebraId::E510, 4, Poly(Universe::plain(5), Rational(1)));
  CHECK(m.bracket(m.element("d12"), m.element("d34")) == d5);
  CHECK(m.bracket(m.element("d12"), m.element("d13")).is_zero());
}

TEST_CASE("super-anticommutativity and grade additivity on every basis pair") {
  for (AlgebraId id : {AlgebraId::E36, AlgebraId::E38, AlgebraId::E510}) {
    const AlgebraModel& m = model(id);
    long bad = 0, checked = 0;
    for (int i = m.jmin(); i <= m.jmax(); ++i)
      for (int j = m.jmin(); j <= m.jmax(); ++j) {
        if (i + j > m.jmax()) continue;
        for (auto& x : m.basis(i))
          for (auto& y : m.basis(j)) {
            SuperElement a = m.bracket(x, y), b = m.bracket(y, x);
            ++checked;
            if (!(a == sign_of(x.parity(), y.parity()) * b)) ++bad;
            if (!a.is_zero() && a.degree() != i + j) ++bad;
          }
      }
    CHECK_MESSAGE(bad == 0, algebra_name(id));
    CHECK(checked > 0);
  }
}

TEST_CASE("Jacobi sweep on small windows and fault injection") {
  for (AlgebraId id : {AlgebraId::E36, AlgebraId::E38, AlgebraId::E510}) {
    const AlgebraModel& m = model(id);
    JacobiReport r = jacobi_check(m, m.jmin(), 2);
    CHECK_MESSAGE(r.violations.empty(), algebra_name(id));
    CHECK(r.triples_checked > 0);
  }
  const AlgebraModel& m = model(AlgebraId::E38);
  StructureConstants sc = structure_constants(m, m.jmin(), 1);
  int a = -1, b = -1;
  for (int i = 0; i < sc.size() && a < 0; ++i)
    for (int j = 0; j < sc.size(); ++j)
      if (sc.degree[i] == 0 && sc.degree[j] == -1 && sc.has(i, j) && !sc.at(i, j).empty()) {
        a = i;
        b = j;
        break;
      }
  REQUIRE(a >= 0);
  auto& entry = sc.at(a, b);
  entry.begin()->second += Rational(1);
  CHECK_FALSE(jacobi_check(sc).violations.empty());
}

TEST_CASE("E(5,10) odd elements are closed 2-forms, even ones divergence free") {
  const AlgebraModel& m = model(AlgebraId::E510);
  for (int j = m.jmin(); j <= m.jmax(); ++j)
    for (auto& x : m.basis(j)) {
      if (x.parity()) {
        Poly w = form_part(x, Kind::ClosedTwoForm);
        CHECK(form_degree(w) == 2);
        CHECK(ext_d(w).is_zero());
      } else {
        CHECK(divergence(field_part(x)).is_zero());
      }
    }
}

TEST_CASE("E(3,6) into E(5,10) preserves brackets") {
  const AlgebraModel& s = model(AlgebraId::E36);
  AlgebraModel t = build_algebra(AlgebraId::E510, -2, 4);
  SuperElement e = current_element(AlgebraId::E36, Poly(Universe::plain(3), Rational(1)), 0);
  CHECK(embed_e36_in_e510(e) == field(AlgebraId::E510, 4, xvar(5, 3)));
  SuperElement d1 = field(AlgebraId::E36, 0, Poly(Universe::plain(3), Rational(1)));
  CHECK(embed_e36_in_e510(d1) == field(AlgebraId::E510, 0, Poly(Universe::plain(5), Rational(1))));
  long bad = 0;
  for (int i = s.jmin(); i <= 1; ++i)
    for (int j = s.jmin(); j <= 1; ++j)
      for (auto& x : s.basis(i))
        for (auto& y : s.basis(j))
          if (!(embed_e36_in_e510(s.bracket(x, y)) == t.bracket(embed_e36_in_e510(x), embed_e36_in_e510(y)))) ++bad;
  CHECK(bad == 0);
}

TEST_CASE("sharp to flat map") {
  AlgebraModel sharp = build_algebra(AlgebraId::E38, -3, 2);
  const AlgebraModel& flat = model(AlgebraId::E36);
  SuperElement one_plus = sharp.element("d+");
  CHECK(in_sharp_subalgebra(one_plus));
  CHECK(sharp_to_flat(one_plus).is_zero());
  CHECK(sharp_to_flat(sharp.element("d+1")) == flat.element("d+1"));
  std::vector<SuperElement> all;
  for (int j = -3; j <= 1; ++j)
    for (auto& x : sharp_basis(j)) all.push_back(x);
  long bad = 0;
  for (auto& x : all)
    for (auto& y : all) {
      if (x.degree() + y.degree() > 2) continue;
      SuperElement xy = sharp.bracket(x, y);
      if (!in_sharp_subalgebra(xy)) ++bad;
      else if (!(sharp_to_flat(xy) == flat.bracket(sharp_to_flat(x), sharp_to_flat(y)))) ++bad;
    }
  CHECK(bad == 0);
}
