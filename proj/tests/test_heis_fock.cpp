#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/heis.hpp"
#include "kr/superalg.hpp"

using namespace kr;

namespace {

HeisOp q(int mode) { return HeisOp::gen(heis_q(mode)); }
HeisOp p(int mode) { return HeisOp::gen(heis_p(mode)); }
HeisOp qp(int mode) { return heis_mul(q(mode), p(mode)); }

const Lagrangian kTags[] = {Lagrangian::A, Lagrangian::B, Lagrangian::C, Lagrangian::D};

// Weyl dimension of sl3 (p, q) times sl2 (r).
long weyl_g0(int a, int b, int r) { return (a + 1L) * (b + 1L) * (a + b + 2L) / 2 * (r + 1L); }

const AlgebraModel& model(AlgebraId id) {
  static std::map<AlgebraId, AlgebraModel> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, build_algebra(id, algebra_depth(id), 1)).first;
  return it->second;
}

std::vector<FockVector> monomials_upto(Lagrangian X, int deg) {
  std::vector<FockVector> out;
  for (int k = 0; k <= deg; ++k)
    for (auto& m : monomials_of_degree(kModes, k)) {
      Monomial mm;
      for (int i = 0; i < kModes; ++i) mm.e[static_cast<size_t>(i)] = static_cast<uint8_t>(m.deg(i));
      out.push_back(FockVector::monomial(X, mm));
    }
  return out;
}

}  // namespace

TEST_CASE("canonical commutation relations") {
  CHECK(heis_commutator(p(0), q(0)) == HeisOp(Rational(1)));
  CHECK(heis_mul(p(3), q(3)) == heis_mul(q(3), p(3)) + HeisOp(Rational(1)));
  CHECK(heis_commutator(q(0), q(1)).is_zero());
  CHECK(heis_commutator(p(1), q(2)).is_zero());
  CHECK(heis_mul(q(0), q(1)) == heis_mul(q(1), q(0)));
}

TEST_CASE("Fock modules") {
  FockVector a = FockVector::vacuum(Lagrangian::A);
  FockVector x1a = fock_apply(q(0), a);
  Monomial m1;
  m1.e[0] = 1;
  CHECK(x1a == FockVector::monomial(Lagrangian::A, m1));
  CHECK(fock_apply(p(0), x1a) == a);
  CHECK(fock_apply(p(0), a).is_zero());
  FockVector b = FockVector::vacuum(Lagrangian::B);
  FockVector minus_b = b;
  minus_b *= Rational(-1);
  CHECK(fock_apply(qp(3), b) == minus_b);
  CHECK(fock_apply(qp(4), b) == minus_b);
}

TEST_CASE("Fock action is a representation of the Heisenberg algebra") {
  long bad = 0;
  for (Lagrangian X : kTags)
    for (auto& v : monomials_upto(X, 3))
      for (int g = 0; g < 2 * kModes; ++g)
        for (int h = 0; h < 2 * kModes; ++h) {
          HeisOp a = HeisOp::gen(g), b = HeisOp::gen(h);
          if (!(fock_apply(heis_mul(a, b), v) == fock_apply(a, fock_apply(b, v)))) ++bad;
        }
  CHECK(bad == 0);
}

TEST_CASE("Y operators") {
  HeisOp sharp, flat;
  for (int i = 0; i < 3; ++i) {
    sharp += rat(-4, 3) * qp(i);
    flat += rat(2, 3) * qp(i);
  }
  for (int a = 3; a < 5; ++a) {
    sharp += qp(a);
    flat -= qp(a);
  }
  CHECK(y_operator(Flavor::Sharp) == sharp);
  CHECK(y_operator(Flavor::Flat) == flat);
  const Rational flat_vacuum[] = {Rational(0), Rational(2), Rational(-2), Rational(0)};
  for (int k = 0; k < 4; ++k) {
    FockVector v = FockVector::vacuum(kTags[k]), w = v;
    w *= flat_vacuum[k];
    CHECK(fock_apply(y_operator(Flavor::Flat), v) == w);
  }
}

TEST_CASE("g0 embeddings are Lie homomorphisms") {
  for (auto [id, flavor] : {std::pair{AlgebraId::E38, Flavor::Sharp}, std::pair{AlgebraId::E36, Flavor::Flat}}) {
    const AlgebraModel& m = model(id);
    long bad = 0;
    for (auto& x : m.basis(0))
      for (auto& y : m.basis(0))
        if (!(heis_commutator(g0_embed(x, flavor), g0_embed(y, flavor)) == g0_embed(m.bracket(x, y), flavor))) ++bad;
    CHECK_MESSAGE(bad == 0, algebra_name(id));
  }
  const AlgebraModel& m = model(AlgebraId::E38);
  SuperElement hs = rat(2, 3) * m.element("h1") + rat(1, 3) * m.element("h2") - rat(1, 2) * m.element("h3") + rat(1, 2) * m.element("Y");
  HeisOp img = g0_embed(hs, Flavor::Sharp);
  HeisOp expect = qp(0) - qp(3);
  HeisOp rest = img - expect;
  // The remainder commutes with all of g0.
  for (auto& x : m.basis(0)) CHECK(heis_commutator(rest, g0_embed(x, Flavor::Sharp)).is_zero());
}

TEST_CASE("dimensions of g0 irreducibles") {
  CHECK(dim_irrep_g0(0, 0, 0) == 1);
  CHECK(dim_irrep_g0(1, 0, 1) == 6);
  CHECK(dim_irrep_g0(1, 1, 0) == 8);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int r = 0; r <= 4; ++r) CHECK(dim_irrep_g0(a, b, r) == weyl_g0(a, b, r));
}

TEST_CASE("Y-eigenvalues of highest weight vectors") {
  CHECK(theorem_y(Lagrangian::A, 1, 0) == rat(-4, 3));
  CHECK(theorem_y(Lagrangian::C, 0, 0) == Rational(4));
  CHECK(theorem_y(Lagrangian::B, 0, 1) == Rational(-3));
}

TEST_CASE("weight blocks are irreducible with the predicted Y-eigenvalue") {
  const AlgebraModel& m = model(AlgebraId::E38);
  std::vector<HeisOp> raising;
  for (const char* e : {"e1", "e2", "e3", "e12"}) raising.push_back(g0_embed(m.element(e), Flavor::Sharp));
  HeisOp Y = y_operator(Flavor::Sharp);
  int blocks = 0;
  for (Lagrangian X : kTags)
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b) {
        FockBlock B;
        try {
          B = weight_block(X, a, b);
        } catch (const std::exception&) {
          continue;
        }
        ++blocks;
        int pq = B.label.type == Lagrangian::A || B.label.type == Lagrangian::B ? B.label.p : B.label.q;
        CHECK(B.dim() == weyl_g0(B.label.p, B.label.q, B.label.r));
        SparseMatrix R(static_cast<int>(raising.size()) * B.dim(), B.dim());
        for (int c = 0; c < B.dim(); ++c) {
          FockVector v = FockVector::monomial(X, B.basis[static_cast<size_t>(c)]);
          for (size_t k = 0; k < raising.size(); ++k)
            for (auto& [r, val] : B.coords(fock_apply(raising[k], v))) R.set(static_cast<int>(k) * B.dim() + r, c, val);
          FockVector yv = v;
          yv *= theorem_y(X, pq, B.label.r);
          CHECK(fock_apply(Y, v) == yv);
        }
        CHECK(B.dim() - rank_of(R) == 1);
      }
  CHECK(blocks == 4 * 25);
  CHECK_THROWS(weight_block(Lagrangian::A, -1, 0));
}
