#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exforge/jordan.hpp"

using namespace exf;

TEST_CASE("hermitian Jordan algebras: dimensions and laws") {
  auto h4f = hermitian_jordan(HurwitzKind::F, 4);
  CHECK(h4f.algebra->dim() == 10);
  auto albert = hermitian_jordan(HurwitzKind::Cayley, 3);
  CHECK(albert.algebra->dim() == 27);
  auto h4q = hermitian_jordan(HurwitzKind::Q, 4);
  CHECK(h4q.algebra->dim() == 28);
  auto h3f = hermitian_jordan(HurwitzKind::F, 3);
  CHECK(h3f.algebra->dim() == 6);
  CHECK_THROWS_AS(hermitian_jordan(HurwitzKind::Cayley, 4), MathError);

  std::string w;
  CHECK_MESSAGE(jordan_laws(*albert.algebra, &w), w);
  CHECK(jordan_laws(*h4f.algebra, &w));
  CHECK(albert.algebra->check_unital());

  // normalized trace: t(1) = 1 and t((xy)z) = t(x(yz)) on basis triples
  CHECK(albert.t(*albert.algebra->unit()) == Cyclo(1));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 26);
  for (int it = 0; it < 200; ++it) {
    SVec x = SVec::unit(d(rng)), y = SVec::unit(d(rng)), z = SVec::unit(d(rng));
    const AlgebraSC& a = *albert.algebra;
    CHECK(albert.t(a.multiply(a.multiply(x, y), z)) == albert.t(a.multiply(x, a.multiply(y, z))));
  }
}

TEST_CASE("R-operator identity [[Rx,Ry],Rz] = R_{(yz)x - y(zx)}") {
  auto j = hermitian_jordan(HurwitzKind::F, 3);
  const AlgebraSC& a = *j.algebra;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(0, a.dim() - 1);
  for (int it = 0; it < 60; ++it) {
    SVec x = SVec::unit(d(rng)), y = SVec::unit(d(rng)), z = SVec::unit(d(rng));
    LinOp lhs = a.left_mult(x).commutator(a.left_mult(y)).commutator(a.left_mult(z));
    SVec arg = a.multiply(a.multiply(y, z), x) - a.multiply(y, a.multiply(z, x));
    CHECK(lhs == a.left_mult(arg));
  }
}

TEST_CASE("Albert derivations and structure algebras") {
  auto albert = hermitian_jordan(HurwitzKind::Cayley, 3);
  auto di = der_and_inner_structure(albert);
  CHECK(di.der.rank() == 52);
  CHECK(di.inner.rank() == 78);
  CHECK(di.structure.rank() == 79);
  // [R_J, R_J] <= Der
  const AlgebraSC& a = *albert.algebra;
  for (int i = 0; i < 6; ++i) {
    SVec f = a.left_mult(SVec::unit(i)).commutator(a.left_mult(SVec::unit(i + 7))).flatten();
    CHECK(di.der.contains(f));
    CHECK(di.inner.contains(f));
  }
  // closure of inner under brackets (sampled)
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, di.inner.rank() - 1);
  for (int it = 0; it < 20; ++it) {
    LinOp x = LinOp::unflatten(di.inner.rows()[(size_t)d(rng)], 27, 27);
    LinOp y = LinOp::unflatten(di.inner.rows()[(size_t)d(rng)], 27, 27);
    CHECK(di.inner.contains(x.commutator(y).flatten()));
  }
}

TEST_CASE("Albert cubic form") {
  CubicData cd = albert_cubic();
  const AlgebraSC& a = *cd.albert.algebra;
  SVec one = *a.unit();
  CHECK(cd.Tval(one) == Cyclo(3));
  CHECK(cd.Q(one) == Cyclo(3));
  CHECK(cd.N(one) == Cyclo(1));
  // 1 - 3 + 3 - 1 = 0 is the cubic equation at x = 1

  // rank-1 idempotent diag(1,0,0): N = 0
  CHECK(cd.N(SVec::unit(0)) == Cyclo(0));

  // cubic equation on a spanning family
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 26);
  std::uniform_int_distribution<long long> coef(-3, 3);
  auto check_cubic = [&](const SVec& x) {
    SVec x2 = a.multiply(x, x);
    SVec x3 = a.multiply(x2, x);
    SVec lhs = x3;
    lhs.axpy(-cd.Tval(x), x2);
    lhs.axpy(cd.Q(x), x);
    lhs.axpy(-cd.N(x), one);
    CHECK(lhs.empty());
  };
  for (int i = 0; i < 27; ++i) check_cubic(SVec::unit(i));
  for (int it = 0; it < 40; ++it) {
    SVec x;
    for (int k = 0; k < 4; ++k) x.axpy(Cyclo(coef(rng)), SVec::unit(d(rng)));
    check_cubic(x);
  }

  // N3 totally symmetric on random triples
  for (int it = 0; it < 30; ++it) {
    SVec x = SVec::unit(d(rng)), y = SVec::unit(d(rng)), z = SVec::unit(d(rng));
    Cyclo v = cd.N3(x, y, z);
    CHECK(v == cd.N3(y, x, z));
    CHECK(v == cd.N3(z, y, x));
  }

  // cross product duality T(x X y, z) = N3(x,y,z)
  for (int it = 0; it < 20; ++it) {
    SVec x = SVec::unit(d(rng)), y = SVec::unit(d(rng)), z = SVec::unit(d(rng));
    CHECK(cd.T2val(cd.cross(x, y), z) == cd.N3(x, y, z));
  }
}

TEST_CASE("e6 as the annihilator of the cubic norm") {
  CubicData cd = albert_cubic();
  RowSpace ann = e6_norm_annihilator(cd);
  CHECK(ann.rank() == 78);
  auto di = der_and_inner_structure(cd.albert);
  // equals the inner structure algebra as canonical subspaces
  CHECK(ann == di.inner);
  const AlgebraSC& a = *cd.albert.algebra;
  // contains [R_x, R_y]
  CHECK(ann.contains(a.left_mult(SVec::unit(3)).commutator(a.left_mult(SVec::unit(9))).flatten()));
  // contains R_x for traceless x but not R_1
  CHECK(ann.contains(a.left_mult(SVec::unit(0) - SVec::unit(1)).flatten()));
  CHECK(!ann.contains(a.left_mult(*a.unit()).flatten()));
}

TEST_CASE("H_4 gradings, section 3.4 models") {
  // fine gradings
  {
    auto gf = jordan4_grading(HurwitzKind::F, "fine");
    CHECK(gf.jordan.algebra->dim() == 10);
    CHECK(jordan_laws(*gf.jordan.algebra));
    auto rep = check_grading(gf.grading);
    CHECK_MESSAGE(rep.ok, rep.witness);
    CHECK(type_of(gf.grading) == std::vector<long long>{10});
    // deg(q1 (x) q2) = (1,0,0,1)
    const RowSpace* comp = gf.grading.component(GElem{{1, 0, 0, 1}});
    REQUIRE(comp != nullptr);
    CHECK(comp->rank() == 1);
  }
  {
    auto gk = jordan4_grading(HurwitzKind::K, "fine");
    CHECK(gk.jordan.algebra->dim() == 16);
    CHECK(jordan_laws(*gk.jordan.algebra));
    auto rep = check_grading(gk.grading);
    CHECK_MESSAGE(rep.ok, rep.witness);
    CHECK(type_of(gk.grading) == std::vector<long long>{16});
  }
  {
    auto gq = jordan4_grading(HurwitzKind::Q, "fine");
    CHECK(gq.jordan.algebra->dim() == 28);
    CHECK(jordan_laws(*gq.jordan.algebra));
    auto rep = check_grading(gq.grading);
    CHECK_MESSAGE(rep.ok, rep.witness);
    CHECK(type_of(gq.grading) == std::vector<long long>{28});
  }
  // mixed gradings
  for (HurwitzKind k : {HurwitzKind::F, HurwitzKind::K, HurwitzKind::Q}) {
    auto gm = jordan4_grading(k, "mixed");
    CHECK(jordan_laws(*gm.jordan.algebra));
    auto rep = check_grading(gm.grading);
    CHECK_MESSAGE(rep.ok, rep.witness);
    CHECK(gm.grading.group.free_rank == 1);
  }
}

TEST_CASE("graded division algebra machinery for H_4(Q)") {
  auto gd = graded_division_grading_h4q();
  CHECK(gd.jordan.jordan.algebra->dim() == 28);
  CHECK(jordan_laws(*gd.jordan.jordan.algebra));
  auto rep = check_grading(gd.jordan.grading);
  CHECK_MESSAGE(rep.ok, rep.witness);
  CHECK(type_of(gd.jordan.grading) == std::vector<long long>{24, 2});

  CHECK(gd.skew_lie->dim() == 36);
  auto rep2 = check_grading(gd.skew_grading);
  CHECK_MESSAGE(rep2.ok, rep2.witness);
  CHECK(type_of(gd.skew_grading) == std::vector<long long>{24, 6});

  // H_{(0,0)} of (Mat2(Q), *) is 2-dimensional: visible as the two-dim
  // component at inner degree (0,0), outer degree (0,0)
  const RowSpace* c = gd.jordan.grading.component(GElem{{0, 0, 0, 0}});
  REQUIRE(c != nullptr);
  CHECK(c->rank() == 2);

  // independent cross-check of the c4 claim: Der(H_4(Q)) has dim 36
  auto h4q = hermitian_jordan(HurwitzKind::Q, 4);
  CHECK(derivation_space(*h4q.algebra, false).rank() == 36);
}
