#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exforge/algebra.hpp"
#include "exforge/hurwitz.hpp"

using namespace exf;

TEST_CASE("matrix units in Mat_2") {
  AlgebraPtr q = build_hurwitz(HurwitzKind::Q);
  // E11 * E12 = E12 under the e1->E11, u1->E12 identification
  SVec p = q->multiply(SVec::unit(q->index_of("e1")), SVec::unit(q->index_of("u1")));
  CHECK(p == SVec::unit(q->index_of("u1")));
  CHECK(q->check_unital());
  CHECK(q->check_involution());
}

TEST_CASE("tensor products") {
  AlgebraPtr f = build_hurwitz(HurwitzKind::F);
  AlgebraPtr c = build_hurwitz(HurwitzKind::Cayley);
  AlgebraSC fc = tensor(*f, *c);
  // F (x) C has the same structure constants as C under the label map
  CHECK(fc.dim() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(fc.mul(i, j) == c->mul(i, j));

  AlgebraPtr qa = build_hurwitz(HurwitzKind::Q);
  AlgebraSC qc = tensor(*qa, *c);
  CHECK(qc.dim() == 32);
  CHECK(qc.check_unital());
  CHECK(qc.check_involution());

  AlgebraSC qq = tensor(*qa, *qa);
  CHECK(qq.dim() == 16);
  CHECK(qq.check_unital());
}

TEST_CASE("left and right multiplication operators") {
  AlgebraPtr c = build_hurwitz(HurwitzKind::Cayley);
  SVec u1 = SVec::unit(c->index_of("u1"));
  SVec v1 = SVec::unit(c->index_of("v1"));
  LinOp l = c->left_mult(u1);
  CHECK(l.apply(v1) == SVec::unit(c->index_of("e1")));
  LinOp r = c->right_mult(u1);
  CHECK(r.apply(v1) == SVec::unit(c->index_of("e2")));
}
