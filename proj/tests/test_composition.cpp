#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exforge/symcomp.hpp"

using namespace exf;

namespace {

SVec lbl(const AlgebraSC& a, const std::string& l) { return SVec::unit(a.index_of(l)); }

// trace equation x^2 - t(x) x + q(x) 1 = 0 on a vector
bool trace_equation(const AlgebraSC& a, const SVec& x) {
  Cyclo t = a.q_polar(x, *a.unit());
  SVec lhs = a.multiply(x, x);
  lhs.axpy(-t, x);
  lhs.axpy(a.q_value(x), *a.unit());
  return lhs.empty();
}

}  // namespace

TEST_CASE("split Cayley table and norm") {
  AlgebraPtr c = build_hurwitz(HurwitzKind::Cayley);
  CHECK(c->multiply(lbl(*c, "u1"), lbl(*c, "v1")) == lbl(*c, "e1"));
  CHECK(c->multiply(lbl(*c, "u1"), lbl(*c, "u2")) == lbl(*c, "v3"));
  CHECK(c->multiply(lbl(*c, "u2"), lbl(*c, "u1")) == -lbl(*c, "v3"));
  CHECK(c->multiply(lbl(*c, "v1"), lbl(*c, "v2")) == -lbl(*c, "u3"));
  CHECK(c->multiply(lbl(*c, "v2"), lbl(*c, "v1")) == lbl(*c, "u3"));
  CHECK(c->check_unital());
  CHECK(c->check_involution());

  std::string w;
  CHECK(norm_multiplicative(*c, &w));
  for (int i = 0; i < 8; ++i) CHECK(trace_equation(*c, SVec::unit(i)));

  // polar values forced by the table: q(e1,e2) = 1, q(u_i,v_i) = -1
  CHECK(c->q_polar(lbl(*c, "e1"), lbl(*c, "e2")) == Cyclo(1));
  CHECK(c->q_polar(lbl(*c, "u1"), lbl(*c, "v1")) == Cyclo(-1));
  CHECK(c->q_value(lbl(*c, "u1") + lbl(*c, "v1")) == Cyclo(-1));
  // x xbar = q(x) 1 across a spanning set
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) {
      SVec x = SVec::unit(i) + SVec::unit(j);
      SVec p = c->multiply(x, c->conj(x));
      SVec expect = *c->unit() * c->q_value(x);
      CHECK(p == expect);
    }
}

TEST_CASE("all four Hurwitz algebras satisfy the laws") {
  for (HurwitzKind k : {HurwitzKind::F, HurwitzKind::K, HurwitzKind::Q, HurwitzKind::Cayley}) {
    AlgebraPtr c = build_hurwitz(k);
    CHECK(c->dim() == hurwitz_dim(k));
    CHECK(c->check_unital());
    CHECK(c->check_involution());
    CHECK(norm_multiplicative(*c));
    for (int i = 0; i < c->dim(); ++i) CHECK(trace_equation(*c, SVec::unit(i)));
  }
  // componentwise product in K
  AlgebraPtr kk = build_hurwitz(HurwitzKind::K);
  CHECK(kk->multiply(lbl(*kk, "e1"), lbl(*kk, "e2")).empty());
}

TEST_CASE("Cayley-Dickson doubling") {
  AlgebraPtr f = build_hurwitz(HurwitzKind::F);
  auto cdf = cayley_dickson(*f, Cyclo(1));
  CHECK(cdf.algebra->dim() == 2);
  CHECK(cdf.hurwitz);
  // (0,1)^2 = (1,0)
  CHECK(cdf.algebra->multiply(SVec::unit(1), SVec::unit(1)) == SVec::unit(0));
  CHECK(check_grading(cdf.z2).ok);

  AlgebraPtr q = build_hurwitz(HurwitzKind::Q);
  auto cdq = cayley_dickson(*q, Cyclo(1));
  CHECK(cdq.algebra->dim() == 8);
  CHECK(cdq.hurwitz);
  CHECK(cdq.algebra->check_unital());
  CHECK(cdq.algebra->check_involution());

  AlgebraPtr c = build_hurwitz(HurwitzKind::Cayley);
  auto cdc = cayley_dickson(*c, Cyclo(1));
  CHECK(cdc.algebra->dim() == 16);
  CHECK(!cdc.hurwitz);  // sedenions: base not associative
  CHECK(!cdc.witness.empty());

  CHECK_THROWS_AS(cayley_dickson(*q, Cyclo(0)), MathError);
}

TEST_CASE("d_{a,b} derivations") {
  AlgebraPtr c = build_hurwitz(HurwitzKind::Cayley);
  SVec one = *c->unit();
  SVec b = lbl(*c, "u2") + lbl(*c, "v3");
  CHECK(derivation_dab(*c, one, b).is_zero());
  CHECK(derivation_dab(*c, b, b).is_zero());

  // Leibniz rule for basis pairs
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      LinOp d = derivation_dab(*c, SVec::unit(i), SVec::unit(j));
      std::string w;
      CHECK(c->is_derivation(d, &w));
    }

  // span of all d_{a,b} has dimension 14 (the derivation algebra g_2)
  RowSpace span(64);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      span.insert(derivation_dab(*c, SVec::unit(i), SVec::unit(j)).flatten());
  CHECK(span.rank() == 14);
}

TEST_CASE("symmetric composition algebras") {
  for (SymKind k : {SymKind::pF, SymKind::pK, SymKind::pQ, SymKind::pC, SymKind::Okubo}) {
    AlgebraPtr s = build_symmetric_composition(k);
    CHECK(s->dim() == sym_dim(k));
    std::string w;
    CHECK_MESSAGE(symcomp_laws(*s, &w), sym_kind_name(k) << ": " << w);
  }

  // pK: e1 * e1 = e2 and e2 * e2 = e1
  AlgebraPtr pk = build_symmetric_composition(SymKind::pK);
  CHECK(pk->multiply(lbl(*pk, "e1"), lbl(*pk, "e1")) == lbl(*pk, "e2"));
  CHECK(pk->multiply(lbl(*pk, "e2"), lbl(*pk, "e2")) == lbl(*pk, "e1"));

  // paraunit law on pC: e * x = x * e = q(e,x) e - x
  AlgebraPtr pc = build_symmetric_composition(SymKind::pC);
  SVec e = pc->component("paraunit")->rows()[0];
  for (int i = 0; i < 8; ++i) {
    SVec x = SVec::unit(i);
    SVec expect = e * pc->q_polar(e, x);
    expect.axpy(Cyclo(-1), x);
    CHECK(pc->multiply(e, x) == expect);
    CHECK(pc->multiply(x, e) == expect);
  }
}

TEST_CASE("composition gradings") {
  AlgebraPtr pc = build_symmetric_composition(SymKind::pC);
  Grading cartan = symcomp_grading(pc, SymKind::pC, "cartan");
  CHECK(check_grading(cartan).ok);
  CHECK(cartan.component(GElem{{1, 0}})->contains(lbl(*pc, "u1")));
  CHECK(cartan.component(GElem{{1, 1}})->contains(lbl(*pc, "v3")));

  Grading z23 = symcomp_grading(pc, SymKind::pC, "z2z2z2");
  CHECK(check_grading(z23).ok);
  CHECK(z23.support_size() == 8);
  for (const auto& [d, s] : z23.comps) CHECK(s.rank() == 1);

  AlgebraPtr pk = build_symmetric_composition(SymKind::pK);
  CHECK(check_grading(symcomp_grading(pk, SymKind::pK, "z3")).ok);
  CHECK(check_grading(symcomp_grading(pk, SymKind::pK, "z2")).ok);

  AlgebraPtr pq = build_symmetric_composition(SymKind::pQ);
  CHECK(check_grading(symcomp_grading(pq, SymKind::pQ, "cartan")).ok);
  CHECK(check_grading(symcomp_grading(pq, SymKind::pQ, "z2z2")).ok);

  AlgebraPtr ok = build_symmetric_composition(SymKind::Okubo);
  Grading okg = symcomp_grading(ok, SymKind::Okubo, "z3z3");
  CHECK(check_grading(okg).ok);
  CHECK(okg.support_size() == 8);
  // component (1,0) spanned by diag(1, w, w^2) = h1 + (1+w) h2 in the fixed
  // basis
  Cyclo w = Cyclo::root_of_unity(1, 3);
  SVec p;
  p.axpy(Cyclo(1), SVec::unit(0));
  p.axpy(Cyclo(1) + w, SVec::unit(1));
  CHECK(okg.component(GElem{{1, 0}})->contains(p));

  // corrupting a Cartan degree is caught with a witness
  Grading bad = cartan;
  for (auto& [d, s] : bad.comps)
    if (d == GElem{{1, 0}}) d = GElem{{2, 0}};
  auto rep = check_grading(bad);
  CHECK(!rep.ok);
  CHECK(!rep.witness.empty());
}
