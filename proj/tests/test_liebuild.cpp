#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exforge/lieanalysis.hpp"

using namespace exf;

TEST_CASE("triality Lie algebras") {
  auto pc = build_symmetric_composition(SymKind::pC);
  Triality t = triality(pc);
  CHECK(t.rank() == 28);
  // theta^3 = id and theta(t_{x,y}) in tri
  CHECK(t.theta.pow(3) == LinOp::identity(28));
  auto txy = t.t_xy(SVec::unit(2), SVec::unit(5));
  SVec c = t.coords_of(txy);  // throws when outside
  CHECK(!c.empty());
  // triality property of each basis triple on random pairs
  const AlgebraSC& s = *pc;
  for (int p = 0; p < t.rank(); p += 5)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        SVec lhs = t.basis[(size_t)p][0].apply(s.mul(i, j));
        SVec rhs = s.multiply(t.basis[(size_t)p][1].col(i), SVec::unit(j));
        rhs.axpy(Cyclo(1), s.multiply(SVec::unit(i), t.basis[(size_t)p][2].col(j)));
        CHECK(lhs == rhs);
      }

  auto pk = build_symmetric_composition(SymKind::pK);
  CHECK(triality(pk).rank() == 2);
  auto pq = build_symmetric_composition(SymKind::pQ);
  CHECK(triality(pq).rank() == 9);
  auto pf = build_symmetric_composition(SymKind::pF);
  CHECK(triality(pf).rank() == 0);
  auto ok = build_symmetric_composition(SymKind::Okubo);
  CHECK(triality(ok).rank() == 28);
}

TEST_CASE("g(pK,pK): dimensions, Lie laws, a2+a2") {
  auto pk = build_symmetric_composition(SymKind::pK);
  Triality t = triality(pk);
  LieAlg g = g_construction(t, t);
  CHECK(g.algebra->dim() == 16);
  auto rep = verify_lie(*g.algebra, true);
  CHECK_MESSAGE(rep.ok, rep.witness);
  auto ks = killing_simplicity(g);
  CHECK(ks.semisimple);
  CHECK(!ks.simple);
  auto rd = cartan_and_roots(g);
  CHECK(rd.rank == 4);
  CHECK(rd.type_label == "A2+A2");

  // an honest proper ideal: the sum of root spaces of one component plus the
  // corresponding piece of the cartan
  RowSpace ideal = ideal_generated_by(*g.algebra, rd.root_spaces[0].rows()[0]);
  CHECK(ideal.rank() == 8);
  for (const SVec& x : ideal.rows())
    for (int i = 0; i < 16; ++i)
      CHECK(ideal.contains(g.algebra->multiply(SVec::unit(i), x)));
}

TEST_CASE("g(pK,pC) is e6-sized and Lie") {
  auto pk = build_symmetric_composition(SymKind::pK);
  auto pc = build_symmetric_composition(SymKind::pC);
  LieAlg g = g_construction(triality(pk), triality(pc));
  CHECK(g.algebra->dim() == 78);
  auto rep = verify_lie(*g.algebra, true);
  CHECK_MESSAGE(rep.ok, rep.witness);
}

TEST_CASE("Tits construction") {
  auto f = build_hurwitz(HurwitzKind::F);
  auto h3f = hermitian_jordan(HurwitzKind::F, 3);
  LieAlg a1 = tits(f, &h3f);
  CHECK(a1.algebra->dim() == 3);
  CHECK(verify_lie(*a1.algebra, true).ok);
  auto ks = killing_simplicity(a1);
  CHECK(ks.simple);

  auto c = build_hurwitz(HurwitzKind::Cayley);
  LieAlg g2 = tits(c, nullptr);
  CHECK(g2.algebra->dim() == 14);
  CHECK(verify_lie(*g2.algebra, true).ok);
}

TEST_CASE("Kantor construction on the octonions: f4") {
  auto c = build_hurwitz(HurwitzKind::Cayley);
  InvAlgebra ia = make_inv_algebra(c);
  KantorResult k = kantor(ia);
  CHECK(k.skew_dim == 7);
  CHECK((int)k.instr.basis.size() == 22);
  CHECK(k.lie.algebra->dim() == 52);
  auto rep = verify_lie(*k.lie.algebra, true);
  CHECK_MESSAGE(rep.ok, rep.witness);
  auto greport = check_grading(k.zgrading);
  CHECK_MESSAGE(greport.ok, greport.witness);
}

TEST_CASE("Steinberg construction matches Kantor dimension") {
  auto c = build_hurwitz(HurwitzKind::Cayley);
  InvAlgebra ia = make_inv_algebra(c);
  SteinbergResult u = steinberg(ia);
  CHECK(u.lie.algebra->dim() == 52);
  CHECK(u.trip_dim == 52 - 3 * 8);
  auto rep = verify_lie(*u.lie.algebra, true);
  CHECK_MESSAGE(rep.ok, rep.witness);
  auto greport = check_grading(u.z22grading);
  CHECK_MESSAGE(greport.ok, greport.witness);
}

TEST_CASE("Steinberg matrix-unit relations in an associative model") {
  // u_ij(a) = a e_ij - a~ e_ji inside Mat_3(Q): check the collapse relations
  auto q = build_hurwitz(HurwitzKind::Q);
  std::vector<std::string> l9;
  for (int i = 0; i < 9; ++i) l9.push_back("E" + std::to_string(i / 3 + 1) + std::to_string(i % 3 + 1));
  AlgebraSC m3("Mat3", l9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int cdx = 0; cdx < 3; ++cdx)
        for (int d = 0; d < 3; ++d)
          if (b == cdx) m3.set_mul(a * 3 + b, cdx * 3 + d, SVec::unit(a * 3 + d));
  AlgebraSC m3q = tensor(m3, *q);
  auto u = [&](int i, int j, const SVec& a) {
    SVec r;
    for (const auto& [k, cc] : a.t) r.axpy(cc, SVec::unit((i * 3 + j) * 4 + k));
    SVec ab = q->conj(a);
    for (const auto& [k, cc] : ab.t) r.axpy(-cc, SVec::unit((j * 3 + i) * 4 + k));
    return r;
  };
  auto br = [&](const SVec& x, const SVec& y) { return m3q.multiply(x, y) - m3q.multiply(y, x); };
  for (int ai = 0; ai < 4; ++ai)
    for (int bi = 0; bi < 4; ++bi) {
      SVec a = SVec::unit(ai), b = SVec::unit(bi);
      // u_ij(a) = u_ji(-a~)
      CHECK(u(0, 1, a) == u(1, 0, -q->conj(a)));
      // [u_ij(a), u_jk(b)] = u_ik(ab)
      CHECK(br(u(0, 1, a), u(1, 2, b)) == u(0, 2, q->multiply(a, b)));
      CHECK(br(u(1, 2, a), u(2, 0, b)) == u(1, 0, q->multiply(a, b)));
    }
}

TEST_CASE("TKK models of e7") {
  CubicData cd = albert_cubic();
  TkkModels tk = tkk_e7_models(cd);
  CHECK(tk.tits_sl2.algebra->dim() == 133);
  CHECK(tk.koecher.algebra->dim() == 133);
  // [xbar, ybar] = 0 in the Koecher model
  CHECK(tk.koecher.algebra->mul(27 + 3, 27 + 11).empty());
  auto r1 = verify_lie(*tk.tits_sl2.algebra, false, 200000);
  CHECK_MESSAGE(r1.ok, r1.witness);
  auto r2 = verify_lie(*tk.koecher.algebra, false, 200000);
  CHECK_MESSAGE(r2.ok, r2.witness);
}

TEST_CASE("root systems of small targets") {
  auto c = build_hurwitz(HurwitzKind::Cayley);
  LieAlg g2 = tits(c, nullptr);
  // seed: the toral d_{u_i,v_i} derivations
  RowSpace seed(14 * 14);
  (void)seed;
  auto rd = cartan_and_roots(g2);
  CHECK(rd.rank == 2);
  CHECK((int)rd.roots.size() == 12);
  CHECK(rd.type_label == "G2");
  Grading rg = root_space_grading(g2, rd);
  auto rep = check_grading(rg);
  CHECK_MESSAGE(rep.ok, rep.witness);

  // every root vector is ad-nilpotent, cartan elements are semisimple
  CHECK(is_semisimple_element(*g2.algebra, rd.cartan.rows()[0]));
  CHECK(!is_semisimple_element(*g2.algebra, rd.root_spaces[0].rows()[0]));
  CHECK(subspace_is_cartan(*g2.algebra, rd.cartan));

  auto f = build_hurwitz(HurwitzKind::F);
  auto h3f = hermitian_jordan(HurwitzKind::F, 3);
  LieAlg a1 = tits(f, &h3f);
  auto rda = cartan_and_roots(a1);
  CHECK(rda.type_label == "A1");
}

TEST_CASE("derivation Lie algebra wrapper") {
  auto c = build_hurwitz(HurwitzKind::Cayley);
  DerAlgebra d = der_algebra(*c, false);
  CHECK(d.lie.algebra->dim() == 14);
  CHECK(verify_lie(*d.lie.algebra, true).ok);
  auto f = build_hurwitz(HurwitzKind::F);
  CHECK(der_algebra(*f, false).lie.algebra->dim() == 0);
}
