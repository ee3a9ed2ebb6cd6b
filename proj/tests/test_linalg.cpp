#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "exforge/linalg.hpp"
#include "exforge/snf.hpp"

using namespace exf;

namespace {

SVec sv(std::initializer_list<std::pair<int, long long>> terms) {
  SVec v;
  for (auto [i, c] : terms) v.push(i, Cyclo(c));
  return v;
}

}  // namespace

TEST_CASE("row space echelon is canonical") {
  RowSpace s(4);
  CHECK(s.insert(sv({{0, 2}, {1, 4}})));
  CHECK(s.insert(sv({{1, 1}, {3, 5}})));
  CHECK(!s.insert(sv({{0, 1}, {1, 3}, {3, 5}})));
  CHECK(s.rank() == 2);

  // echelon(echelon(B)) == echelon(B): re-inserting basis changes nothing
  RowSpace t(4);
  for (const auto& r : s.rows()) t.insert(r);
  CHECK(t == s);

  // membership stable under permutation of generators (seeded property)
  std::mt19937_64 rng(99);
  std::vector<SVec> gens = {sv({{0, 1}, {2, 3}}), sv({{1, 2}, {2, 1}}), sv({{0, 1}, {1, 2}, {3, 1}}),
                            sv({{2, 5}}), sv({{0, 3}, {1, 6}, {2, 10}, {3, 1}})};
  RowSpace ref = RowSpace::span(4, gens);
  for (int it = 0; it < 10; ++it) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(RowSpace::span(4, gens) == ref);
  }
}

TEST_CASE("kernel and rank basics") {
  // kernel of the zero operator on a dim-5 space has dim 5
  CHECK(kernel_of(LinOp::zero(5)).rank() == 5);
  // rank of identity on dim-248 space is 248
  LinOp id = LinOp::identity(248);
  CHECK(kernel_of(id).rank() == 0);
  RowSpace img(248);
  for (int j = 0; j < 248; ++j) img.insert(id.col(j));
  CHECK(img.rank() == 248);
}

TEST_CASE("operators") {
  LinOp a(2, 2);
  a.set_entry(0, 0, Cyclo(1));
  a.set_entry(0, 1, Cyclo(2));
  a.set_entry(1, 1, Cyclo(3));
  LinOp b = a.inverse();
  CHECK(a.compose(b) == LinOp::identity(2));
  CHECK(b.compose(a) == LinOp::identity(2));
  CHECK(a.trace() == Cyclo(4));
  CHECK(trace_of_product(a, b) == Cyclo(2));
  LinOp c = a.commutator(b);
  CHECK(c.is_zero());

  auto mp = minimal_polynomial(a);  // eigenvalues 1 and 3
  CHECK(mp.size() == 3);
  CHECK(mp[0] == Cyclo(3));
  CHECK(mp[1] == Cyclo(-4));
  CHECK(mp[2] == Cyclo(1));
}

TEST_CASE("intersection and sum") {
  RowSpace a = RowSpace::span(3, {sv({{0, 1}}), sv({{1, 1}})});
  RowSpace b = RowSpace::span(3, {sv({{1, 1}}), sv({{2, 1}})});
  RowSpace c = a.intersect(b);
  CHECK(c.rank() == 1);
  CHECK(c.contains(sv({{1, 7}})));
  CHECK(a.sum(b).rank() == 3);
}

TEST_CASE("simultaneous eigenspaces") {
  // identity with eigenvalue list [1]: one component, full space
  auto comps = simultaneous_eigenspaces({LinOp::identity(3)}, {{Cyclo(1)}});
  CHECK(comps.size() == 1);
  CHECK(comps[0].space.rank() == 3);

  // diag(1,-1): two 1-dim components
  LinOp d(2, 2);
  d.set_entry(0, 0, Cyclo(1));
  d.set_entry(1, 1, Cyclo(-1));
  comps = simultaneous_eigenspaces({d}, {{Cyclo(1), Cyclo(-1)}});
  CHECK(comps.size() == 2);
  CHECK(comps[0].space.rank() == 1);
  CHECK(comps[1].space.rank() == 1);

  // non-commuting operators rejected
  LinOp x(2, 2), y(2, 2);
  x.set_entry(0, 1, Cyclo(1));
  y.set_entry(1, 0, Cyclo(1));
  CHECK_THROWS_AS(simultaneous_eigenspaces({x, y}, {{Cyclo(0)}, {Cyclo(0)}}), MathError);

  // non-diagonalizable operator rejected (nilpotent Jordan block)
  CHECK_THROWS_AS(simultaneous_eigenspaces({x}, {{Cyclo(0)}}), MathError);

  // order-4 operator over Q(i)
  LinOp rot(2, 2);
  rot.set_entry(0, 1, Cyclo(-1));
  rot.set_entry(1, 0, Cyclo(1));
  Cyclo i = Cyclo::root_of_unity(1, 4);
  comps = simultaneous_eigenspaces({rot}, {{i, -i}});
  CHECK(comps.size() == 2);
  for (auto& ec : comps) CHECK(ec.space.rank() == 1);
}

TEST_CASE("smith normal form") {
  // diag(2,3) -> invariant factors (1,6): hand elimination via the 2x+3y=1
  // basis change
  ZMat m = {{2, 0}, {0, 3}};
  auto r = smith_normal_form(m);
  REQUIRE(r.diag.size() == 2);
  CHECK(r.diag[0] == 1);
  CHECK(r.diag[1] == 6);

  // zero 2x2 matrix: factors (0,0), i.e. Z^2
  auto z = smith_normal_form(ZMat{{0, 0}, {0, 0}});
  CHECK(z.diag[0] == 0);
  CHECK(z.diag[1] == 0);

  // identity_3 -> (1,1,1)
  auto e = smith_normal_form(ZMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(e.diag == std::vector<mpz_class>{1, 1, 1});

  // U*A*V == D reconstruction
  ZMat a = {{4, 6, 2}, {6, 12, 6}, {2, 6, 10}};
  auto s = smith_normal_form(a);
  ZMat d(3, std::vector<mpz_class>(3, 0));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      mpz_class acc = 0;
      for (size_t k = 0; k < 3; ++k)
        for (size_t l = 0; l < 3; ++l) acc += s.left[i][k] * a[k][l] * s.right[l][j];
      d[i][j] = acc;
    }
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(d[i][j] == (i == j ? s.diag[i] : mpz_class(0)));
  for (size_t i = 0; i + 1 < 3; ++i)
    if (s.diag[i] != 0 && s.diag[i + 1] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
}

TEST_CASE("SNF invariant under row/column permutation, seeded") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 8; ++trial) {
    ZMat a(4, std::vector<mpz_class>(5));
    for (auto& row : a)
      for (auto& x : row) x = d(rng);
    auto base = smith_normal_form(a, false).diag;
    ZMat b = a;
    std::shuffle(b.begin(), b.end(), rng);
    for (auto& row : b) std::rotate(row.begin(), row.begin() + 2, row.end());
    CHECK(smith_normal_form(b, false).diag == base);
  }
}
