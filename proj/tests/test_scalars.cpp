#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exforge/cyclo.hpp"

using namespace exf;

TEST_CASE("rational fast path and promotion") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK((a - b) == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK((-a).str() == "-1/3");
  CHECK(Rat(4, -6) == Rat(-2, 3));

  // force promotion past int64 and back down
  Rat big(1);
  for (int i = 0; i < 50; ++i) big *= Rat(1000000007);
  CHECK(!big.is_small());
  Rat inv = big.inv();
  CHECK(big * inv == Rat(1));
  Rat down = big;
  for (int i = 0; i < 50; ++i) down /= Rat(1000000007);
  CHECK(down == Rat(1));
  CHECK(down.is_small());

  CHECK_THROWS_AS(Rat(1) / Rat(0), MathError);
  CHECK(Rat::from_string("-7/21") == Rat(-1, 3));
}

TEST_CASE("rational field axioms, randomized") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long long> d(-40, 40);
  auto r = [&]() {
    long long den = 0;
    while (den == 0) den = d(rng);
    return Rat(d(rng), den);
  };
  for (int k = 0; k < 300; ++k) {
    Rat a = r(), b = r(), c = r();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Rat(1));
  }
}

TEST_CASE("cyclotomic basics") {
  Cyclo omega = Cyclo::root_of_unity(1, 3);
  Cyclo omega2 = Cyclo::root_of_unity(2, 3);
  CHECK(omega + omega2 == Cyclo(-1));          // root of Phi_3
  Cyclo i = Cyclo::root_of_unity(1, 4);
  CHECK(i * i == Cyclo(-1));                   // defining relation
  // (omega - omega^2)^2 = -3, via omega^2 = -1-omega
  Cyclo d = omega - omega2;
  CHECK(d * d == Cyclo(-3));

  CHECK(Cyclo::root_of_unity(0, 1) == Cyclo(1));
  Cyclo z8 = Cyclo::root_of_unity(1, 8);
  CHECK(z8 * z8 == Cyclo::root_of_unity(1, 4));
  CHECK(z8.pow(8) == Cyclo(1));
  CHECK(i.pow(4) == Cyclo(1));

  CHECK(Cyclo::root_of_unity(2, 8).unity_order() == 4);
  CHECK(Cyclo::root_of_unity(3, 8).unity_order() == 8);
  CHECK(Cyclo::root_of_unity(0, 5).unity_order() == 1);
}

TEST_CASE("Phi_N vanishes at zeta_N for all supported orders") {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 105, 120}) {
    Cyclo z = Cyclo::root_of_unity(1, n);
    const auto& phi = cyclotomic_polynomial(n);
    Cyclo acc(0);
    for (size_t k = 0; k < phi.size(); ++k) acc += Cyclo(phi[k]) * z.pow((long long)k);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("cyclotomic field ops and order lifting") {
  Cyclo omega = Cyclo::root_of_unity(1, 3);
  Cyclo i = Cyclo::root_of_unity(1, 4);
  Cyclo x = omega + i;  // lives in Q(zeta_12)
  CHECK(x.order() == 12);
  CHECK(x - i == omega);
  CHECK((x * x - (omega * omega + Cyclo(2) * omega * i + i * i)).is_zero());

  // lift-then-compute equals compute-then-lift
  Cyclo a = omega * Cyclo(Rat(2, 5)) + Cyclo(1);
  Cyclo b = i - Cyclo(Rat(1, 3));
  Cyclo direct = a * b;
  Cyclo lifted = a.lifted(12) * b.lifted(12);
  CHECK(direct == lifted);

  CHECK(a * a.inv() == Cyclo(1));
  CHECK_THROWS_AS(Cyclo(0).inv(), MathError);
  CHECK_THROWS_AS(Cyclo::root_of_unity(1, 121), MathError);

  CHECK(omega.conj() == omega * omega);
  CHECK(i.conj() == -i);
  CHECK((omega * i).conj() == omega.conj() * i.conj());
}

TEST_CASE("cyclotomic randomized axioms") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long long> d(-5, 5);
  auto rc = [&](int ord) {
    Cyclo z = Cyclo::root_of_unity(1, ord);
    Cyclo acc(0);
    for (int k = 0; k < euler_phi(ord); ++k) acc += z.pow(k) * Cyclo(Rat(d(rng), 3));
    return acc;
  };
  for (int k = 0; k < 40; ++k) {
    Cyclo a = rc(8), b = rc(12), c = rc(3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Cyclo(1));
  }
}
