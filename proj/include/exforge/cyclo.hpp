#ifndef EXFORGE_CYCLO_HPP
#define EXFORGE_CYCLO_HPP

#include <vector>
#include <string>
#include <iosfwd>

#include "exforge/rat.hpp"

namespace exf {

/// Elements of the cyclotomic fields Q(zeta_N), N up to a configurable bound
/// (default 120 = lcm(3,4,5,8), enough for every root of unity used here).
///
/// An element carries its own order N and phi(N) coordinates in the power
/// basis zeta^0..zeta^{phi(N)-1}, reduced modulo the N-th cyclotomic
/// polynomial. Binary operations lift both operands to the lcm order.
/// Elements whose coordinates are rational are normalized back to order 1,
/// which keeps plain-Q computations (the bulk of the project) on the fast
/// path.
class Cyclo {
public:
  Cyclo() : ord_(1), c_(1) {}
  Cyclo(const Rat& r) : ord_(1), c_(1) { c_[0] = r; }
  Cyclo(long long n) : ord_(1), c_(1) { c_[0] = Rat(n); }
  Cyclo(int n) : ord_(1), c_(1) { c_[0] = Rat(n); }
  /// From explicit coordinates (length must be phi(order)).
  Cyclo(int order, std::vector<Rat> coords);

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(1); }
  /// zeta_N^k in canonical form.
  static Cyclo root_of_unity(long long k, int n);

  int order() const { return ord_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return is_rational() && c_[0].is_one(); }
  bool is_rational() const;
  Rat rational_value() const;  // throws if not rational

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { a += b; return a; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { a -= b; return a; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { a *= b; return a; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { a /= b; return a; }

  Cyclo inv() const;
  Cyclo pow(long long e) const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  Cyclo conj() const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  /// Re-express at a larger order M (ord_ must divide M).
  Cyclo lifted(int m) const;

  /// Multiplicative order when the element is a root of unity, else 0.
  long long unity_order() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclo& z);

  /// Global maximum admissible order (explicit error beyond).
  static int max_order();
  static void set_max_order(int n);

private:
  int ord_;
  std::vector<Rat> c_;

  void normalize();  // drop to order 1 when rational
};

int euler_phi(int n);
/// Coefficients of the N-th cyclotomic polynomial (monic, degree phi(N)).
const std::vector<Rat>& cyclotomic_polynomial(int n);

}  // namespace exf

#endif
