#ifndef EXFORGE_RAT_HPP
#define EXFORGE_RAT_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <iosfwd>

#include <gmpxx.h>

namespace exf {

/// Error type for all exact-arithmetic failures (division by zero,
/// unsupported field orders, inconsistent systems).
class MathError : public std::runtime_error {
public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational number.
///
/// Values that fit in a reduced int64 fraction are kept inline; anything
/// larger transparently promotes to a heap-allocated GMP rational. All
/// structure constants in this project are tiny, so the inline path carries
/// almost all of the load; eliminations that blow up mid-computation spill
/// into GMP and come back down when they re-reduce.
class Rat {
public:
  Rat() : n_(0), d_(1) {}
  Rat(long long n) : n_(n), d_(1) {}
  Rat(int n) : n_(n), d_(1) {}
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q) { set_mpq(q); }

  Rat(const Rat& o);
  Rat(Rat&& o) noexcept = default;
  Rat& operator=(const Rat& o);
  Rat& operator=(Rat&& o) noexcept = default;

  static Rat from_string(const std::string& s);  // "p" or "p/q"

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : n_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (n_ == 1 && d_ == 1); }
  bool is_integer() const;
  bool is_small() const { return !big_; }

  /// Numerator/denominator as int64; throws if promoted to GMP.
  long long num_small() const;
  long long den_small() const;

  mpq_class to_mpq() const;
  long long to_int64() const;  // requires integer value fitting int64
  double to_double() const;
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  Rat inv() const;

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  /// Sign of the value: -1, 0, 1.
  int sign() const;
  /// Three-way compare by value.
  int cmp(const Rat& o) const;
  bool operator<(const Rat& o) const { return cmp(o) < 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
  long long n_, d_;               // reduced, d_ > 0; valid iff !big_
  std::unique_ptr<mpq_class> big_;

  void set_mpq(const mpq_class& q);            // canonicalizes, demotes if possible
  static Rat make128(__int128 num, __int128 den);
  friend struct RatOps;
};

}  // namespace exf

#endif
