#include "exforge/rat.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace exf {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= INT64_MIN && v <= INT64_MAX;
}

mpz_class mpz_from128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  mpz_class hi((unsigned long)(u >> 64));
  mpz_class lo((unsigned long)(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw MathError("rational with zero denominator");
  *this = make128((__int128)n, (__int128)d);
}

Rat::Rat(const Rat& o) : n_(o.n_), d_(o.d_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rat& Rat::operator=(const Rat& o) {
  if (this == &o) return *this;
  n_ = o.n_;
  d_ = o.d_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

Rat Rat::make128(__int128 num, __int128 den) {
  if (den == 0) throw MathError("rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  __int128 g = gcd128(num, den);
  if (g > 1) { num /= g; den /= g; }
  Rat r;
  if (fits64(num) && fits64(den)) {
    r.n_ = (long long)num;
    r.d_ = (long long)den;
  } else {
    r.big_ = std::make_unique<mpq_class>();
    mpq_class q(mpz_from128(num));
    q /= mpq_class(mpz_from128(den));
    *r.big_ = q;
  }
  return r;
}

void Rat::set_mpq(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    n_ = c.get_num().get_si();
    d_ = c.get_den().get_si();
    big_.reset();
  } else {
    n_ = 0;
    d_ = 1;
    big_ = std::make_unique<mpq_class>(c);
  }
}

Rat Rat::from_string(const std::string& s) {
  auto slash = s.find('/');
  mpq_class q(s, 10);
  q.canonicalize();
  (void)slash;
  Rat r;
  r.set_mpq(q);
  return r;
}

bool Rat::is_integer() const {
  return big_ ? big_->get_den() == 1 : d_ == 1;
}

long long Rat::num_small() const {
  if (big_) throw MathError("rational too large for int64 numerator");
  return n_;
}

long long Rat::den_small() const {
  if (big_) throw MathError("rational too large for int64 denominator");
  return d_;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q((long)n_, (long)d_);
  q.canonicalize();
  return q;
}

long long Rat::to_int64() const {
  if (!is_integer()) throw MathError("not an integer: " + str());
  if (big_) {
    if (!big_->get_num().fits_slong_p()) throw MathError("integer overflows int64");
    return big_->get_num().get_si();
  }
  return n_;
}

double Rat::to_double() const {
  return big_ ? big_->get_d() : double(n_) / double(d_);
}

std::string Rat::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  if (r.is_small()) {
    os << r.num_small();
    if (r.den_small() != 1) os << '/' << r.den_small();
  } else {
    os << r.to_mpq().get_str();
  }
  return os;
}

Rat Rat::operator-() const {
  if (!big_) {
    Rat r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
  }
  Rat r;
  r.big_ = std::make_unique<mpq_class>(-*big_);
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (n_ == 0) { *this = o; return *this; }
    if (o.n_ == 0) return *this;
    __int128 num = (__int128)n_ * o.d_ + (__int128)o.n_ * d_;
    __int128 den = (__int128)d_ * o.d_;
    *this = make128(num, den);
    return *this;
  }
  set_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (o.n_ == 0) return *this;
    __int128 num = (__int128)n_ * o.d_ - (__int128)o.n_ * d_;
    __int128 den = (__int128)d_ * o.d_;
    *this = make128(num, den);
    return *this;
  }
  set_mpq(to_mpq() - o.to_mpq());
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (n_ == 0 || o.n_ == 0) { n_ = 0; d_ = 1; return *this; }
    __int128 num = (__int128)n_ * o.n_;
    __int128 den = (__int128)d_ * o.d_;
    *this = make128(num, den);
    return *this;
  }
  set_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (!big_ && !o.big_) {
    __int128 num = (__int128)n_ * o.d_;
    __int128 den = (__int128)d_ * o.n_;
    *this = make128(num, den);
    return *this;
  }
  set_mpq(to_mpq() / o.to_mpq());
  return *this;
}

Rat Rat::inv() const {
  if (is_zero()) throw MathError("inverse of zero");
  if (!big_) {
    Rat r;
    r.n_ = d_;
    r.d_ = n_;
    if (r.d_ < 0) { r.n_ = -r.n_; r.d_ = -r.d_; }
    return r;
  }
  Rat r;
  r.set_mpq(1 / *big_);
  return r;
}

bool Rat::operator==(const Rat& o) const {
  if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
  return to_mpq() == o.to_mpq();
}

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

int Rat::cmp(const Rat& o) const {
  if (!big_ && !o.big_) {
    __int128 l = (__int128)n_ * o.d_;
    __int128 r = (__int128)o.n_ * d_;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  return ::cmp(to_mpq(), o.to_mpq());
}

}  // namespace exf
