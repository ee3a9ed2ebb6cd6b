#include "exforge/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace exf {

namespace {

std::atomic<int> g_max_order{120};

// Polynomials over Q as coefficient vectors, low degree first.
using Poly = std::vector<Rat>;

int pdeg(const Poly& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

Poly pmul(const Poly& a, const Poly& b) {
  int da = pdeg(a), db = pdeg(b);
  if (da < 0 || db < 0) return {Rat(0)};
  Poly r(da + db + 1, Rat(0));
  for (int i = 0; i <= da; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// Exact division, remainder must be zero unless rem != nullptr.
Poly pdivmod(Poly num, const Poly& den, Poly* rem) {
  int dd = pdeg(den);
  if (dd < 0) throw MathError("polynomial division by zero");
  Poly q(std::max(0, pdeg(num) - dd + 1), Rat(0));
  Rat lead = den[dd];
  for (int dn = pdeg(num); dn >= dd; dn = pdeg(num)) {
    Rat f = num[dn] / lead;
    q[dn - dd] = f;
    for (int i = 0; i <= dd; ++i) num[dn - dd + i] -= f * den[i];
  }
  if (rem) {
    *rem = num;
  } else if (pdeg(num) >= 0) {
    throw MathError("non-exact polynomial division");
  }
  return q;
}

struct CycloContext {
  int n = 1;
  int phi = 1;
  Poly minpoly;                        // Phi_n
  std::vector<std::vector<Rat>> powr;  // x^k mod Phi_n, k in [0, n)

  explicit CycloContext(int order);
};

std::map<int, std::unique_ptr<CycloContext>> g_ctx;
std::mutex g_ctx_mu;

const CycloContext& ctx(int n) {
  if (n < 1) throw MathError("cyclotomic order must be positive");
  if (n > g_max_order.load())
    throw MathError("cyclotomic order " + std::to_string(n) + " exceeds maximum " +
                    std::to_string(g_max_order.load()));
  std::lock_guard<std::mutex> lk(g_ctx_mu);
  auto it = g_ctx.find(n);
  if (it == g_ctx.end())
    it = g_ctx.emplace(n, std::make_unique<CycloContext>(n)).first;
  return *it->second;
}

Poly cyclotomic_poly_impl(int n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  Poly num(n + 1, Rat(0));
  num[0] = Rat(-1);
  num[n] = Rat(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly phid = cyclotomic_poly_impl(d);
    num = pdivmod(num, phid, nullptr);
  }
  return num;
}

CycloContext::CycloContext(int order) : n(order) {
  minpoly = cyclotomic_poly_impl(n);
  phi = pdeg(minpoly);
  powr.resize(n);
  // x^k for k < phi is itself; higher powers reduce by the minimal polynomial:
  // x^phi = -(minpoly minus leading term).
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> v(phi, Rat(0));
    if (k < phi) {
      v[k] = Rat(1);
    } else {
      const std::vector<Rat>& prev = powr[k - 1];
      // multiply previous by x, reduce
      std::vector<Rat> shifted(phi, Rat(0));
      Rat top = prev[phi - 1];
      for (int i = phi - 1; i >= 1; --i) shifted[i] = prev[i - 1];
      if (!top.is_zero()) {
        for (int i = 0; i < phi; ++i) shifted[i] -= top * minpoly[i];
      }
      v = shifted;
    }
    powr[k] = std::move(v);
  }
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rat>& cyclotomic_polynomial(int n) {
  return ctx(n).minpoly;
}

int Cyclo::max_order() { return g_max_order.load(); }

void Cyclo::set_max_order(int n) {
  if (n < 1) throw MathError("max cyclotomic order must be positive");
  g_max_order.store(n);
}

Cyclo::Cyclo(int order, std::vector<Rat> coords) : ord_(order), c_(std::move(coords)) {
  const CycloContext& c = ctx(order);
  if ((int)c_.size() != c.phi)
    throw MathError("cyclotomic coordinate vector has wrong length");
  normalize();
}

Cyclo Cyclo::root_of_unity(long long k, int n) {
  const CycloContext& cc = ctx(n);
  long long kk = ((k % n) + n) % n;
  Cyclo z;
  z.ord_ = n;
  z.c_ = cc.powr[(size_t)kk];
  z.normalize();
  return z;
}

bool Cyclo::is_zero() const {
  for (const Rat& r : c_)
    if (!r.is_zero()) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw MathError("element is not rational: " + str());
  return c_[0];
}

void Cyclo::normalize() {
  if (ord_ != 1 && is_rational()) {
    Rat v = c_[0];
    ord_ = 1;
    c_.assign(1, v);
  }
}

Cyclo Cyclo::lifted(int m) const {
  if (m == ord_) return *this;
  if (m % ord_ != 0) throw MathError("lift target order not a multiple");
  const CycloContext& cm = ctx(m);
  int step = m / ord_;
  Cyclo r;
  r.ord_ = m;
  r.c_.assign(cm.phi, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const std::vector<Rat>& pw = cm.powr[(k * step) % m];
    for (int i = 0; i < cm.phi; ++i) r.c_[i] += c_[k] * pw[i];
  }
  return r;
}

namespace {
long long lcm_order(int a, int b) {
  return (long long)a / std::gcd(a, b) * b;
}
}  // namespace

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (ord_ == o.ord_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  long long m = lcm_order(ord_, o.ord_);
  *this = lifted((int)m);
  Cyclo ol = o.lifted((int)m);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += ol.c_[i];
  normalize();
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (ord_ == o.ord_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  long long m = lcm_order(ord_, o.ord_);
  *this = lifted((int)m);
  Cyclo ol = o.lifted((int)m);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= ol.c_[i];
  normalize();
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  // rational shortcuts keep order-1 work allocation-free
  if (ord_ == 1) {
    if (c_[0].is_zero()) return *this;
    Cyclo r = o;
    for (Rat& x : r.c_) x *= c_[0];
    *this = std::move(r);
    return *this;
  }
  if (o.ord_ == 1) {
    if (o.c_[0].is_zero()) { *this = Cyclo(); return *this; }
    for (Rat& x : c_) x *= o.c_[0];
    return *this;
  }
  long long m = lcm_order(ord_, o.ord_);
  Cyclo a = lifted((int)m);
  Cyclo b = o.lifted((int)m);
  const CycloContext& cc = ctx((int)m);
  std::vector<Rat> acc(cc.phi, Rat(0));
  for (int i = 0; i < cc.phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < cc.phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      Rat p = a.c_[i] * b.c_[j];
      int e = i + j;
      if (e < cc.phi) {
        acc[e] += p;
      } else {
        const std::vector<Rat>& pw = cc.powr[e % cc.n];
        for (int t = 0; t < cc.phi; ++t) {
          if (!pw[t].is_zero()) acc[t] += p * pw[t];
        }
      }
    }
  }
  Cyclo r;
  r.ord_ = (int)m;
  r.c_ = std::move(acc);
  r.normalize();
  *this = std::move(r);
  return *this;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw MathError("division by zero in cyclotomic field");
  if (ord_ == 1) return Cyclo(c_[0].inv());
  // extended Euclid: u*f + v*Phi = 1 in Q[x]
  const CycloContext& cc = ctx(ord_);
  Poly r0 = cc.minpoly;
  Poly r1 = c_;
  Poly s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of f
  while (true) {
    int d1 = pdeg(r1);
    if (d1 < 0) throw MathError("cyclotomic inverse failed (zero remainder)");
    if (d1 == 0) {
      Rat lead = r1[0];
      std::vector<Rat> res(cc.phi, Rat(0));
      for (int i = 0; i <= pdeg(s1) && i < (int)s1.size(); ++i) {
        if (s1[i].is_zero()) continue;
        Rat coef = s1[i] / lead;
        if (i < cc.phi) {
          res[i] += coef;
        } else {
          const std::vector<Rat>& pw = cc.powr[i % cc.n];
          for (int t = 0; t < cc.phi; ++t) res[t] += coef * pw[t];
        }
      }
      Cyclo out;
      out.ord_ = ord_;
      out.c_ = std::move(res);
      out.normalize();
      return out;
    }
    Poly rem;
    Poly q = pdivmod(r0, r1, &rem);
    Poly s2 = s0;
    Poly qs = pmul(q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Cyclo& Cyclo::operator/=(const Cyclo& o) {
  *this *= o.inv();
  return *this;
}

Cyclo Cyclo::pow(long long e) const {
  if (e == 0) return Cyclo::one();
  if (e < 0) return inv().pow(-e);
  Cyclo base = *this, acc = Cyclo::one();
  long long k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

Cyclo Cyclo::conj() const {
  if (ord_ == 1) return *this;
  const CycloContext& cc = ctx(ord_);
  std::vector<Rat> res(cc.phi, Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    const std::vector<Rat>& pw = cc.powr[(cc.n - (int)k) % cc.n];
    for (int i = 0; i < cc.phi; ++i) res[i] += c_[k] * pw[i];
  }
  Cyclo r;
  r.ord_ = ord_;
  r.c_ = std::move(res);
  r.normalize();
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (ord_ == o.ord_) return c_ == o.c_;
  long long m = lcm_order(ord_, o.ord_);
  return lifted((int)m).c_ == o.lifted((int)m).c_;
}

long long Cyclo::unity_order() const {
  if (is_zero()) return 0;
  Cyclo p = *this;
  for (long long k = 1; k <= 2LL * max_order(); ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return 0;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& z) {
  if (z.is_rational()) {
    os << z.coords()[0];
    return os;
  }
  bool first = true;
  for (size_t k = 0; k < z.coords().size(); ++k) {
    const Rat& r = z.coords()[k];
    if (r.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << r;
    } else {
      os << "(" << r << ")*z" << z.order() << "^" << k;
    }
  }
  if (first) os << "0";
  return os;
}

}  // namespace exf
