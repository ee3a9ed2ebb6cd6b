#include "exforge/abgroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "exforge/snf.hpp"

namespace exf {

AbGroup AbGroup::canonical() const {
  if (torsion.empty()) return *this;
  size_t k = torsion.size();
  ZMat d(k, std::vector<mpz_class>(k, 0));
  for (size_t i = 0; i < k; ++i) d[i][i] = mpz_class((long)torsion[i]);
  auto snf = smith_normal_form(std::move(d), false);
  AbGroup g;
  g.free_rank = free_rank;
  for (const mpz_class& x : snf.diag)
    if (x > 1) g.torsion.push_back(x.get_si());
  std::sort(g.torsion.begin(), g.torsion.end());
  return g;
}

bool AbGroup::same_group(const AbGroup& o) const {
  AbGroup a = canonical(), b = o.canonical();
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

std::string AbGroup::str() const {
  // primary decomposition: split each modulus into prime powers
  std::map<long long, int> primary;  // prime power -> multiplicity
  for (long long m : torsion) {
    long long rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      long long pk = 1;
      while (rest % p == 0) {
        rest /= p;
        pk *= p;
      }
      primary[pk]++;
    }
    if (rest > 1) primary[rest]++;
  }
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (auto [pk, mult] : primary) {
    if (!first) os << " x ";
    first = false;
    os << "Z_" << pk;
    if (mult > 1) os << "^" << mult;
  }
  if (first) os << "1";
  return os.str();
}

AbGroup AbGroup::product(const AbGroup& a, const AbGroup& b) {
  AbGroup g;
  g.free_rank = a.free_rank + b.free_rank;
  g.torsion = a.torsion;
  g.torsion.insert(g.torsion.end(), b.torsion.begin(), b.torsion.end());
  return g;
}

GElem g_zero(const AbGroup& g) {
  return GElem{std::vector<long long>((size_t)g.coords(), 0)};
}

GElem g_reduce(const AbGroup& g, GElem e) {
  if ((int)e.v.size() != g.coords()) throw std::runtime_error("group element size mismatch");
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    long long m = g.torsion[i];
    long long& x = e.v[(size_t)g.free_rank + i];
    x %= m;
    if (x < 0) x += m;
  }
  return e;
}

GElem g_add(const AbGroup& g, const GElem& a, const GElem& b) {
  GElem r = a;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return g_reduce(g, std::move(r));
}

GElem g_neg(const AbGroup& g, const GElem& a) {
  GElem r = a;
  for (auto& x : r.v) x = -x;
  return g_reduce(g, std::move(r));
}

GElem g_scale(const AbGroup& g, long long k, const GElem& a) {
  GElem r = a;
  for (auto& x : r.v) x *= k;
  return g_reduce(g, std::move(r));
}

GElem g_concat(const AbGroup& ga, const GElem& a, const AbGroup& gb, const GElem& b) {
  GElem r;
  r.v.reserve(a.v.size() + b.v.size());
  r.v.insert(r.v.end(), a.v.begin(), a.v.begin() + ga.free_rank);
  r.v.insert(r.v.end(), b.v.begin(), b.v.begin() + gb.free_rank);
  r.v.insert(r.v.end(), a.v.begin() + ga.free_rank, a.v.end());
  r.v.insert(r.v.end(), b.v.begin() + gb.free_rank, b.v.end());
  return r;
}

std::string GElem::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace exf
