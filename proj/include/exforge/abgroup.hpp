#ifndef EXFORGE_ABGROUP_HPP
#define EXFORGE_ABGROUP_HPP

#include <string>
#include <vector>

namespace exf {

/// Finitely generated abelian group Z^r x Z_{m_1} x ... x Z_{m_k}. The
/// working form keeps moduli in whatever order a construction produced them;
/// canonical() normalizes to the invariant-factor chain for comparisons.
struct AbGroup {
  int free_rank = 0;
  std::vector<long long> torsion;  // each >= 2

  int coords() const { return free_rank + (int)torsion.size(); }
  bool operator==(const AbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }

  AbGroup canonical() const;
  bool same_group(const AbGroup& o) const;  // compares canonical forms
  bool is_finite() const { return free_rank == 0; }
  /// Pretty printer in primary form, e.g. "Z^2 x Z_2^3 x Z_4".
  std::string str() const;

  static AbGroup free(int r) { return AbGroup{r, {}}; }
  static AbGroup cyclic(long long m) { return AbGroup{0, {m}}; }
  static AbGroup product(const AbGroup& a, const AbGroup& b);
};

/// Element of an AbGroup: free coordinates first, then torsion residues.
struct GElem {
  std::vector<long long> v;

  bool operator==(const GElem& o) const { return v == o.v; }
  bool operator<(const GElem& o) const { return v < o.v; }
  std::string str() const;
};

GElem g_zero(const AbGroup& g);
GElem g_reduce(const AbGroup& g, GElem e);
GElem g_add(const AbGroup& g, const GElem& a, const GElem& b);
GElem g_neg(const AbGroup& g, const GElem& a);
GElem g_scale(const AbGroup& g, long long k, const GElem& a);
/// Degree in AbGroup::product(ga, gb) from degrees in the factors
/// (free coordinates of both factors come first, then torsion).
GElem g_concat(const AbGroup& ga, const GElem& a, const AbGroup& gb, const GElem& b);

}  // namespace exf

#endif
