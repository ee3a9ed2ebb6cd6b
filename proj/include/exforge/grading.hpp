#ifndef EXFORGE_GRADING_HPP
#define EXFORGE_GRADING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exforge/abgroup.hpp"
#include "exforge/algebra.hpp"

namespace exf {

/// Group grading on an AlgebraSC: homogeneous components indexed by degrees.
struct Grading {
  AlgebraPtr target;
  AbGroup group;
  std::vector<std::pair<GElem, RowSpace>> comps;  // sorted by degree, nonzero only

  const RowSpace* component(const GElem& g) const;
  int support_size() const { return (int)comps.size(); }
  void sort_components();

  /// Grading from a degree assignment on the standard basis.
  static Grading from_degrees(AlgebraPtr target, AbGroup group,
                              const std::vector<GElem>& degree_of_basis);
  /// Grading from a homogeneous generating family (vectors with degrees).
  static Grading from_homogeneous_vectors(
      AlgebraPtr target, AbGroup group,
      const std::vector<std::pair<GElem, SVec>>& gens);
};

struct CheckReport {
  bool ok = true;
  std::string witness;
};

/// Components form a direct sum filling the algebra and A_g A_h <= A_{g+h}.
CheckReport check_grading(const Grading& g);

/// Histogram (h_1, ..., h_r): h_i = number of components of dimension i.
std::vector<long long> type_of(const Grading& g);
std::string type_str(const std::vector<long long>& t);

/// Combine two gradings of the same target into a G x H grading by pairwise
/// intersections; throws MathError with a witness if they are incompatible.
Grading combine(const Grading& g1, const Grading& g2);

/// Refine by commuting finite-order automorphisms: each op must preserve
/// every component; new degrees extend by the eigenvalue exponents. Checks
/// automorphism property, orders, commutation; throws on violation.
Grading refine_by_automorphisms(const Grading& g, const std::vector<LinOp>& ops,
                                const std::vector<int>& orders);

struct UniversalGroupResult {
  AbGroup group;      // canonical form
  Grading regraded;   // same components, degrees remapped into `group`
};

/// Universal group of the grading: abelian group generated by the support
/// with relations s1+s2=s3 from nonzero component products, reduced by SNF.
UniversalGroupResult universal_group(const Grading& g);

/// Decompose a subspace of operators on the graded algebra into pieces of
/// pure degree: W = sum of W_d with W_d(A_g) <= A_{g+d}. Throws when the
/// pieces do not exhaust W (the subspace is then not graded).
std::vector<std::pair<GElem, RowSpace>> operator_degree_split(
    const Grading& g, const RowSpace& op_space);

/// The grading induced on an operator-realized subalgebra L <= gl(A) by a
/// grading on A (components = pure-degree parts of L).
Grading induced_operator_grading(AlgebraPtr op_algebra,
                                 const std::vector<LinOp>& op_basis,
                                 const Grading& base);

}  // namespace exf

#endif
