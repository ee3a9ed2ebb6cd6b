#ifndef EXFORGE_OPERALG_HPP
#define EXFORGE_OPERALG_HPP

#include "exforge/grading.hpp"

namespace exf {

/// Derivations of A as a subspace of flattened operators (column-major,
/// ambient dim^2), optionally restricted to those commuting with the
/// involution. Solved by streaming the Leibniz constraints through an
/// echelon.
RowSpace derivation_space(const AlgebraSC& a, bool commute_with_involution);

/// Same space computed degree block by degree block along a grading of A
/// (derivations of a graded algebra decompose into pure-degree pieces).
/// Far cheaper for large algebras with fine gradings, and returns the
/// graded pieces, which the induced gradings need anyway.
struct GradedOperatorSpace {
  RowSpace total;                                  // flattened, standard coords
  std::vector<std::pair<GElem, RowSpace>> pieces;  // pure-degree parts
};
GradedOperatorSpace derivation_space_graded(const AlgebraSC& a, const Grading& g,
                                            bool commute_with_involution);

/// Build an algebra on a subspace of an ambient algebra: basis vectors are
/// given in ambient coordinates, products (optionally symmetrized or
/// commutator) must stay in the span.
enum class ProductRule { Plain, Symmetrized, Commutator };
AlgebraSC subalgebra_on_basis(const AlgebraSC& ambient, const std::string& name,
                              const std::vector<std::string>& labels,
                              const std::vector<SVec>& basis, ProductRule rule);

/// Coordinates of ambient vectors with respect to a fixed independent family
/// (augmented-echelon based).
class CoordSolver {
public:
  CoordSolver(int ambient, const std::vector<SVec>& family);
  /// Coordinates, or nullopt when the vector is outside the span.
  std::optional<SVec> coords(const SVec& v) const;
  int family_size() const { return k_; }

private:
  int n_, k_;
  RowSpace aug_;
};

/// Lie closure of a family of operators under commutators (flattened span
/// grows until stable). Returns the closed span and a chosen operator basis.
struct OperatorSpan {
  RowSpace span;               // flattened
  std::vector<LinOp> basis;    // unflattened representatives (echelon rows)
};
OperatorSpan lie_closure(int n, const std::vector<LinOp>& gens);

/// Span (no closure) of operators, flattened.
OperatorSpan operator_span(int n, const std::vector<LinOp>& gens);

}  // namespace exf

#endif
