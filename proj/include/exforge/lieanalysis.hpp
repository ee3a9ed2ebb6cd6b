#ifndef EXFORGE_LIEANALYSIS_HPP
#define EXFORGE_LIEANALYSIS_HPP

#include "exforge/liebuild.hpp"

namespace exf {

struct LieCheckReport {
  bool ok = true;
  std::string witness;
  long long pairs_checked = 0;
  long long triples_checked = 0;
};

/// Anticommutativity on all pairs; Jacobi on all triples (full) or on a
/// deterministic seeded sample.
LieCheckReport verify_lie(const AlgebraSC& l, bool full_jacobi,
                          long long samples = 1000000, unsigned long long seed = 0x5eed);

struct KillingResult {
  LinOp killing;
  bool semisimple = false;
  bool simple = false;
  int rank_of_form = 0;
};

/// Killing form, semisimplicity (nondegeneracy), simplicity (connectedness
/// of the root system; needs the split Cartan machinery when semisimple and
/// nonabelian). `toral_seed` as in cartan_and_roots.
KillingResult killing_simplicity(const LieAlg& l, const RowSpace* toral_seed = nullptr);

/// Ideal generated by a vector (closure under brackets with all of L).
RowSpace ideal_generated_by(const AlgebraSC& l, const SVec& v);

/// Centralizer of a family of elements.
RowSpace centralizer(const AlgebraSC& l, const std::vector<SVec>& family);

struct RootDatum {
  RowSpace cartan;
  int rank = 0;
  std::vector<Vec> roots;               // values on the cartan basis
  std::vector<RowSpace> root_spaces;    // 1-dim each
  std::vector<int> simple_roots;        // indices into roots
  std::vector<std::vector<long long>> cartan_matrix;
  std::string type_label;               // e.g. "E8", "A2+A2"
};

/// Split Cartan subalgebra and root-space decomposition. The search starts
/// from the toral seed family (construction-provided when available) and
/// extends it by sl2-triples found via Jacobson-Morozov inside iterated
/// centralizers; all eigenvalues are extracted by rational root finding, and
/// a non-split spectrum is an explicit error.
RootDatum cartan_and_roots(const LieAlg& l, const RowSpace* toral_seed = nullptr);

/// Abelian and self-normalizing.
bool subspace_is_cartan(const AlgebraSC& l, const RowSpace& h);

/// Minimal polynomial of ad(x) is squarefree.
bool is_semisimple_element(const AlgebraSC& l, const SVec& x);

/// The root-space decomposition as a Z^rank grading (degrees = coordinates
/// in the simple-root basis).
Grading root_space_grading(const LieAlg& l, const RootDatum& rd);

/// Rational roots of a polynomial over Q (coefficients must be rational).
std::vector<Cyclo> rational_roots(const std::vector<Cyclo>& poly);

}  // namespace exf

#endif
