#ifndef EXFORGE_STRUCTURABLE_HPP
#define EXFORGE_STRUCTURABLE_HPP

#include "exforge/jordan.hpp"

namespace exf {

/// Unital algebra with involution together with its hermitian/skew split.
struct InvAlgebra {
  AlgebraPtr algebra;
  RowSpace herm, skew;
};
InvAlgebra make_inv_algebra(AlgebraPtr a);

/// V_{x,y}(z) = (x y~) z + (z y~) x - (z x~) y.
LinOp v_op(const AlgebraSC& a, const SVec& x, const SVec& y);

struct StructurableReport {
  bool ok = true;
  std::string witness;  // violating basis quadruple when !ok
};

/// Inner structure algebra: span of all V_{x,y}, with a basis drawn from
/// generator pairs, the bracket expansion table, and the involutive
/// automorphism eps(V_{x,y}) = -V_{y,x} in basis coordinates.
struct InstrData {
  int dim = 0;                       // of the underlying algebra A
  RowSpace span;                     // flattened operator span
  std::vector<LinOp> basis;          // V_{x_p, y_p} operators
  std::vector<std::pair<int, int>> gen_pairs;
  std::vector<std::vector<SVec>> bracket;  // [basis_a, basis_b] in coords
  LinOp epsilon;                     // on span coordinates
  std::unique_ptr<CoordSolver> coords;

  std::optional<SVec> op_coords(const LinOp& op) const;
};
InstrData instr_and_epsilon(const InvAlgebra& a);

/// Structurable identity [V_{x,y}, V_{z,w}] = V_{V_{x,y}z, w} - V_{z, V_{y,x}w}
/// checked for (x,y) running over pairs spanning all (V_{x,y}, V_{y,x})
/// values (equivalent to all basis quadruples by multilinearity) and (z,w)
/// over all basis pairs.
StructurableReport is_structurable(const InvAlgebra& a);

/// Cayley-Dickson-style doubling of a degree-4 Jordan algebra:
/// A = J + vJ with the theta-twisted product; skew part is F v.
InvAlgebra cd_jordan4(const JordanAlg& j, const Cyclo& mu);

/// 56-dimensional Brown algebra built from the Albert cubic data.
InvAlgebra brown_algebra(const CubicData& cd);

/// The matrix model of H_4(Q): J = {(z, x; y, z^t)} with x, y skew 4x4,
/// as a JordanAlg; block subspaces recorded as components "zblock",
/// "xblock", "yblock".
JordanAlg jmodel_h4q();

/// Section 3.7: the Z_4^3 grading on CD(H_4(Q)) via the Pauli automorphisms
/// and the Pfaffian-adjoint automorphism pi.
struct Z43Data {
  InvAlgebra a;                 // CD of the matrix model, 56-dim
  Grading z4;                   // the Z_4 grading
  Grading z43;                  // full refinement: 56 one-dim components
  RowSpace cdh4k_subalgebra;    // A_0 + A_2, a copy of CD(H_4(K))
};
Z43Data z43_grading_on_cd_h4q();

/// The restriction of the Z_4^3 grading to the A_0 + A_2 subalgebra,
/// as a grading on a standalone 32-dim algebra (a model of CD(H_4(K))).
struct RestrictedCD {
  InvAlgebra a;      // 32-dim
  Grading grading;   // universal group Z_4^2 x Z_2
};
RestrictedCD restrict_z43_to_cdh4k(const Z43Data& z);

}  // namespace exf

#endif
