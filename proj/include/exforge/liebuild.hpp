#ifndef EXFORGE_LIEBUILD_HPP
#define EXFORGE_LIEBUILD_HPP

#include <array>

#include "exforge/structurable.hpp"
#include "exforge/symcomp.hpp"

namespace exf {

/// A Lie algebra with provenance; construction pieces and toral seed
/// elements live in the AlgebraSC component map.
struct LieAlg {
  AlgebraPtr algebra;
  std::string provenance;
};

/// Triality Lie algebra tri(S) of a symmetric composition algebra: triples
/// (d0,d1,d2) in o(S,q)^3 with d0(x*y) = d1(x)*y + x*d2(y).
struct Triality {
  AlgebraPtr s;
  int n = 0;                                   // dim S
  std::vector<std::array<LinOp, 3>> basis;     // basis triples
  RowSpace flat;                               // flattened triples (3 n^2)
  LinOp theta;                                 // cyclic shift on tri coords
  std::unique_ptr<CoordSolver> coords;

  SVec flatten(const std::array<LinOp, 3>& t) const;
  std::array<LinOp, 3> t_xy(const SVec& x, const SVec& y) const;
  /// coordinates of a triple in the tri basis (throws when outside)
  SVec coords_of(const std::array<LinOp, 3>& t) const;
  int rank() const { return (int)basis.size(); }
};
Triality triality(AlgebraPtr s);

/// g(S, S') of the two-symmetric-composition-algebras construction.
/// Components recorded: tri1, tri2, iota0..2, toral (hyperbolic t-seeds).
LieAlg g_construction(const Triality& t1, const Triality& t2);

/// Tits construction T(C, J) = Der(C) + C0 (x) J0 + Der(J); pass nullptr
/// for J to take the degenerate J = F column (result Der(C)).
LieAlg tits(AlgebraPtr c, const JordanAlg* j);

/// Kantor 5-graded Lie algebra of a structurable algebra; instr data is
/// computed internally. The Z-grading lives in `zgrading`.
struct KantorResult {
  LieAlg lie;
  Grading zgrading;
  InstrData instr;       // K_0 data (basis operators on A)
  int skew_dim = 0;
};
KantorResult kantor(const InvAlgebra& a);

/// Steinberg construction U(A) = trip(A) + u12(A) + u23(A) + u31(A), with
/// the Z_2^2 grading.
struct SteinbergResult {
  LieAlg lie;
  Grading z22grading;
  int trip_dim = 0;
  std::vector<std::array<LinOp, 3>> trip_basis;
};
SteinbergResult steinberg(const InvAlgebra& a);

/// Derivation Lie algebra of any algebra as a LieAlg (optionally commuting
/// with the involution), with operator basis returned.
struct DerAlgebra {
  LieAlg lie;
  std::vector<LinOp> ops;
  RowSpace flat;
};
DerAlgebra der_algebra(const AlgebraSC& a, bool commute_with_involution);

/// The two historical TKK models of e7 built on the Albert algebra.
struct TkkModels {
  LieAlg tits_sl2;   // Albert (x) sl2 + Der(Albert)
  LieAlg koecher;    // Albert + Albert-bar + Str(Albert)
};
TkkModels tkk_e7_models(const CubicData& cd);

/// Split tri(S) along a grading of S into pure-degree triple pieces
/// (all three components shift degrees by the same amount).
std::vector<std::pair<GElem, RowSpace>> split_triality_by_degree(const Triality& t,
                                                                 const Grading& gs);

}  // namespace exf

#endif
