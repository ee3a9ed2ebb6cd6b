#ifndef EXFORGE_JORDAN_HPP
#define EXFORGE_JORDAN_HPP

#include "exforge/hurwitz.hpp"
#include "exforge/operalg.hpp"

namespace exf {

/// Jordan algebra of hermitian matrices H_n(C,*) with the product
/// x o y = (xy + yx)/2. Basis: diagonal cells first, then off-diagonal
/// cells (i<j lexicographic) tensored with the coefficient basis.
struct JordanAlg {
  AlgebraPtr algebra;      // commutative, unital, involution = identity
  HurwitzKind coeff;
  int n = 0;
  Vec trace_form;          // normalized trace t_J on basis vectors
  RowSpace j0;             // trace-zero subspace

  Cyclo t(const SVec& x) const;
  /// R_x = multiplication operator.
  LinOp R(const SVec& x) const { return algebra->left_mult(x); }
};

/// H_n(C,*) for n = 3,4; (Cayley, 3) is the Albert algebra, (Cayley, 4) is
/// rejected.
JordanAlg hermitian_jordan(HurwitzKind c, int n);

/// Commutativity + the Jordan identity (x^2 y) x = x^2 (y x) on a spanning
/// family (basis plus pairwise sums in the x slot, basis in y).
bool jordan_laws(const AlgebraSC& j, std::string* witness = nullptr);

struct DerInner {
  RowSpace der;        // derivation algebra, flattened ops
  RowSpace inner;      // inner structure algebra R_{J0} + [R_J, R_J]
  RowSpace structure;  // full structure algebra R_J + [R_J, R_J]
};
DerInner der_and_inner_structure(const JordanAlg& j);

/// Cubic form data of the Albert algebra: T, the polarized cubic N3 with
/// N3(x,x,x) = 6 N(x), and the cross product with T(x X y, z) = N3(x,y,z).
struct CubicData {
  JordanAlg albert;
  Vec T;                          // trace linear form
  LinOp T2;                       // T(x o y) bilinear form matrix
  LinOp T2inv;
  std::vector<std::vector<Vec>> n3;  // N3 on basis triples, n3[i][j] = vector over k
  Cyclo Tval(const SVec& x) const;
  Cyclo T2val(const SVec& x, const SVec& y) const;
  Cyclo N3(const SVec& a, const SVec& b, const SVec& c) const;
  Cyclo Q(const SVec& x) const;   // (T(x)^2 - T(x^2))/2
  Cyclo N(const SVec& x) const;   // N3(x,x,x)/6
  SVec cross(const SVec& x, const SVec& y) const;
};
CubicData albert_cubic();

/// {f in End(A) : N(f(a),b,c) + N(a,f(b),c) + N(a,b,f(c)) = 0}, flattened.
RowSpace e6_norm_annihilator(const CubicData& cd);

/// The section-3.4 gradings on H_4(C): Kronecker models with involution
/// twists chosen so the graded subspace condition holds.
///   id = "fine":  Z_2^4 / Z_2^5 / Z_2^6 for C = F / K / Q
///   id = "mixed": Z x Z_2^2 / Z x Z_2^3 / Z x Z_2^4
struct GradedJordan {
  JordanAlg jordan;
  Grading grading;
};
GradedJordan jordan4_grading(HurwitzKind c, const std::string& id);

/// The section-3.6 Z_4 x Z_2^3 machinery: grading of type (24,2) on a model
/// of H_4(Q) and of type (24,6) on the skew part K(Q (x) R) (a c_4 Lie
/// algebra isomorphic to Der(H_4(Q))).
struct GradedDivisionH4Q {
  GradedJordan jordan;     // H_4(Q) model, type (24,2)
  AlgebraPtr skew_lie;     // K(Q (x) R, tau^s (x) *) with commutator product
  Grading skew_grading;    // type (24,6)
};
GradedDivisionH4Q graded_division_grading_h4q();

}  // namespace exf

#endif
