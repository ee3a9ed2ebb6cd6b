#ifndef EXFORGE_HURWITZ_HPP
#define EXFORGE_HURWITZ_HPP

#include "exforge/algebra.hpp"
#include "exforge/grading.hpp"

namespace exf {

enum class HurwitzKind { F, K, Q, Cayley };

HurwitzKind hurwitz_kind_from_string(const std::string& s);
std::string hurwitz_kind_name(HurwitzKind k);
int hurwitz_dim(HurwitzKind k);

/// The four split Hurwitz algebras: F, F x F, Mat_2(F) (basis e1,e2,u1,v1
/// mapped to E11,E22,E12,E21), and the split Cayley algebra in the standard
/// basis e1,e2,u1,u2,u3,v1,v2,v3. Unit, bar involution and norm attached;
/// the norm is the one determined by the multiplication table
/// (q(e1,e2)=1, q(u_i,v_i)=-1, all other polar values zero).
AlgebraPtr build_hurwitz(HurwitzKind k);

struct CayleyDickson {
  AlgebraPtr algebra;   // dim doubled, with involution and doubled form
  Grading z2;           // even part (a,0), odd part (0,b)
  bool hurwitz;         // norm stayed multiplicative (iff base associative)
  std::string witness;  // first multiplicativity failure when !hurwitz
};

/// Cayley-Dickson doubling (a,b)(c,d) = (ac + alpha d~b, da + bc~),
/// q(a,b) = q(a) - alpha q(b).
CayleyDickson cayley_dickson(const AlgebraSC& c, const Cyclo& alpha);

/// d_{a,b} = [l_a,l_b] + [l_a,r_b] + [r_a,r_b], a derivation of any Hurwitz
/// algebra.
LinOp derivation_dab(const AlgebraSC& c, const SVec& a, const SVec& b);

/// Complete multiplicativity check of the attached norm: q(xy) = q(x)q(y)
/// over basis vectors and pairwise sums (a spanning set for the biquadratic
/// identity).
bool norm_multiplicative(const AlgebraSC& a, std::string* witness = nullptr);

/// Named gradings on the Hurwitz algebras:
///   Cayley: "cartan" (Z^2), "z2z2z2" (Z_2^3)
///   Q:      "cartan" (Z),   "z2z2"   (Z_2^2)
///   K:      "z2"
Grading hurwitz_grading(AlgebraPtr c, HurwitzKind k, const std::string& id);

}  // namespace exf

#endif
