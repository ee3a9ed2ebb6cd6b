#ifndef EXFORGE_SYMCOMP_HPP
#define EXFORGE_SYMCOMP_HPP

#include "exforge/hurwitz.hpp"

namespace exf {

enum class SymKind { pF, pK, pQ, pC, Okubo };

SymKind sym_kind_from_string(const std::string& s);
std::string sym_kind_name(SymKind k);
int sym_dim(SymKind k);

/// Symmetric composition algebras. Para-Hurwitz: same space and norm as the
/// Hurwitz algebra, product x*y = x~ y~ (the paraunit is the old unit).
/// Okubo: trace-zero 3x3 matrices over Q(omega) with the omega-twisted
/// product and q(x) = tr(x^2)/6; fixed basis
/// {E11-E22, E22-E33, E12, E21, E13, E31, E23, E32}.
AlgebraPtr build_symmetric_composition(SymKind k);

/// Form laws on basis triples: q(x*y) = q(x)q(y) (spanning pairs) and
/// q(x*y,z) = q(x,y*z) (basis triples).
bool symcomp_laws(const AlgebraSC& s, std::string* witness = nullptr);

/// Named gradings:
///   pC: "cartan" (Z^2), "z2z2z2"; pQ: "cartan" (Z), "z2z2"; pK: "z2", "z3";
///   Ok: "z3z3".
Grading symcomp_grading(AlgebraPtr s, SymKind k, const std::string& id);

}  // namespace exf

#endif
