#include "exforge/symcomp.hpp"

#include <array>

namespace exf {

SymKind sym_kind_from_string(const std::string& s) {
  if (s == "pF") return SymKind::pF;
  if (s == "pK") return SymKind::pK;
  if (s == "pQ") return SymKind::pQ;
  if (s == "pC") return SymKind::pC;
  if (s == "Ok") return SymKind::Okubo;
  throw MathError("unknown symmetric composition algebra id: " + s);
}

std::string sym_kind_name(SymKind k) {
  switch (k) {
    case SymKind::pF: return "pF";
    case SymKind::pK: return "pK";
    case SymKind::pQ: return "pQ";
    case SymKind::pC: return "pC";
    case SymKind::Okubo: return "Ok";
  }
  return "?";
}

int sym_dim(SymKind k) {
  switch (k) {
    case SymKind::pF: return 1;
    case SymKind::pK: return 2;
    case SymKind::pQ: return 4;
    case SymKind::pC: return 8;
    case SymKind::Okubo: return 8;
  }
  return 0;
}

namespace {

AlgebraPtr para_hurwitz(HurwitzKind hk, const std::string& name) {
  AlgebraPtr c = build_hurwitz(hk);
  auto p = std::make_shared<AlgebraSC>(name, c->labels());
  for (int i = 0; i < c->dim(); ++i)
    for (int j = 0; j < c->dim(); ++j)
      p->set_mul(i, j, c->multiply(c->conj(SVec::unit(i)), c->conj(SVec::unit(j))));
  p->set_qform(*c->qform());
  // the paraunit (image of the old unit) is recorded as a component
  RowSpace paraunit(p->dim());
  paraunit.insert(*c->unit());
  p->set_component("paraunit", paraunit);
  return p;
}

// 3x3 matrix helpers over Cyclo for the Okubo construction
using M3 = std::array<std::array<Cyclo, 3>, 3>;

M3 m3_zero() {
  M3 m;
  for (auto& r : m)
    for (auto& x : r) x = Cyclo(0);
  return m;
}

M3 m3_mul(const M3& a, const M3& b) {
  M3 r = m3_zero();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (a[(size_t)i][(size_t)k].is_zero()) continue;
      for (int j = 0; j < 3; ++j)
        r[(size_t)i][(size_t)j] += a[(size_t)i][(size_t)k] * b[(size_t)k][(size_t)j];
    }
  return r;
}

Cyclo m3_trace(const M3& a) { return a[0][0] + a[1][1] + a[2][2]; }

}  // namespace

AlgebraPtr build_symmetric_composition(SymKind k) {
  switch (k) {
    case SymKind::pF: return para_hurwitz(HurwitzKind::F, "pF");
    case SymKind::pK: return para_hurwitz(HurwitzKind::K, "pK");
    case SymKind::pQ: return para_hurwitz(HurwitzKind::Q, "pQ");
    case SymKind::pC: return para_hurwitz(HurwitzKind::Cayley, "pC");
    case SymKind::Okubo: break;
  }
  // Okubo algebra on sl_3 with x*y = w xy - w^2 yx - (w - w^2)/3 tr(xy) 1
  std::vector<std::string> labels = {"h1", "h2", "e12", "e21", "e13", "e31", "e23", "e32"};
  std::vector<M3> basis(8, m3_zero());
  basis[0][0][0] = Cyclo(1); basis[0][1][1] = Cyclo(-1);
  basis[1][1][1] = Cyclo(1); basis[1][2][2] = Cyclo(-1);
  basis[2][0][1] = Cyclo(1);
  basis[3][1][0] = Cyclo(1);
  basis[4][0][2] = Cyclo(1);
  basis[5][2][0] = Cyclo(1);
  basis[6][1][2] = Cyclo(1);
  basis[7][2][1] = Cyclo(1);
  auto ok = std::make_shared<AlgebraSC>("Ok", labels);

  // express a traceless matrix in the fixed basis
  auto to_vec = [&](const M3& m) {
    SVec v;
    // h-part: diag(a, b, c), a+b+c = 0 -> a*h1 + (a+b)*h2
    v.axpy(m[0][0], SVec::unit(0));
    v.axpy(m[0][0] + m[1][1], SVec::unit(1));
    v.axpy(m[0][1], SVec::unit(2));
    v.axpy(m[1][0], SVec::unit(3));
    v.axpy(m[0][2], SVec::unit(4));
    v.axpy(m[2][0], SVec::unit(5));
    v.axpy(m[1][2], SVec::unit(6));
    v.axpy(m[2][1], SVec::unit(7));
    return v;
  };

  Cyclo w = Cyclo::root_of_unity(1, 3);
  Cyclo w2 = Cyclo::root_of_unity(2, 3);
  Cyclo third(Rat(1, 3));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      M3 xy = m3_mul(basis[(size_t)i], basis[(size_t)j]);
      M3 yx = m3_mul(basis[(size_t)j], basis[(size_t)i]);
      Cyclo tr = m3_trace(xy);
      M3 prod = m3_zero();
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          prod[(size_t)r][(size_t)c] = w * xy[(size_t)r][(size_t)c] - w2 * yx[(size_t)r][(size_t)c];
      Cyclo shift = (w - w2) * third * tr;
      for (int r = 0; r < 3; ++r) prod[(size_t)r][(size_t)r] -= shift;
      ok->set_mul(i, j, to_vec(prod));
    }
  // the unique quadratic form that composes with this product is
  // q(x) = -tr(x^2)/2 (the 1/6 normalization fits the mu-weighted product
  // variant, not the omega-weighted one); polar q(x,y) = -tr(xy)
  Cyclo scale(Rat(-1, 2));
  LinOp polar(8, 8);
  Vec qd(8, Cyclo(0));
  for (int i = 0; i < 8; ++i) {
    qd[(size_t)i] = m3_trace(m3_mul(basis[(size_t)i], basis[(size_t)i])) * scale;
    for (int j = 0; j < 8; ++j) {
      Cyclo p = m3_trace(m3_mul(basis[(size_t)i], basis[(size_t)j])) * Cyclo(-1);
      if (!p.is_zero()) polar.set_entry(i, j, p);
    }
  }
  ok->set_qform(AlgebraSC::QuadForm{std::move(polar), std::move(qd)});
  return ok;
}

bool symcomp_laws(const AlgebraSC& s, std::string* witness) {
  if (!norm_multiplicative(s, witness)) return false;
  int n = s.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        SVec x = SVec::unit(i), y = SVec::unit(j), z = SVec::unit(k);
        Cyclo lhs = s.q_polar(s.multiply(x, y), z);
        Cyclo rhs = s.q_polar(x, s.multiply(y, z));
        if (!(lhs == rhs)) {
          if (witness)
            *witness = "form associativity fails on basis triple (" + std::to_string(i) + "," +
                       std::to_string(j) + "," + std::to_string(k) + ")";
          return false;
        }
      }
  return true;
}

Grading symcomp_grading(AlgebraPtr s, SymKind k, const std::string& id) {
  // para-Hurwitz algebras share the homogeneous components of their Hurwitz
  // counterparts (the involution preserves them)
  if (k == SymKind::pC && (id == "cartan" || id == "z2z2z2"))
    return hurwitz_grading(s, HurwitzKind::Cayley, id);
  if (k == SymKind::pQ && (id == "cartan" || id == "z2z2"))
    return hurwitz_grading(s, HurwitzKind::Q, id);
  if (k == SymKind::pK && id == "z2") return hurwitz_grading(s, HurwitzKind::K, id);
  if (k == SymKind::pK && id == "z3") {
    std::vector<GElem> deg(2);
    deg[(size_t)s->index_of("e1")] = GElem{{1}};
    deg[(size_t)s->index_of("e2")] = GElem{{2}};
    return Grading::from_degrees(s, AbGroup::cyclic(3), deg);
  }
  if (k == SymKind::Okubo && id == "z3z3") {
    // components spanned by P^a Q^b for the Pauli pair (P = diag(1,w,w^2)
    // at degree (1,0), Q = cyclic shift at degree (0,1))
    Cyclo w = Cyclo::root_of_unity(1, 3);
    std::vector<std::pair<GElem, SVec>> gens;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        // (P^a Q^b)_{r,c} = w^{a r} [c == r+b mod 3]
        SVec v;
        // express in basis: diagonal part via h1,h2; off-diagonal directly
        // entries: row r, col (r+b)%3 with value w^{a r}
        Cyclo d0 = w.pow(0 * a), d1 = w.pow(1 * a), d2 = w.pow(2 * a);
        if (b == 0) {
          // diag(d0,d1,d2), traceless since a != 0
          v.axpy(d0, SVec::unit(0));
          v.axpy(d0 + d1, SVec::unit(1));
        } else {
          // e_{0,b}, e_{1,1+b}, e_{2,2+b}
          auto idx_of = [&](int r, int c) {
            if (r == 0 && c == 1) return 2;
            if (r == 1 && c == 0) return 3;
            if (r == 0 && c == 2) return 4;
            if (r == 2 && c == 0) return 5;
            if (r == 1 && c == 2) return 6;
            if (r == 2 && c == 1) return 7;
            throw MathError("bad off-diagonal index");
          };
          v.axpy(d0, SVec::unit(idx_of(0, b % 3)));
          v.axpy(d1, SVec::unit(idx_of(1, (1 + b) % 3)));
          v.axpy(d2, SVec::unit(idx_of(2, (2 + b) % 3)));
        }
        gens.emplace_back(GElem{{a, b}}, std::move(v));
      }
    return Grading::from_homogeneous_vectors(s, AbGroup{0, {3, 3}}, gens);
  }
  throw MathError("unknown grading id '" + id + "' for " + sym_kind_name(k));
}

}  // namespace exf
