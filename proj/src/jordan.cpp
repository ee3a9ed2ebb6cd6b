#include "exforge/jordan.hpp"

#include <array>

namespace exf {

namespace {

// matrices over a Hurwitz coefficient algebra
struct CMat {
  int n = 0;
  std::vector<SVec> e;  // n*n entries, C-coordinate vectors

  CMat(int n_, int) : n(n_), e((size_t)n_ * n_) {}
  SVec& at(int i, int j) { return e[(size_t)i * n + j]; }
  const SVec& at(int i, int j) const { return e[(size_t)i * n + j]; }
};

CMat cmul(const AlgebraSC& c, const CMat& x, const CMat& y) {
  CMat r(x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      SVec acc;
      for (int k = 0; k < x.n; ++k) {
        if (x.at(i, k).empty() || y.at(k, j).empty()) continue;
        acc.axpy(Cyclo(1), c.multiply(x.at(i, k), y.at(k, j)));
      }
      r.at(i, j) = std::move(acc);
    }
  return r;
}

}  // namespace

Cyclo JordanAlg::t(const SVec& x) const {
  Cyclo s(0);
  for (const auto& [i, c] : x.t) s += c * trace_form[(size_t)i];
  return s;
}

JordanAlg hermitian_jordan(HurwitzKind ck, int n) {
  if (n != 3 && n != 4) throw MathError("hermitian_jordan supports n = 3 or 4");
  if (ck == HurwitzKind::Cayley && n == 4)
    throw MathError("H_4 over the Cayley algebra is not a Jordan algebra");
  AlgebraPtr c = build_hurwitz(ck);
  int dc = c->dim();

  // basis: diagonal cells, then X_ij(c_b) = E_ij c_b + E_ji c_b~ for i<j
  std::vector<std::string> labels;
  std::vector<CMat> basis;
  for (int i = 0; i < n; ++i) {
    labels.push_back("d" + std::to_string(i + 1));
    CMat m(n, 0);
    m.at(i, i) = *c->unit();
    basis.push_back(std::move(m));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int b = 0; b < dc; ++b) {
        labels.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1) + "[" +
                         c->labels()[(size_t)b] + "]");
        CMat m(n, 0);
        m.at(i, j) = SVec::unit(b);
        m.at(j, i) = c->conj(SVec::unit(b));
        basis.push_back(std::move(m));
      }
  int dim = (int)basis.size();

  // convert a hermitian matrix to basis coordinates
  auto to_coords = [&](const CMat& m) {
    SVec out;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      // diagonal entries are scalar multiples of the unit
      Cyclo lam = c->q_polar(m.at(i, i), *c->unit()) / Cyclo(2);
      SVec check = m.at(i, i);
      check.axpy(-lam, *c->unit());
      if (!check.empty()) throw MathError("diagonal entry is not scalar");
      out.axpy(lam, SVec::unit(pos));
      ++pos;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int b = 0; b < dc; ++b) {
          out.axpy(m.at(i, j).at(b), SVec::unit(pos));
          ++pos;
        }
    return out;
  };

  auto alg = std::make_shared<AlgebraSC>("H" + std::to_string(n) + "(" + c->name() + ")",
                                         labels);
  Cyclo half(Rat(1, 2));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      CMat xy = cmul(*c, basis[(size_t)i], basis[(size_t)j]);
      CMat yx = cmul(*c, basis[(size_t)j], basis[(size_t)i]);
      CMat sym(n, 0);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          SVec s = xy.at(p, q);
          s.axpy(Cyclo(1), yx.at(p, q));
          sym.at(p, q) = s * half;
        }
      SVec coords = to_coords(sym);
      alg->set_mul(i, j, coords);
      if (j != i) alg->set_mul(j, i, std::move(coords));
    }
  SVec unit;
  for (int i = 0; i < n; ++i) unit.push(i, Cyclo(1));
  alg->set_unit(unit);
  alg->set_involution(LinOp::identity(dim));

  JordanAlg j;
  j.coeff = ck;
  j.n = n;
  j.trace_form.assign((size_t)dim, Cyclo(0));
  Cyclo invn(Rat(1, n));
  for (int i = 0; i < n; ++i) j.trace_form[(size_t)i] = invn;
  j.j0 = RowSpace(dim);
  for (int i = 1; i < n; ++i) j.j0.insert(SVec::unit(i) - SVec::unit(0));
  for (int i = n; i < dim; ++i) j.j0.insert(SVec::unit(i));
  j.algebra = alg;
  return j;
}

bool jordan_laws(const AlgebraSC& j, std::string* witness) {
  int n = j.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(j.mul(a, b) == j.mul(b, a))) {
        if (witness) *witness = "not commutative";
        return false;
      }
  // (x^2 y) x = x^2 (y x): cubic in x, so basis vectors, pairwise and
  // triple sums of basis vectors form a complete x-family
  std::vector<SVec> xs;
  for (int i = 0; i < n; ++i) xs.push_back(SVec::unit(i));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) xs.push_back(SVec::unit(i) + SVec::unit(k));
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        xs.push_back(SVec::unit(i) + SVec::unit(k) + SVec::unit(l));
  for (const SVec& x : xs) {
    SVec x2 = j.multiply(x, x);
    for (int y = 0; y < n; ++y) {
      SVec yv = SVec::unit(y);
      SVec lhs = j.multiply(j.multiply(x2, yv), x);
      SVec rhs = j.multiply(x2, j.multiply(yv, x));
      if (!(lhs == rhs)) {
        if (witness) *witness = "Jordan identity fails at y = " + j.labels()[(size_t)y];
        return false;
      }
    }
  }
  return true;
}

DerInner der_and_inner_structure(const JordanAlg& j) {
  const AlgebraSC& a = *j.algebra;
  int n = a.dim();
  DerInner out;
  out.der = derivation_space(a, false);
  std::vector<LinOp> rops;
  for (int i = 0; i < n; ++i) rops.push_back(a.left_mult(SVec::unit(i)));
  RowSpace inner(n * n), structure(n * n);
  for (const SVec& x : j.j0.rows()) inner.insert(a.left_mult(x).flatten());
  for (int i = 0; i < n; ++i) structure.insert(rops[(size_t)i].flatten());
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      SVec f = rops[(size_t)i].commutator(rops[(size_t)k]).flatten();
      inner.insert(f);
      structure.insert(f);
    }
  out.inner = std::move(inner);
  out.structure = std::move(structure);
  return out;
}

Cyclo CubicData::Tval(const SVec& x) const {
  Cyclo s(0);
  for (const auto& [i, c] : x.t) s += c * T[(size_t)i];
  return s;
}

Cyclo CubicData::T2val(const SVec& x, const SVec& y) const {
  Cyclo s(0);
  for (const auto& [i, ci] : x.t)
    for (const auto& [j, cj] : y.t) s += ci * cj * T2.entry(i, j);
  return s;
}

Cyclo CubicData::N3(const SVec& a, const SVec& b, const SVec& c) const {
  Cyclo s(0);
  for (const auto& [i, ci] : a.t)
    for (const auto& [j, cj] : b.t) {
      const Vec& row = n3[(size_t)i][(size_t)j];
      for (const auto& [k, ck] : c.t) s += ci * cj * ck * row[(size_t)k];
    }
  return s;
}

Cyclo CubicData::Q(const SVec& x) const {
  Cyclo t = Tval(x);
  return (t * t - T2val(x, x)) / Cyclo(2);
}

Cyclo CubicData::N(const SVec& x) const { return N3(x, x, x) / Cyclo(6); }

SVec CubicData::cross(const SVec& x, const SVec& y) const {
  int n = albert.algebra->dim();
  // T(x X y, .) = N3(x, y, .), T2 symmetric nondegenerate
  SVec rhs;
  for (int k = 0; k < n; ++k) rhs.push(k, N3(x, y, SVec::unit(k)));
  return T2inv.apply(rhs);
}

CubicData albert_cubic() {
  CubicData cd;
  cd.albert = hermitian_jordan(HurwitzKind::Cayley, 3);
  const AlgebraSC& a = *cd.albert.algebra;
  int n = a.dim();
  cd.T.assign((size_t)n, Cyclo(0));
  for (int i = 0; i < 3; ++i) cd.T[(size_t)i] = Cyclo(1);
  LinOp t2(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyclo v(0);
      for (const auto& [k, c] : a.mul(i, j).t) v += c * cd.T[(size_t)k];
      if (!v.is_zero()) t2.set_entry(i, j, v);
    }
  cd.T2 = t2;
  cd.T2inv = t2.inverse();
  cd.n3.assign((size_t)n, std::vector<Vec>((size_t)n, Vec((size_t)n, Cyclo(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec bij = a.mul(i, j);
      for (int k = 0; k < n; ++k) {
        Cyclo v = cd.T[(size_t)i] * cd.T[(size_t)j] * cd.T[(size_t)k];
        v -= cd.T[(size_t)i] * t2.entry(j, k);
        v -= cd.T[(size_t)j] * t2.entry(i, k);
        v -= cd.T[(size_t)k] * t2.entry(i, j);
        Cyclo tr3(0);
        for (const auto& [m, c] : bij.t) tr3 += c * t2.entry(m, k);
        v += Cyclo(2) * tr3;
        cd.n3[(size_t)i][(size_t)j][(size_t)k] = v;
      }
    }
  return cd;
}

RowSpace e6_norm_annihilator(const CubicData& cd) {
  const AlgebraSC& a = *cd.albert.algebra;
  int n = a.dim();
  EchelonSolver solver(n * n);
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q)
      for (int r = q; r < n; ++r) {
        std::vector<std::pair<int, Cyclo>> terms;
        for (int i = 0; i < n; ++i) {
          Cyclo c1 = cd.n3[(size_t)i][(size_t)q][(size_t)r];
          if (!c1.is_zero()) terms.emplace_back(p * n + i, c1);
          Cyclo c2 = cd.n3[(size_t)p][(size_t)i][(size_t)r];
          if (!c2.is_zero()) terms.emplace_back(q * n + i, c2);
          Cyclo c3 = cd.n3[(size_t)p][(size_t)q][(size_t)i];
          if (!c3.is_zero()) terms.emplace_back(r * n + i, c3);
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        SVec row;
        for (auto& [i, c] : terms) {
          if (!row.t.empty() && row.t.back().first == i)
            row.t.back().second += c;
          else
            row.t.emplace_back(i, c);
        }
        std::erase_if(row.t, [](const auto& pr) { return pr.second.is_zero(); });
        if (!row.empty()) solver.add_row(std::move(row));
      }
  return solver.kernel();
}

// ---------------------------------------------------------------------------
// Section 3.4 Kronecker-model gradings on H_4(C)

namespace {

// Mat_2(F) with a named involution: "transpose", "q1twist" (x -> q1 x^t q1),
// or "symplectic" (the Hurwitz bar)
AlgebraPtr mat2_with(const std::string& invol) {
  auto m = std::make_shared<AlgebraSC>(
      "Mat2[" + invol + "]", std::vector<std::string>{"E11", "E12", "E21", "E22"});
  auto I = [&](int a, int b) { return (a - 1) * 2 + (b - 1); };
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (int d = 1; d <= 2; ++d)
          if (b == c) m->set_mul(I(a, b), I(c, d), SVec::unit(I(a, d)));
  m->set_unit(SVec::unit(I(1, 1)) + SVec::unit(I(2, 2)));
  LinOp s(4, 4);
  if (invol == "transpose") {
    s.set_col(I(1, 1), SVec::unit(I(1, 1)));
    s.set_col(I(2, 2), SVec::unit(I(2, 2)));
    s.set_col(I(1, 2), SVec::unit(I(2, 1)));
    s.set_col(I(2, 1), SVec::unit(I(1, 2)));
  } else if (invol == "q1twist") {
    s.set_col(I(1, 1), SVec::unit(I(2, 2)));
    s.set_col(I(2, 2), SVec::unit(I(1, 1)));
    s.set_col(I(1, 2), SVec::unit(I(1, 2)));
    s.set_col(I(2, 1), SVec::unit(I(2, 1)));
  } else if (invol == "symplectic") {
    s.set_col(I(1, 1), SVec::unit(I(2, 2)));
    s.set_col(I(2, 2), SVec::unit(I(1, 1)));
    s.set_col(I(1, 2), SVec::unit(I(1, 2)) * Cyclo(-1));
    s.set_col(I(2, 1), SVec::unit(I(2, 1)) * Cyclo(-1));
  } else {
    throw MathError("unknown involution " + invol);
  }
  m->set_involution(std::move(s));
  return m;
}

// q-matrices as vectors in the E-basis of mat2_with
SVec qmat(int k) {
  switch (k) {
    case 0: return SVec::unit(0) + SVec::unit(3);                 // 1
    case 1: return SVec::unit(1) + SVec::unit(2);                 // (0 1;1 0)
    case 2: return SVec::unit(0) - SVec::unit(3);                 // (1 0;0 -1)
    case 3: return SVec::unit(2) - SVec::unit(1);                 // (0 -1;1 0)
  }
  throw MathError("bad q index");
}

GElem qdeg(int k) {
  switch (k) {
    case 0: return GElem{{0, 0}};
    case 1: return GElem{{1, 0}};
    case 2: return GElem{{0, 1}};
    case 3: return GElem{{1, 1}};
  }
  throw MathError("bad q index");
}

SVec tensor2(const SVec& x, int dimB, const SVec& y) {
  SVec r;
  for (const auto& [i, ci] : x.t)
    for (const auto& [j, cj] : y.t) r.push(i * dimB + j, ci * cj);
  return r;
}

JordanAlg finish_graded_jordan(AlgebraPtr amb, const std::string& name,
                               std::vector<std::pair<GElem, SVec>> gens,
                               const AbGroup& group, GradedJordan& out) {
  // sanity: all listed generators are hermitian in the ambient algebra
  for (auto& [d, v] : gens)
    if (!(amb->conj(v) == v)) throw MathError(name + ": listed element is not hermitian");
  std::vector<std::string> labels;
  std::vector<SVec> basis;
  std::vector<GElem> degs;
  for (size_t i = 0; i < gens.size(); ++i) {
    labels.push_back("h" + std::to_string(i));
    basis.push_back(gens[i].second);
    degs.push_back(g_reduce(group, gens[i].first));
  }
  auto jalg = std::make_shared<AlgebraSC>(
      subalgebra_on_basis(*amb, name, labels, basis, ProductRule::Symmetrized));
  // unit = identity matrix of the ambient, expressed in the new basis
  CoordSolver cs(amb->dim(), basis);
  auto unit_coords = cs.coords(*amb->unit());
  if (!unit_coords) throw MathError(name + ": ambient unit missing from the span");
  jalg->set_unit(*unit_coords);
  jalg->set_involution(LinOp::identity((int)basis.size()));

  JordanAlg j;
  j.algebra = jalg;
  j.n = 4;
  int dim = (int)basis.size();
  // normalized trace via tr(R_x)/dim (the generic trace of a simple Jordan
  // algebra)
  j.trace_form.assign((size_t)dim, Cyclo(0));
  for (int i = 0; i < dim; ++i)
    j.trace_form[(size_t)i] = jalg->left_mult(SVec::unit(i)).trace() / Cyclo(dim);
  j.j0 = RowSpace(dim);
  {
    // kernel of the trace form
    EchelonSolver t(dim);
    SVec row;
    for (int i = 0; i < dim; ++i) row.push(i, j.trace_form[(size_t)i]);
    t.add_row(row);
    j.j0 = t.kernel();
  }
  out.jordan = j;
  out.grading = Grading::from_degrees(jalg, group, degs);
  return j;
}

}  // namespace

GradedJordan jordan4_grading(HurwitzKind ck, const std::string& id) {
  if (ck == HurwitzKind::Cayley) throw MathError("H_4 needs an associative coefficient algebra");
  bool fine = id == "fine";
  if (!fine && id != "mixed") throw MathError("unknown jordan4 grading id: " + id);
  GradedJordan out;

  if (fine) {
    // involution transpose (x) transpose ((x) bar); homogeneous hermitian
    // spanning sets from the Pauli basis
    AlgebraPtr m2 = mat2_with("transpose");
    AlgebraSC m4 = tensor(*m2, *m2);
    std::vector<std::pair<GElem, SVec>> gens;
    auto add44 = [&](int i, int j) {
      gens.emplace_back(g_concat(AbGroup{0, {2, 2}}, qdeg(i), AbGroup{0, {2, 2}}, qdeg(j)),
                        tensor2(qmat(i), 4, qmat(j)));
    };
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) add44(i, j);
    add44(3, 3);
    if (ck == HurwitzKind::F) {
      auto amb = std::make_shared<AlgebraSC>(std::move(m4));
      finish_graded_jordan(amb, "H4(F)[fine]", std::move(gens), AbGroup{0, {2, 2, 2, 2}}, out);
      return out;
    }
    AlgebraPtr cf = build_hurwitz(ck);
    auto amb = std::make_shared<AlgebraSC>(tensor(m4, *cf));
    int dc = cf->dim();
    AbGroup g4{0, {2, 2, 2, 2}};
    std::vector<std::pair<GElem, SVec>> lifted;
    SVec one_c = *cf->unit();
    for (auto& [d, v] : gens) lifted.emplace_back(d, tensor2(v, dc, one_c));
    if (ck == HurwitzKind::K) {
      // skew part of K is spanned by e1 - e2 at degree 1
      SVec kap = SVec::unit(cf->index_of("e1")) - SVec::unit(cf->index_of("e2"));
      AbGroup g{0, {2, 2, 2, 2, 2}};
      std::vector<std::pair<GElem, SVec>> gens5;
      for (auto& [d, v] : lifted) gens5.emplace_back(g_concat(g4, d, AbGroup{0, {2}}, GElem{{0}}), v);
      auto skew_add = [&](int i, int j) {
        GElem d{{qdeg(i).v[0], qdeg(i).v[1], qdeg(j).v[0], qdeg(j).v[1], 1}};
        gens5.emplace_back(std::move(d), tensor2(tensor2(qmat(i), 4, qmat(j)), dc, kap));
      };
      for (int i = 0; i <= 2; ++i) {
        skew_add(i, 3);
        skew_add(3, i);
      }
      finish_graded_jordan(amb, "H4(K)[fine]", std::move(gens5), g, out);
      return out;
    }
    // ck == Q: skew part of Q is q1, q2, q3 with the Pauli degrees
    AbGroup g{0, {2, 2, 2, 2, 2, 2}};
    std::vector<std::pair<GElem, SVec>> gens6;
    for (auto& [d, v] : lifted) gens6.emplace_back(g_concat(g4, d, AbGroup{0, {2, 2}}, GElem{{0, 0}}), v);
    // q-basis of the quaternion coefficient algebra: e1,e2,u1,v1 model
    auto qc = [&](int k) {
      int e1 = cf->index_of("e1"), e2 = cf->index_of("e2");
      int u1 = cf->index_of("u1"), v1 = cf->index_of("v1");
      switch (k) {
        case 1: return SVec::unit(u1) + SVec::unit(v1);
        case 2: return SVec::unit(e1) - SVec::unit(e2);
        case 3: return SVec::unit(v1) - SVec::unit(u1);
      }
      throw MathError("bad q index");
    };
    for (int k = 1; k <= 3; ++k) {
      auto skew_add = [&](int i, int j) {
        gens6.emplace_back(
            g_concat(g4, g_concat(AbGroup{0, {2, 2}}, qdeg(i), AbGroup{0, {2, 2}}, qdeg(j)),
                     AbGroup{0, {2, 2}}, qdeg(k)),
            tensor2(tensor2(qmat(i), 4, qmat(j)), dc, qc(k)));
      };
      for (int i = 0; i <= 2; ++i) {
        skew_add(i, 3);
        skew_add(3, i);
      }
    }
    finish_graded_jordan(amb, "H4(Q)[fine]", std::move(gens6), g, out);
    return out;
  }

  // mixed gradings
  if (ck == HurwitzKind::Q) {
    // Z from the Cartan grading of the quaternion coefficient slot
    AlgebraPtr m2 = mat2_with("transpose");
    AlgebraSC m4 = tensor(*m2, *m2);
    AlgebraPtr cf = build_hurwitz(HurwitzKind::Q);
    auto amb = std::make_shared<AlgebraSC>(tensor(m4, *cf));
    int dc = 4;
    AbGroup g{1, {2, 2, 2, 2}};
    auto deg = [&](long long z, GElem a, GElem b) {
      return GElem{{z, a.v[0], a.v[1], b.v[0], b.v[1]}};
    };
    std::vector<std::pair<GElem, SVec>> gens;
    SVec one_c = *cf->unit();
    auto sym_add = [&](int i, int j) {
      gens.emplace_back(deg(0, qdeg(i), qdeg(j)), tensor2(tensor2(qmat(i), 4, qmat(j)), dc, one_c));
    };
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) sym_add(i, j);
    sym_add(3, 3);
    // skew coefficient parts e1-e2 (deg 0), u1 (+1), v1 (-1)
    struct SkewC { long long z; SVec v; };
    std::vector<SkewC> sk;
    sk.push_back({0, SVec::unit(cf->index_of("e1")) - SVec::unit(cf->index_of("e2"))});
    sk.push_back({1, SVec::unit(cf->index_of("u1"))});
    sk.push_back({-1, SVec::unit(cf->index_of("v1"))});
    for (const auto& s : sk) {
      auto skew_add = [&](int i, int j) {
        gens.emplace_back(deg(s.z, qdeg(i), qdeg(j)),
                          tensor2(tensor2(qmat(i), 4, qmat(j)), dc, s.v));
      };
      for (int i = 0; i <= 2; ++i) {
        skew_add(i, 3);
        skew_add(3, i);
      }
    }
    finish_graded_jordan(amb, "H4(Q)[mixed]", std::move(gens), g, out);
    return out;
  }

  // C = F or K: Z comes from the first Kronecker slot with the q1-twisted
  // orthogonal involution, which fixes E12 and E21
  AlgebraPtr m2a = mat2_with("q1twist");
  AlgebraPtr m2b = mat2_with("transpose");
  AlgebraSC m4 = tensor(*m2a, *m2b);
  auto E = [&](int a, int b) { return SVec::unit((a - 1) * 2 + (b - 1)); };
  // hermitian homogeneous spanning family of the 10-dim twisted H_4(F)
  struct Gen { long long z; GElem pauli; SVec v; };
  std::vector<Gen> base;
  for (int j = 0; j <= 2; ++j) {
    base.push_back({0, qdeg(j), tensor2(E(1, 1), 4, qmat(j)) + tensor2(E(2, 2), 4, qmat(j))});
    base.push_back({1, qdeg(j), tensor2(E(1, 2), 4, qmat(j))});
    base.push_back({-1, qdeg(j), tensor2(E(2, 1), 4, qmat(j))});
  }
  base.push_back({0, qdeg(3), tensor2(E(1, 1), 4, qmat(3)) - tensor2(E(2, 2), 4, qmat(3))});
  if (ck == HurwitzKind::F) {
    auto amb = std::make_shared<AlgebraSC>(std::move(m4));
    AbGroup g{1, {2, 2}};
    std::vector<std::pair<GElem, SVec>> gens;
    for (auto& b : base)
      gens.emplace_back(GElem{{b.z, b.pauli.v[0], b.pauli.v[1]}}, b.v);
    finish_graded_jordan(amb, "H4(F)[mixed]", std::move(gens), g, out);
    return out;
  }
  // ck == K
  AlgebraPtr cf = build_hurwitz(HurwitzKind::K);
  auto amb = std::make_shared<AlgebraSC>(tensor(m4, *cf));
  int dc = 2;
  SVec one_c = *cf->unit();
  SVec kap = SVec::unit(cf->index_of("e1")) - SVec::unit(cf->index_of("e2"));
  AbGroup g{1, {2, 2, 2}};
  std::vector<std::pair<GElem, SVec>> gens;
  for (auto& b : base)
    gens.emplace_back(GElem{{b.z, b.pauli.v[0], b.pauli.v[1], 0}}, tensor2(b.v, dc, one_c));
  // Mat_4-antihermitian homogeneous pieces tensor the skew coefficient kappa
  struct AGen { long long z; GElem pauli; SVec v; };
  std::vector<AGen> anti;
  anti.push_back({1, qdeg(3), tensor2(E(1, 2), 4, qmat(3))});
  anti.push_back({-1, qdeg(3), tensor2(E(2, 1), 4, qmat(3))});
  for (int j = 0; j <= 2; ++j)
    anti.push_back({0, qdeg(j), tensor2(E(1, 1), 4, qmat(j)) - tensor2(E(2, 2), 4, qmat(j))});
  anti.push_back({0, qdeg(3), tensor2(E(1, 1), 4, qmat(3)) + tensor2(E(2, 2), 4, qmat(3))});
  for (auto& b : anti)
    gens.emplace_back(GElem{{b.z, b.pauli.v[0], b.pauli.v[1], 1}}, tensor2(b.v, dc, kap));
  finish_graded_jordan(amb, "H4(K)[mixed]", std::move(gens), g, out);
  return out;
}

GradedDivisionH4Q graded_division_grading_h4q() {
  GradedDivisionH4Q out;
  // D = quaternions with tau-degree regrading; R = Mat_2(F) (x) D with the
  // A = diag(1, q1) twisted transpose involution
  AlgebraPtr m2 = mat2_with("transpose");
  AlgebraSC r0 = tensor(*m2, *m2);  // second factor carries tau^o = transpose
  // twist: x* = A (t (x) tau)(x) A with A = E11 (x) 1 + E22 (x) q1
  SVec amat = tensor2(SVec::unit(0), 4, qmat(0)) + tensor2(SVec::unit(3), 4, qmat(1));
  LinOp la = r0.left_mult(amat), ra = r0.right_mult(amat);
  LinOp twisted = la.compose(ra).compose(*r0.involution());
  r0.set_involution(twisted);
  std::string w;
  if (!r0.check_involution(&w)) throw MathError("twisted involution on R failed: " + w);
  auto r = std::make_shared<AlgebraSC>(std::move(r0));

  AlgebraPtr qouter = build_hurwitz(HurwitzKind::Q);  // bar = symplectic tau^s
  auto amb = std::make_shared<AlgebraSC>(tensor(*qouter, *r));

  // degrees in R: Z4 x Z2, deg(E_ab (x) d) = deg v_a - deg v_b + deg d with
  // deg v_1 = 0, deg v_2 = (1,0); deg 1 = (0,0), q1 = (2,0), q2 = (0,1),
  // q3 = (2,1)
  AbGroup gr{0, {4, 2}};
  auto ddeg = [&](int k) {
    switch (k) {
      case 0: return GElem{{0, 0}};
      case 1: return GElem{{2, 0}};
      case 2: return GElem{{0, 1}};
      case 3: return GElem{{2, 1}};
    }
    throw MathError("bad q index");
  };
  auto E = [&](int a, int b) { return SVec::unit((a - 1) * 2 + (b - 1)); };
  auto tauo = [&](int p) { return p == 3 ? qmat(3) * Cyclo(-1) : qmat(p); };

  struct RGen { GElem d; SVec v; };
  std::vector<RGen> kpart, hpart;
  kpart.push_back({ddeg(3), tensor2(E(1, 1), 4, qmat(3))});
  kpart.push_back({ddeg(2), tensor2(E(2, 2), 4, qmat(2))});
  for (int p = 0; p <= 3; ++p) {
    SVec tq = r->multiply(tensor2(qmat(0), 4, tauo(p)), tensor2(qmat(0), 4, qmat(1)));
    // X_p = E21 (x) p - E12 (x) tau(p) q1; deg = (1,0) + deg(p)
    SVec v = tensor2(E(2, 1), 4, qmat(p));
    v.axpy(Cyclo(-1), r->multiply(tensor2(E(1, 2), 4, qmat(0)), tq));
    kpart.push_back({g_add(gr, GElem{{1, 0}}, ddeg(p)), std::move(v)});
  }
  for (int p : {0, 1, 2}) hpart.push_back({ddeg(p), tensor2(E(1, 1), 4, qmat(p))});
  for (int p : {0, 1, 3}) hpart.push_back({ddeg(p), tensor2(E(2, 2), 4, qmat(p))});
  for (int p = 0; p <= 3; ++p) {
    SVec tq = r->multiply(tensor2(qmat(0), 4, tauo(p)), tensor2(qmat(0), 4, qmat(1)));
    SVec v = tensor2(E(2, 1), 4, qmat(p));
    v.axpy(Cyclo(1), r->multiply(tensor2(E(1, 2), 4, qmat(0)), tq));
    hpart.push_back({g_add(gr, GElem{{1, 0}}, ddeg(p)), std::move(v)});
  }
  // verify skew/hermitian as claimed
  for (auto& g : kpart)
    if (!(r->conj(g.v) == -g.v)) throw MathError("K(R) element not skew");
  for (auto& g : hpart)
    if (!(r->conj(g.v) == g.v)) throw MathError("H(R) element not hermitian");

  // outer quaternion pieces under tau^s: skew = q1,q2,q3 with Z2^2 degrees
  auto qc = [&](int k) {
    int e1 = qouter->index_of("e1"), e2 = qouter->index_of("e2");
    int u1 = qouter->index_of("u1"), v1 = qouter->index_of("v1");
    switch (k) {
      case 1: return SVec::unit(u1) + SVec::unit(v1);
      case 2: return SVec::unit(e1) - SVec::unit(e2);
      case 3: return SVec::unit(v1) - SVec::unit(u1);
    }
    throw MathError("bad q");
  };
  AbGroup gout{0, {2, 2}};
  AbGroup gtot = AbGroup::product(gr, gout);  // Z4 x Z2 x Z2^2 = Z4 x Z2^3

  std::vector<std::pair<GElem, SVec>> jgens;
  for (int k = 1; k <= 3; ++k)
    for (auto& g : kpart)
      jgens.emplace_back(g_concat(gr, g.d, gout, qdeg(k)), tensor2(qc(k), 16, g.v));
  for (auto& g : hpart)
    jgens.emplace_back(g_concat(gr, g.d, gout, GElem{{0, 0}}), tensor2(*qouter->unit(), 16, g.v));
  finish_graded_jordan(amb, "H4(Q)[gdiv]", std::move(jgens), gtot, out.jordan);

  // skew part of the big algebra: q_i (x) H  +  1 (x) K, a Lie algebra under
  // commutators (type c4, isomorphic to Der H_4(Q))
  std::vector<std::string> labels;
  std::vector<SVec> basis;
  std::vector<GElem> degs;
  int idx = 0;
  for (int k = 1; k <= 3; ++k)
    for (auto& g : hpart) {
      labels.push_back("k" + std::to_string(idx++));
      basis.push_back(tensor2(qc(k), 16, g.v));
      degs.push_back(g_reduce(gtot, g_concat(gr, g.d, gout, qdeg(k))));
    }
  for (auto& g : kpart) {
    labels.push_back("k" + std::to_string(idx++));
    basis.push_back(tensor2(*qouter->unit(), 16, g.v));
    degs.push_back(g_reduce(gtot, g_concat(gr, g.d, gout, GElem{{0, 0}})));
  }
  for (auto& v : basis)
    if (!(amb->conj(v) == -v)) throw MathError("skew-lie element not skew");
  auto lie = std::make_shared<AlgebraSC>(
      subalgebra_on_basis(*amb, "K(QxR)", labels, basis, ProductRule::Commutator));
  out.skew_lie = lie;
  out.skew_grading = Grading::from_degrees(lie, gtot, degs);
  return out;
}

}  // namespace exf
