#include "exforge/structurable.hpp"

#include <array>

namespace exf {

InvAlgebra make_inv_algebra(AlgebraPtr a) {
  if (!a->involution()) throw MathError("algebra has no involution");
  int n = a->dim();
  InvAlgebra ia;
  ia.herm = kernel_of(*a->involution() - LinOp::identity(n));
  ia.skew = kernel_of(*a->involution() + LinOp::identity(n));
  if (ia.herm.rank() + ia.skew.rank() != n)
    throw MathError("involution is not diagonalizable into herm + skew");
  ia.algebra = std::move(a);
  return ia;
}

LinOp v_op(const AlgebraSC& a, const SVec& x, const SVec& y) {
  SVec xb = a.conj(x), yb = a.conj(y);
  SVec xyb = a.multiply(x, yb);
  LinOp op = a.left_mult(xyb);
  int n = a.dim();
  for (int z = 0; z < n; ++z) {
    SVec col = op.col(z);
    col.axpy(Cyclo(1), a.multiply(a.multiply(SVec::unit(z), yb), x));
    col.axpy(Cyclo(-1), a.multiply(a.multiply(SVec::unit(z), xb), y));
    op.set_col(z, std::move(col));
  }
  return op;
}

std::optional<SVec> InstrData::op_coords(const LinOp& op) const {
  return coords->coords(op.flatten());
}

InstrData instr_and_epsilon(const InvAlgebra& ia) {
  const AlgebraSC& a = *ia.algebra;
  int n = a.dim();
  InstrData d;
  d.dim = n;
  d.span = RowSpace(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinOp v = v_op(a, SVec::unit(i), SVec::unit(j));
      if (d.span.insert(v.flatten())) {
        d.basis.push_back(std::move(v));
        d.gen_pairs.emplace_back(i, j);
      }
    }
  int k = (int)d.basis.size();
  std::vector<SVec> flat;
  for (const LinOp& op : d.basis) flat.push_back(op.flatten());
  d.coords = std::make_unique<CoordSolver>(n * n, flat);

  // epsilon on the chosen basis, then consistency across every generator
  d.epsilon = LinOp(k, k);
  for (int p = 0; p < k; ++p) {
    auto [i, j] = d.gen_pairs[(size_t)p];
    LinOp img = v_op(a, SVec::unit(j), SVec::unit(i)) * Cyclo(-1);
    auto c = d.op_coords(img);
    if (!c) throw MathError("epsilon image escapes the inner structure span");
    d.epsilon.set_col(p, *c);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto c1 = d.op_coords(v_op(a, SVec::unit(i), SVec::unit(j)));
      auto c2 = d.op_coords(v_op(a, SVec::unit(j), SVec::unit(i)) * Cyclo(-1));
      if (!c1 || !c2)
        throw MathError("V operator escapes its own span (internal error)");
      if (!(d.epsilon.apply(*c1) == *c2))
        throw MathError("epsilon is not well defined on the V-span at pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!(d.epsilon.compose(d.epsilon) == LinOp::identity(k)))
    throw MathError("epsilon is not involutive");

  // bracket expansion table; also certifies closure of the span
  d.bracket.assign((size_t)k, std::vector<SVec>((size_t)k));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < p; ++q) {
      LinOp br = d.basis[(size_t)p].commutator(d.basis[(size_t)q]);
      auto c = d.op_coords(br);
      if (!c)
        throw MathError("V-span is not closed under brackets at (" + std::to_string(p) + "," +
                        std::to_string(q) + ")");
      d.bracket[(size_t)p][(size_t)q] = *c;
      d.bracket[(size_t)q][(size_t)p] = -d.bracket[(size_t)p][(size_t)q];
    }
  return d;
}

StructurableReport is_structurable(const InvAlgebra& ia) {
  const AlgebraSC& a = *ia.algebra;
  StructurableReport rep;
  if (!a.unit() || !a.check_unital(&rep.witness)) {
    throw MathError("is_structurable requires a unital algebra");
  }
  int n = a.dim();
  InstrData d;
  try {
    d = instr_and_epsilon(ia);
  } catch (const MathError& e) {
    rep.ok = false;
    rep.witness = e.what();
    return rep;
  }
  int k = (int)d.basis.size();
  // companions V_{y_p, x_p} for the chosen spanning pairs
  std::vector<LinOp> companion;
  for (auto [i, j] : d.gen_pairs)
    companion.push_back(v_op(a, SVec::unit(j), SVec::unit(i)));

  for (int zi = 0; zi < n; ++zi) {
    for (int wi = 0; wi < n; ++wi) {
      LinOp vzw = v_op(a, SVec::unit(zi), SVec::unit(wi));
      for (int p = 0; p < k; ++p) {
        const LinOp& D = d.basis[(size_t)p];
        const LinOp& E = companion[(size_t)p];
        LinOp lhs = D.commutator(vzw);
        LinOp rhs = v_op(a, D.col(zi), SVec::unit(wi)) - v_op(a, SVec::unit(zi), E.col(wi));
        if (!(lhs == rhs)) {
          auto [xi, yi] = d.gen_pairs[(size_t)p];
          rep.ok = false;
          rep.witness = "identity fails at basis quadruple (x,y,z,w) = (" +
                        a.labels()[(size_t)xi] + "," + a.labels()[(size_t)yi] + "," +
                        a.labels()[(size_t)zi] + "," + a.labels()[(size_t)wi] + ")";
          return rep;
        }
      }
    }
  }
  return rep;
}

InvAlgebra cd_jordan4(const JordanAlg& j, const Cyclo& mu) {
  if (mu.is_zero()) throw MathError("doubling parameter mu must be nonzero");
  const AlgebraSC& ja = *j.algebra;
  int n = ja.dim();
  // theta(x) = -x + 2 t(x) 1
  LinOp theta(n, n);
  for (int i = 0; i < n; ++i) {
    SVec col = SVec::unit(i) * Cyclo(-1);
    col.axpy(Cyclo(2) * j.trace_form[(size_t)i], *ja.unit());
    theta.set_col(i, std::move(col));
  }
  std::vector<std::string> labels;
  for (const auto& l : ja.labels()) labels.push_back(l);
  for (const auto& l : ja.labels()) labels.push_back("v*" + l);
  auto d = std::make_shared<AlgebraSC>("CD(" + ja.name() + ")", std::move(labels));
  auto shift = [&](const SVec& v) {
    SVec r = v;
    for (auto& [i, x] : r.t) i += n;
    return r;
  };
  for (int i = 0; i < 2 * n; ++i)
    for (int j2 = 0; j2 < 2 * n; ++j2) {
      SVec x1 = i < n ? SVec::unit(i) : SVec();
      SVec x2 = i < n ? SVec() : SVec::unit(i - n);
      SVec x3 = j2 < n ? SVec::unit(j2) : SVec();
      SVec x4 = j2 < n ? SVec() : SVec::unit(j2 - n);
      // x1 x3 + mu (x2 x4^th)^th + v(x1^th x4 + (x2^th x3^th)^th)
      SVec even = ja.multiply(x1, x3);
      even.axpy(mu, theta.apply(ja.multiply(x2, theta.apply(x4))));
      SVec odd = ja.multiply(theta.apply(x1), x4);
      odd.axpy(Cyclo(1), theta.apply(ja.multiply(theta.apply(x2), theta.apply(x3))));
      SVec prod = even;
      prod.axpy(Cyclo(1), shift(odd));
      d->set_mul(i, j2, std::move(prod));
    }
  d->set_unit(*ja.unit());
  LinOp bar(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) bar.set_col(i, SVec::unit(i));
  for (int i = 0; i < n; ++i) bar.set_col(n + i, shift(theta.col(i)) * Cyclo(-1));
  d->set_involution(std::move(bar));
  return make_inv_algebra(d);
}

InvAlgebra brown_algebra(const CubicData& cd) {
  const AlgebraSC& alb = *cd.albert.algebra;
  int m = alb.dim();
  std::vector<std::string> labels = {"a", "b"};
  for (const auto& l : alb.labels()) labels.push_back("x[" + l + "]");
  for (const auto& l : alb.labels()) labels.push_back("y[" + l + "]");
  auto br = std::make_shared<AlgebraSC>("Brown", labels);
  int N = 2 + 2 * m;
  auto slot = [&](int which, int k) { return which == 0 ? 2 + k : 2 + m + k; };
  // decompose an element as (alpha, x; y, beta)
  struct Elem {
    Cyclo alpha, beta;
    SVec x, y;
  };
  auto basis_elem = [&](int i) {
    Elem e{Cyclo(0), Cyclo(0), {}, {}};
    if (i == 0)
      e.alpha = Cyclo(1);
    else if (i == 1)
      e.beta = Cyclo(1);
    else if (i < 2 + m)
      e.x = SVec::unit(i - 2);
    else
      e.y = SVec::unit(i - 2 - m);
    return e;
  };
  auto pack = [&](const Elem& e) {
    SVec v;
    if (!e.alpha.is_zero()) v.push(0, e.alpha);
    if (!e.beta.is_zero()) v.push(1, e.beta);
    for (const auto& [k, c] : e.x.t) v.axpy(c, SVec::unit(slot(0, k)));
    for (const auto& [k, c] : e.y.t) v.axpy(c, SVec::unit(slot(1, k)));
    return v;
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Elem u = basis_elem(i), v = basis_elem(j);
      Elem p{Cyclo(0), Cyclo(0), {}, {}};
      p.alpha = u.alpha * v.alpha + cd.T2val(u.x, v.y);
      p.beta = u.beta * v.beta + cd.T2val(v.x, u.y);
      p.x = v.x * u.alpha + u.x * v.beta + cd.cross(u.y, v.y);
      p.y = u.y * v.alpha + v.y * u.beta + cd.cross(u.x, v.x);
      br->set_mul(i, j, pack(p));
    }
  br->set_unit(SVec::unit(0) + SVec::unit(1));
  LinOp bar(N, N);
  bar.set_col(0, SVec::unit(1));
  bar.set_col(1, SVec::unit(0));
  for (int k = 0; k < m; ++k) bar.set_col(slot(0, k), SVec::unit(slot(0, k)));
  for (int k = 0; k < m; ++k) bar.set_col(slot(1, k), SVec::unit(slot(1, k)));
  br->set_involution(std::move(bar));
  return make_inv_algebra(br);
}

// ---------------------------------------------------------------------------
// matrix model of H_4(Q) and the Z_4^3 grading

namespace {

using M8 = std::array<std::array<Cyclo, 8>, 8>;

M8 m8_zero() {
  M8 m;
  for (auto& r : m)
    for (auto& x : r) x = Cyclo(0);
  return m;
}

M8 m8_mul(const M8& a, const M8& b) {
  M8 r = m8_zero();
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      if (a[(size_t)i][(size_t)k].is_zero()) continue;
      for (int j = 0; j < 8; ++j)
        if (!b[(size_t)k][(size_t)j].is_zero())
          r[(size_t)i][(size_t)j] += a[(size_t)i][(size_t)k] * b[(size_t)k][(size_t)j];
    }
  return r;
}

// skew 4x4 coordinates (a<b), order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
const std::array<std::pair<int, int>, 6> kOff = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

JordanAlg jmodel_h4q() {
  std::vector<std::string> labels;
  std::vector<M8> basis;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      labels.push_back("z" + std::to_string(a) + std::to_string(b));
      M8 m = m8_zero();
      m[(size_t)a][(size_t)b] = Cyclo(1);
      m[(size_t)(4 + b)][(size_t)(4 + a)] = Cyclo(1);
      basis.push_back(m);
    }
  for (auto [a, b] : kOff) {
    labels.push_back("x" + std::to_string(a) + std::to_string(b));
    M8 m = m8_zero();
    m[(size_t)a][(size_t)(4 + b)] = Cyclo(1);
    m[(size_t)b][(size_t)(4 + a)] = Cyclo(-1);
    basis.push_back(m);
  }
  for (auto [a, b] : kOff) {
    labels.push_back("y" + std::to_string(a) + std::to_string(b));
    M8 m = m8_zero();
    m[(size_t)(4 + a)][(size_t)b] = Cyclo(1);
    m[(size_t)(4 + b)][(size_t)a] = Cyclo(-1);
    basis.push_back(m);
  }
  int dim = 28;
  auto to_coords = [&](const M8& m) {
    SVec v;
    int pos = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) v.axpy(m[(size_t)a][(size_t)b], SVec::unit(pos++));
    for (auto [a, b] : kOff) v.axpy(m[(size_t)a][(size_t)(4 + b)], SVec::unit(pos++));
    for (auto [a, b] : kOff) v.axpy(m[(size_t)(4 + a)][(size_t)b], SVec::unit(pos++));
    // consistency of the block structure
    M8 rec = m8_zero();
    {
      SVec w = v;
      int p2 = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          Cyclo c = w.at(p2++);
          rec[(size_t)a][(size_t)b] = c;
          rec[(size_t)(4 + b)][(size_t)(4 + a)] = c;
        }
      for (auto [a, b] : kOff) {
        Cyclo c = w.at(p2++);
        rec[(size_t)a][(size_t)(4 + b)] = c;
        rec[(size_t)b][(size_t)(4 + a)] = -c;
      }
      for (auto [a, b] : kOff) {
        Cyclo c = w.at(p2++);
        rec[(size_t)(4 + a)][(size_t)b] = c;
        rec[(size_t)(4 + b)][(size_t)a] = -c;
      }
    }
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (!(rec[(size_t)i][(size_t)j] == m[(size_t)i][(size_t)j]))
          throw MathError("jmodel: product escapes the block shape");
    return v;
  };

  auto alg = std::make_shared<AlgebraSC>("H4(Q)[jmodel]", labels);
  Cyclo half(Rat(1, 2));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      M8 p = m8_mul(basis[(size_t)i], basis[(size_t)j]);
      M8 q = m8_mul(basis[(size_t)j], basis[(size_t)i]);
      M8 s = m8_zero();
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
          s[(size_t)r][(size_t)c] = (p[(size_t)r][(size_t)c] + q[(size_t)r][(size_t)c]) * half;
      SVec coords = to_coords(s);
      alg->set_mul(i, j, coords);
      if (i != j) alg->set_mul(j, i, std::move(coords));
    }
  SVec unit;
  for (int a = 0; a < 4; ++a) unit.axpy(Cyclo(1), SVec::unit(a * 4 + a));
  alg->set_unit(unit);
  alg->set_involution(LinOp::identity(dim));

  JordanAlg j;
  j.algebra = alg;
  j.coeff = HurwitzKind::Q;
  j.n = 4;
  j.trace_form.assign((size_t)dim, Cyclo(0));
  for (int a = 0; a < 4; ++a) j.trace_form[(size_t)(a * 4 + a)] = Cyclo(Rat(1, 4));
  EchelonSolver t(dim);
  SVec row;
  for (int i = 0; i < dim; ++i)
    if (!j.trace_form[(size_t)i].is_zero()) row.push(i, j.trace_form[(size_t)i]);
  t.add_row(row);
  j.j0 = t.kernel();
  return j;
}

namespace {

using M4 = std::array<std::array<Cyclo, 4>, 4>;

M4 m4_zero() {
  M4 m;
  for (auto& r : m)
    for (auto& x : r) x = Cyclo(0);
  return m;
}

M4 m4_mul(const M4& a, const M4& b) {
  M4 r = m4_zero();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[(size_t)i][(size_t)k].is_zero()) continue;
      for (int j = 0; j < 4; ++j)
        r[(size_t)i][(size_t)j] += a[(size_t)i][(size_t)k] * b[(size_t)k][(size_t)j];
    }
  return r;
}

M4 m4_transpose(const M4& a) {
  M4 r = m4_zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[(size_t)i][(size_t)j] = a[(size_t)j][(size_t)i];
  return r;
}

M4 m4_inverse(const M4& a) {
  LinOp op(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!a[(size_t)i][(size_t)j].is_zero()) op.set_entry(i, j, a[(size_t)i][(size_t)j]);
  LinOp inv = op.inverse();
  M4 r = m4_zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[(size_t)i][(size_t)j] = inv.entry(i, j);
  return r;
}

// Psi(u) on the 28-dim matrix model: (z,x;y,z^t) -> (uzu^-1, uxu^t; u^-t y u^-1, .)
LinOp psi_on_jmodel(const M4& u) {
  M4 uinv = m4_inverse(u);
  M4 ut = m4_transpose(u);
  M4 uinvt = m4_transpose(uinv);
  LinOp op(28, 28);
  auto zidx = [](int a, int b) { return a * 4 + b; };
  auto offpos = [&](int a, int b) {
    for (int k = 0; k < 6; ++k)
      if (kOff[(size_t)k].first == a && kOff[(size_t)k].second == b) return k;
    throw MathError("bad off index");
  };
  // z-block: E_ab -> u E_ab u^-1
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      SVec col;
      std::vector<std::pair<int, Cyclo>> terms;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          Cyclo v = u[(size_t)r][(size_t)a] * uinv[(size_t)b][(size_t)c];
          if (!v.is_zero()) terms.emplace_back(zidx(r, c), v);
        }
      std::sort(terms.begin(), terms.end(),
                [](const auto& p, const auto& q) { return p.first < q.first; });
      for (auto& [i, c] : terms) col.push(i, c);
      op.set_col(zidx(a, b), std::move(col));
    }
  // x-block: skew x -> u x u^t ; y-block: y -> u^-t y u^-1
  auto skew_map = [&](const M4& l, const M4& rmat, int base) {
    for (int k = 0; k < 6; ++k) {
      auto [a, b] = kOff[(size_t)k];
      M4 x = m4_zero();
      x[(size_t)a][(size_t)b] = Cyclo(1);
      x[(size_t)b][(size_t)a] = Cyclo(-1);
      M4 img = m4_mul(m4_mul(l, x), rmat);
      SVec col;
      for (int k2 = 0; k2 < 6; ++k2) {
        auto [c, dd] = kOff[(size_t)k2];
        Cyclo v = img[(size_t)c][(size_t)dd];
        if (!v.is_zero()) col.push(base + k2, v);
      }
      op.set_col(base + offpos(a, b), std::move(col));
    }
  };
  skew_map(u, ut, 16);
  skew_map(uinvt, uinv, 22);
  return op;
}

}  // namespace

Z43Data z43_grading_on_cd_h4q() {
  Z43Data out;
  JordanAlg jm = jmodel_h4q();
  out.a = cd_jordan4(jm, Cyclo(1));
  AlgebraPtr A = out.a.algebra;
  int n = 56;

  // Z_4 grading: deg 0 = z-block, 1 = x-block + v y-block, 2 = v z-block,
  // 3 = v x-block + y-block
  std::vector<GElem> deg((size_t)n);
  for (int i = 0; i < 16; ++i) deg[(size_t)i] = GElem{{0}};
  for (int i = 16; i < 22; ++i) deg[(size_t)i] = GElem{{1}};
  for (int i = 22; i < 28; ++i) deg[(size_t)i] = GElem{{3}};
  for (int i = 28; i < 44; ++i) deg[(size_t)i] = GElem{{2}};
  for (int i = 44; i < 50; ++i) deg[(size_t)i] = GElem{{3}};
  for (int i = 50; i < 56; ++i) deg[(size_t)i] = GElem{{1}};
  out.z4 = Grading::from_degrees(A, AbGroup::cyclic(4), deg);

  // automorphisms
  Cyclo im = Cyclo::root_of_unity(1, 4);
  Cyclo xi = Cyclo::root_of_unity(1, 8);  // xi^2 = i
  M4 X = m4_zero(), Y = m4_zero();
  for (int k = 0; k < 4; ++k) X[(size_t)k][(size_t)k] = im.pow(k);
  for (int k = 0; k < 4; ++k) Y[(size_t)k][(size_t)(k + 1) % 4] = Cyclo(1);
  M4 xiX = m4_zero();
  for (int k = 0; k < 4; ++k) xiX[(size_t)k][(size_t)k] = xi * im.pow(k);

  auto extend_to_cd = [&](const LinOp& on_j) {
    LinOp op(n, n);
    for (int j = 0; j < 28; ++j) {
      op.set_col(j, on_j.col(j));
      SVec shifted = on_j.col(j);
      for (auto& [i, c] : shifted.t) i += 28;
      op.set_col(28 + j, std::move(shifted));
    }
    return op;
  };
  LinOp psi_xiX = extend_to_cd(psi_on_jmodel(xiX));
  LinOp psi_Y = extend_to_cd(psi_on_jmodel(Y));

  // pi: identity on A_0 + A_2; on the hats: x-slot -> v y-slot via the
  // Pfaffian adjoint, etc.
  // hat on skew coordinates (a,b,c,d,e,f) -> (-f, e, -d, -c, b, -a)
  auto hat_col = [&](int k) {
    static const int img[6] = {5, 4, 3, 2, 1, 0};
    static const int sgn[6] = {-1, 1, -1, -1, 1, -1};
    return std::make_pair(img[k], sgn[k]);
  };
  LinOp pi(n, n);
  for (int i = 0; i < 16; ++i) pi.set_col(i, SVec::unit(i));
  for (int i = 28; i < 44; ++i) pi.set_col(i, SVec::unit(i));
  for (int k = 0; k < 6; ++k) {
    auto [hk, hs] = hat_col(k);
    // (0,x;0,0) -> v(0,0;x^,0): x-slot (16+k) -> v y-slot (28+22+hk)
    pi.set_col(16 + k, SVec::unit(50 + hk, Cyclo(hs)));
    // (0,0;y,0) -> v(0,-y^;0,0): y-slot (22+k) -> -(v x-slot) (28+16+hk)
    pi.set_col(22 + k, SVec::unit(44 + hk, Cyclo(-hs)));
    // v(0,x;0,0) -> (0,0;x^,0)
    pi.set_col(44 + k, SVec::unit(22 + hk, Cyclo(hs)));
    // v(0,0;y,0) -> (0,-y^;0,0)
    pi.set_col(50 + k, SVec::unit(16 + hk, Cyclo(-hs)));
  }

  LinOp op1 = pi.compose(psi_xiX);
  out.z43 = refine_by_automorphisms(out.z4, {op1, psi_Y}, {4, 4});

  out.cdh4k_subalgebra = RowSpace(n);
  for (int i = 0; i < 16; ++i) out.cdh4k_subalgebra.insert(SVec::unit(i));
  for (int i = 28; i < 44; ++i) out.cdh4k_subalgebra.insert(SVec::unit(i));
  return out;
}

RestrictedCD restrict_z43_to_cdh4k(const Z43Data& z) {
  const AlgebraSC& A = *z.a.algebra;
  std::vector<std::string> labels;
  std::vector<SVec> basis;
  std::vector<GElem> degs;
  for (const auto& [d, s] : z.z43.comps)
    for (const SVec& row : s.rows())
      if (z.cdh4k_subalgebra.contains(row)) {
        labels.push_back("c" + std::to_string(labels.size()));
        basis.push_back(row);
        degs.push_back(d);
      }
  if ((int)basis.size() != 32)
    throw MathError("restriction to CD(H_4(K)) expected 32 homogeneous lines, found " +
                    std::to_string(basis.size()));
  auto sub = std::make_shared<AlgebraSC>(
      subalgebra_on_basis(A, "CDH4K[z43]", labels, basis, ProductRule::Plain));
  // unit and involution restrict
  CoordSolver cs(A.dim(), basis);
  auto u = cs.coords(*A.unit());
  if (!u) throw MathError("unit missing from the restricted subalgebra");
  sub->set_unit(*u);
  LinOp bar(32, 32);
  for (int i = 0; i < 32; ++i) {
    auto c = cs.coords(A.conj(basis[(size_t)i]));
    if (!c) throw MathError("involution does not preserve the restricted subalgebra");
    bar.set_col(i, *c);
  }
  sub->set_involution(std::move(bar));
  RestrictedCD out;
  out.a = make_inv_algebra(sub);
  out.grading = Grading::from_degrees(out.a.algebra, z.z43.group, degs);
  return out;
}

}  // namespace exf
