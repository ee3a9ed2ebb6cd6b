#include "exforge/liebuild.hpp"

namespace exf {

namespace {

SVec shift_indices(const SVec& v, int off) {
  SVec r = v;
  for (auto& [i, c] : r.t) i += off;
  return r;
}

// o(S, q): operators with q(dx, y) + q(x, dy) = 0
std::vector<LinOp> orthogonal_algebra(const AlgebraSC& s) {
  int n = s.dim();
  const LinOp& b = s.qform()->polar;
  EchelonSolver solver(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // sum_a d[a][i] B[a][j] + d[a][j] B[a][i] = 0 ; unknown d[a][k] at k*n+a
      std::vector<std::pair<int, Cyclo>> terms;
      for (int a = 0; a < n; ++a) {
        Cyclo c1 = b.entry(a, j);
        if (!c1.is_zero()) terms.emplace_back(i * n + a, c1);
        Cyclo c2 = b.entry(a, i);
        if (!c2.is_zero()) terms.emplace_back(j * n + a, c2);
      }
      std::sort(terms.begin(), terms.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      SVec row;
      for (auto& [k, c] : terms) {
        if (!row.t.empty() && row.t.back().first == k)
          row.t.back().second += c;
        else
          row.t.emplace_back(k, c);
      }
      std::erase_if(row.t, [](const auto& p) { return p.second.is_zero(); });
      if (!row.empty()) solver.add_row(std::move(row));
    }
  RowSpace ker = solver.kernel();
  std::vector<LinOp> ops;
  for (const SVec& r : ker.rows()) ops.push_back(LinOp::unflatten(r, n, n));
  return ops;
}

}  // namespace

SVec Triality::flatten(const std::array<LinOp, 3>& t) const {
  SVec v = t[0].flatten();
  v.axpy(Cyclo(1), shift_indices(t[1].flatten(), n * n));
  v.axpy(Cyclo(1), shift_indices(t[2].flatten(), 2 * n * n));
  return v;
}

std::array<LinOp, 3> Triality::t_xy(const SVec& x, const SVec& y) const {
  const AlgebraSC& a = *s;
  int dim = a.dim();
  // sigma_{x,y}(z) = q(x,z) y - q(y,z) x
  LinOp sigma(dim, dim);
  for (int z = 0; z < dim; ++z) {
    SVec col = y * a.q_polar(x, SVec::unit(z));
    col.axpy(-a.q_polar(y, SVec::unit(z)), x);
    sigma.set_col(z, std::move(col));
  }
  Cyclo half_q = a.q_polar(x, y) / Cyclo(2);
  LinOp d1 = LinOp::identity(dim) * half_q - a.right_mult(x).compose(a.left_mult(y));
  LinOp d2 = LinOp::identity(dim) * half_q - a.left_mult(x).compose(a.right_mult(y));
  return {std::move(sigma), std::move(d1), std::move(d2)};
}

SVec Triality::coords_of(const std::array<LinOp, 3>& t) const {
  auto c = coords->coords(flatten(t));
  if (!c) throw MathError("triple lies outside tri(S)");
  return *c;
}

Triality triality(AlgebraPtr sp) {
  Triality t;
  t.s = sp;
  const AlgebraSC& s = *sp;
  int n = s.dim();
  t.n = n;
  std::vector<LinOp> o = orthogonal_algebra(s);
  int k = (int)o.size();
  // triples (c0, c1, c2) over the o-basis with d0(x*y) = d1(x)*y + x*d2(y)
  EchelonSolver solver(3 * k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<SVec> v0((size_t)k), v1((size_t)k), v2((size_t)k);
      for (int p = 0; p < k; ++p) {
        v0[(size_t)p] = o[(size_t)p].apply(s.mul(i, j));
        v1[(size_t)p] = s.multiply(o[(size_t)p].col(i), SVec::unit(j));
        v2[(size_t)p] = s.multiply(SVec::unit(i), o[(size_t)p].col(j));
      }
      for (int a = 0; a < n; ++a) {
        SVec row;
        std::vector<std::pair<int, Cyclo>> terms;
        for (int p = 0; p < k; ++p) {
          Cyclo c0 = v0[(size_t)p].at(a);
          if (!c0.is_zero()) terms.emplace_back(p, c0);
          Cyclo c1 = v1[(size_t)p].at(a);
          if (!c1.is_zero()) terms.emplace_back(k + p, -c1);
          Cyclo c2 = v2[(size_t)p].at(a);
          if (!c2.is_zero()) terms.emplace_back(2 * k + p, -c2);
        }
        for (auto& [idx, c] : terms) row.axpy(c, SVec::unit(idx));
        if (!row.empty()) solver.add_row(std::move(row));
      }
    }
  RowSpace ker = solver.kernel();
  t.flat = RowSpace(3 * n * n);
  std::vector<SVec> flats;
  for (const SVec& sol : ker.rows()) {
    std::array<LinOp, 3> triple = {LinOp(n, n), LinOp(n, n), LinOp(n, n)};
    for (int part = 0; part < 3; ++part) {
      LinOp acc(n, n);
      for (const auto& [idx, c] : sol.t)
        if (idx >= part * k && idx < (part + 1) * k) acc = acc + o[(size_t)(idx - part * k)] * c;
      triple[(size_t)part] = std::move(acc);
    }
    SVec f = t.flatten(triple);
    t.flat.insert(f);
    flats.push_back(std::move(f));
    t.basis.push_back(std::move(triple));
  }
  t.coords = std::make_unique<CoordSolver>(3 * n * n, flats);
  // theta: (d0,d1,d2) -> (d2,d0,d1)
  int m = (int)t.basis.size();
  t.theta = LinOp(m, m);
  for (int p = 0; p < m; ++p) {
    std::array<LinOp, 3> sh = {t.basis[(size_t)p][2], t.basis[(size_t)p][0], t.basis[(size_t)p][1]};
    t.theta.set_col(p, t.coords_of(sh));
  }
  return t;
}

LieAlg g_construction(const Triality& t1, const Triality& t2) {
  const AlgebraSC& s1 = *t1.s;
  const AlgebraSC& s2 = *t2.s;
  int n1 = s1.dim(), n2 = s2.dim();
  int k1 = t1.rank(), k2 = t2.rank();
  int dim = k1 + k2 + 3 * n1 * n2;
  auto iota = [&](int slot, int x, int y) { return k1 + k2 + slot * n1 * n2 + x * n2 + y; };

  std::vector<std::string> labels;
  for (int p = 0; p < k1; ++p) labels.push_back("t1_" + std::to_string(p));
  for (int p = 0; p < k2; ++p) labels.push_back("t2_" + std::to_string(p));
  for (int slot = 0; slot < 3; ++slot)
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n2; ++y)
        labels.push_back("i" + std::to_string(slot) + "(" + s1.labels()[(size_t)x] + "(x)" +
                         s2.labels()[(size_t)y] + ")");
  auto g = std::make_shared<AlgebraSC>("g(" + s1.name() + "," + s2.name() + ")", labels);
  g->set_anticommutative(true);

  auto put = [&](int i, int j, SVec v) {
    g->set_mul(i, j, v);
    g->set_mul(j, i, -v);
  };

  // [tri, tri]
  for (int p = 0; p < k1; ++p)
    for (int q = 0; q < p; ++q) {
      std::array<LinOp, 3> br;
      for (int c = 0; c < 3; ++c)
        br[(size_t)c] = t1.basis[(size_t)p][(size_t)c].commutator(t1.basis[(size_t)q][(size_t)c]);
      put(p, q, t1.coords_of(br));
    }
  for (int p = 0; p < k2; ++p)
    for (int q = 0; q < p; ++q) {
      std::array<LinOp, 3> br;
      for (int c = 0; c < 3; ++c)
        br[(size_t)c] = t2.basis[(size_t)p][(size_t)c].commutator(t2.basis[(size_t)q][(size_t)c]);
      put(k1 + p, k1 + q, shift_indices(t2.coords_of(br), k1));
    }
  // [tri, iota]
  for (int p = 0; p < k1; ++p)
    for (int slot = 0; slot < 3; ++slot)
      for (int x = 0; x < n1; ++x) {
        SVec img = t1.basis[(size_t)p][(size_t)slot].col(x);
        for (int y = 0; y < n2; ++y) {
          SVec out;
          for (const auto& [xx, c] : img.t) out.push(iota(slot, xx, y), c);
          put(p, iota(slot, x, y), std::move(out));
        }
      }
  for (int q = 0; q < k2; ++q)
    for (int slot = 0; slot < 3; ++slot)
      for (int y = 0; y < n2; ++y) {
        SVec img = t2.basis[(size_t)q][(size_t)slot].col(y);
        for (int x = 0; x < n1; ++x) {
          SVec out;
          for (const auto& [yy, c] : img.t) out.axpy(c, SVec::unit(iota(slot, x, yy)));
          put(k1 + q, iota(slot, x, y), std::move(out));
        }
      }
  // [iota_i, iota_{i+1}] = iota_{i+2}(products)
  for (int slot = 0; slot < 3; ++slot) {
    int nxt = (slot + 1) % 3, tgt = (slot + 2) % 3;
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n2; ++y)
        for (int x2 = 0; x2 < n1; ++x2)
          for (int y2 = 0; y2 < n2; ++y2) {
            const SVec& px = s1.mul(x, x2);
            if (px.empty()) continue;
            const SVec& py = s2.mul(y, y2);
            if (py.empty()) continue;
            SVec out;
            for (const auto& [xx, cx] : px.t)
              for (const auto& [yy, cy] : py.t) out.axpy(cx * cy, SVec::unit(iota(tgt, xx, yy)));
            put(iota(slot, x, y), iota(nxt, x2, y2), std::move(out));
          }
  }
  // [iota_i(x(x)y), iota_i(x2(x)y2)] = q2(y,y2) theta^i t_{x,x2} + q1(x,x2) theta'^i t'_{y,y2}
  LinOp th1 = LinOp::identity(k1), th2 = LinOp::identity(k2);
  for (int slot = 0; slot < 3; ++slot) {
    // cache t-coresponding coords for basis pairs
    std::vector<std::vector<SVec>> tc1((size_t)n1, std::vector<SVec>((size_t)n1));
    for (int x = 0; x < n1; ++x)
      for (int x2 = 0; x2 < n1; ++x2)
        tc1[(size_t)x][(size_t)x2] = th1.apply(t1.coords_of(t1.t_xy(SVec::unit(x), SVec::unit(x2))));
    std::vector<std::vector<SVec>> tc2((size_t)n2, std::vector<SVec>((size_t)n2));
    for (int y = 0; y < n2; ++y)
      for (int y2 = 0; y2 < n2; ++y2)
        tc2[(size_t)y][(size_t)y2] = th2.apply(t2.coords_of(t2.t_xy(SVec::unit(y), SVec::unit(y2))));
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n2; ++y)
        for (int x2 = 0; x2 < n1; ++x2)
          for (int y2 = 0; y2 < n2; ++y2) {
            int i = iota(slot, x, y), j = iota(slot, x2, y2);
            if (j >= i) continue;
            SVec out;
            Cyclo qy = s2.q_polar(SVec::unit(y), SVec::unit(y2));
            if (!qy.is_zero()) out.axpy(qy, tc1[(size_t)x][(size_t)x2]);
            Cyclo qx = s1.q_polar(SVec::unit(x), SVec::unit(x2));
            if (!qx.is_zero()) out.axpy(qx, shift_indices(tc2[(size_t)y][(size_t)y2], k1));
            put(i, j, std::move(out));
          }
    th1 = t1.theta.compose(th1);
    th2 = t2.theta.compose(th2);
  }

  // components
  RowSpace tri1(dim), tri2(dim);
  for (int p = 0; p < k1; ++p) tri1.insert(SVec::unit(p));
  for (int p = 0; p < k2; ++p) tri2.insert(SVec::unit(k1 + p));
  g->set_component("tri1", tri1);
  g->set_component("tri2", tri2);
  for (int slot = 0; slot < 3; ++slot) {
    RowSpace io(dim);
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n2; ++y) io.insert(SVec::unit(iota(slot, x, y)));
    g->set_component("iota" + std::to_string(slot), io);
  }
  // toral seeds: hyperbolic t-pairs from each para-Hurwitz factor
  {
    RowSpace toral(dim);
    auto add_seeds = [&](const Triality& t, const AlgebraSC& s, int off) {
      auto add_pair = [&](const std::string& la, const std::string& lb) {
        int a = s.index_of(la), b = s.index_of(lb);
        if (a < 0 || b < 0) return;
        auto tr = t.t_xy(SVec::unit(a), SVec::unit(b));
        SVec c = t.coords->coords(t.flatten(tr)) ? *t.coords->coords(t.flatten(tr)) : SVec();
        if (!c.empty()) toral.insert(shift_indices(c, off));
      };
      add_pair("e1", "e2");
      add_pair("u1", "v1");
      add_pair("u2", "v2");
      add_pair("u3", "v3");
    };
    add_seeds(t1, s1, 0);
    add_seeds(t2, s2, k1);
    g->set_component("toral", toral);
  }
  return LieAlg{g, "g(" + s1.name() + "," + s2.name() + ")"};
}

LieAlg tits(AlgebraPtr c, const JordanAlg* j) {
  const AlgebraSC& ca = *c;
  DerAlgebra dc = der_algebra(ca, false);
  int kc = (int)dc.ops.size();
  if (!j) {
    dc.lie.provenance = "T(" + ca.name() + ",F)";
    return dc.lie;
  }
  const AlgebraSC& ja = *j->algebra;
  DerAlgebra dj = der_algebra(ja, false);
  int kj = (int)dj.ops.size();
  // traceless parts
  RowSpace c0(ca.dim());
  {
    EchelonSolver t(ca.dim());
    SVec row;
    for (int i = 0; i < ca.dim(); ++i) row.axpy(ca.q_polar(SVec::unit(i), *ca.unit()), SVec::unit(i));
    t.add_row(row);
    c0 = t.kernel();
  }
  std::vector<SVec> c0b = c0.rows();
  std::vector<SVec> j0b = j->j0.rows();
  int nc0 = (int)c0b.size(), nj0 = (int)j0b.size();
  int dim = kc + kj + nc0 * nj0;

  CoordSolver csc(ca.dim(), c0b);
  CoordSolver csj(ja.dim(), j0b);
  std::vector<SVec> dcf, djf;
  for (auto& o : dc.ops) dcf.push_back(o.flatten());
  for (auto& o : dj.ops) djf.push_back(o.flatten());
  CoordSolver dccoords(ca.dim() * ca.dim(), dcf);
  CoordSolver djcoords(ja.dim() * ja.dim(), djf);

  std::vector<std::string> labels;
  for (int p = 0; p < kc; ++p) labels.push_back("dC" + std::to_string(p));
  for (int p = 0; p < kj; ++p) labels.push_back("dJ" + std::to_string(p));
  for (int a = 0; a < nc0; ++a)
    for (int x = 0; x < nj0; ++x) labels.push_back("a" + std::to_string(a) + "x" + std::to_string(x));
  auto g = std::make_shared<AlgebraSC>("T(" + ca.name() + "," + ja.name() + ")", labels);
  g->set_anticommutative(true);
  auto ten = [&](int a, int x) { return kc + kj + a * nj0 + x; };
  auto put = [&](int i, int jdx, SVec v) {
    g->set_mul(i, jdx, v);
    g->set_mul(jdx, i, -v);
  };
  for (int p = 0; p < kc; ++p)
    for (int q = 0; q < p; ++q) {
      auto cc = dccoords.coords(dc.ops[(size_t)p].commutator(dc.ops[(size_t)q]).flatten());
      put(p, q, *cc);
    }
  for (int p = 0; p < kj; ++p)
    for (int q = 0; q < p; ++q) {
      auto cc = djcoords.coords(dj.ops[(size_t)p].commutator(dj.ops[(size_t)q]).flatten());
      put(kc + p, kc + q, shift_indices(*cc, kc));
    }
  // [Der(C), Der(J)] = 0 (table default)
  for (int p = 0; p < kc; ++p)
    for (int a = 0; a < nc0; ++a) {
      SVec img = dc.ops[(size_t)p].apply(c0b[(size_t)a]);
      auto cc = csc.coords(img);
      if (!cc) throw MathError("derivation does not preserve C0");
      for (int x = 0; x < nj0; ++x) {
        SVec out;
        for (const auto& [aa, v] : cc->t) out.axpy(v, SVec::unit(ten(aa, x)));
        put(p, ten(a, x), std::move(out));
      }
    }
  for (int p = 0; p < kj; ++p)
    for (int x = 0; x < nj0; ++x) {
      SVec img = dj.ops[(size_t)p].apply(j0b[(size_t)x]);
      auto cc = csj.coords(img);
      if (!cc) throw MathError("derivation does not preserve J0");
      for (int a = 0; a < nc0; ++a) {
        SVec out;
        for (const auto& [xx, v] : cc->t) out.axpy(v, SVec::unit(ten(a, xx)));
        put(kc + p, ten(a, x), std::move(out));
      }
    }
  // [a (x) x, b (x) y] = t_J(xy) d_{a,b} + [a,b] (x) x*y + 2 t_C(ab) [R_x, R_y]
  for (int a = 0; a < nc0; ++a)
    for (int x = 0; x < nj0; ++x)
      for (int b = 0; b < nc0; ++b)
        for (int y = 0; y < nj0; ++y) {
          int i = ten(a, x), jdx = ten(b, y);
          if (jdx >= i) continue;
          const SVec &av = c0b[(size_t)a], &bv = c0b[(size_t)b];
          const SVec &xv = j0b[(size_t)x], &yv = j0b[(size_t)y];
          SVec out;
          SVec xy = ja.multiply(xv, yv);
          Cyclo txy = j->t(xy);
          if (!txy.is_zero()) {
            auto cc = dccoords.coords(derivation_dab(ca, av, bv).flatten());
            if (!cc) throw MathError("d_{a,b} outside Der(C)");
            out.axpy(txy, *cc);
          }
          SVec comm = ca.multiply(av, bv) - ca.multiply(bv, av);
          if (!comm.empty()) {
            SVec star = xy;
            star.axpy(-txy, *ja.unit());
            auto ccc = csc.coords(comm);
            auto ccj = csj.coords(star);
            if (!ccc || !ccj) throw MathError("tensor bracket outside C0 (x) J0");
            for (const auto& [aa, va] : ccc->t)
              for (const auto& [xx, vx] : ccj->t) out.axpy(va * vx, SVec::unit(ten(aa, xx)));
          }
          Cyclo tab = ca.q_polar(ca.multiply(av, bv), *ca.unit());
          if (!tab.is_zero()) {
            LinOp rr = ja.left_mult(xv).commutator(ja.left_mult(yv));
            auto cc = djcoords.coords(rr.flatten());
            if (!cc) throw MathError("[R_x,R_y] outside Der(J)");
            out.axpy(Cyclo(2) * tab, shift_indices(*cc, kc));
          }
          put(i, jdx, std::move(out));
        }
  return LieAlg{g, "T(" + ca.name() + "," + ja.name() + ")"};
}

KantorResult kantor(const InvAlgebra& ia) {
  const AlgebraSC& a = *ia.algebra;
  int n = a.dim();
  KantorResult out;
  out.instr = instr_and_epsilon(ia);
  int k0 = (int)out.instr.basis.size();
  std::vector<SVec> skew = ia.skew.rows();
  int k2 = (int)skew.size();
  out.skew_dim = k2;
  int dim = 2 * k2 + 2 * n + k0;
  // layout: [s~ (k2)] [a~ (n)] [T (k0)] [a (n)] [s (k2)]
  int off_sm = 0, off_am = k2, off_t = k2 + n, off_ap = k2 + n + k0, off_sp = k2 + 2 * n + k0;
  CoordSolver scoords(n, skew);

  std::vector<std::string> labels;
  for (int m = 0; m < k2; ++m) labels.push_back("s~" + std::to_string(m));
  for (int i = 0; i < n; ++i) labels.push_back("a~" + std::to_string(i));
  for (int p = 0; p < k0; ++p) labels.push_back("T" + std::to_string(p));
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  for (int m = 0; m < k2; ++m) labels.push_back("s" + std::to_string(m));
  auto g = std::make_shared<AlgebraSC>("Kan(" + a.name() + ")", labels);
  g->set_anticommutative(true);
  auto put = [&](int i, int j, SVec v) {
    g->set_mul(i, j, v);
    if (i != j) g->set_mul(j, i, -v);
  };

  // epsilon images of the basis operators
  std::vector<LinOp> eps_ops;
  for (int p = 0; p < k0; ++p) {
    LinOp acc(n, n);
    for (const auto& [q, c] : out.instr.epsilon.col(p).t)
      acc = acc + out.instr.basis[(size_t)q] * c;
    eps_ops.push_back(std::move(acc));
  }

  // [T, a] = T(a); [T, a~] = (T^eps a)~
  for (int p = 0; p < k0; ++p) {
    for (int i = 0; i < n; ++i) {
      put(off_t + p, off_ap + i, shift_indices(out.instr.basis[(size_t)p].col(i), off_ap));
      put(off_t + p, off_am + i, shift_indices(eps_ops[(size_t)p].col(i), off_am));
    }
    // [T, s] = T(s) + s bar(T(1)); [T, s~] = (T^eps s + s bar(T^eps 1))~
    SVec t1 = out.instr.basis[(size_t)p].apply(*a.unit());
    SVec te1 = eps_ops[(size_t)p].apply(*a.unit());
    for (int m = 0; m < k2; ++m) {
      SVec v = out.instr.basis[(size_t)p].apply(skew[(size_t)m]);
      v.axpy(Cyclo(1), a.multiply(skew[(size_t)m], a.conj(t1)));
      auto c = scoords.coords(v);
      if (!c) throw MathError("[T, s] escapes the skew part");
      put(off_t + p, off_sp + m, shift_indices(*c, off_sp));
      SVec w = eps_ops[(size_t)p].apply(skew[(size_t)m]);
      w.axpy(Cyclo(1), a.multiply(skew[(size_t)m], a.conj(te1)));
      auto c2 = scoords.coords(w);
      if (!c2) throw MathError("[T, s~] escapes the skew part");
      put(off_t + p, off_sm + m, shift_indices(*c2, off_sm));
    }
  }
  // [T, T']
  for (int p = 0; p < k0; ++p)
    for (int q = 0; q < p; ++q) put(off_t + p, off_t + q, shift_indices(out.instr.bracket[(size_t)p][(size_t)q], off_t));
  // [a, a'] = 2(a a'~ - a' a~) in K_2;   [a~, a'~] likewise in K_{-2}
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      SVec v = a.multiply(SVec::unit(i), a.conj(SVec::unit(j)));
      v.axpy(Cyclo(-1), a.multiply(SVec::unit(j), a.conj(SVec::unit(i))));
      v = v * Cyclo(2);
      auto c = scoords.coords(v);
      if (!c) throw MathError("[a, a'] escapes the skew part");
      put(off_ap + i, off_ap + j, shift_indices(*c, off_sp));
      put(off_am + i, off_am + j, shift_indices(*c, off_sm));
    }
  // [a, a'~] = 2 V_{a,a'} ; [a, s'~] = (-s' a)~ ; [s, a'~] = s a'
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinOp v = v_op(a, SVec::unit(i), SVec::unit(j)) * Cyclo(2);
      auto c = out.instr.op_coords(v);
      if (!c) throw MathError("2V_{a,a'} escapes the inner structure algebra");
      put(off_ap + i, off_am + j, shift_indices(*c, off_t));
    }
  for (int m = 0; m < k2; ++m)
    for (int i = 0; i < n; ++i) {
      SVec v = -a.multiply(skew[(size_t)m], SVec::unit(i));
      put(off_ap + i, off_sm + m, shift_indices(v, off_am));
      SVec w = a.multiply(skew[(size_t)m], SVec::unit(i));
      put(off_sp + m, off_am + i, shift_indices(w, off_ap));
    }
  // [s, s'~] = L_s L_{s'}
  for (int m = 0; m < k2; ++m)
    for (int m2 = 0; m2 < k2; ++m2) {
      LinOp v = a.left_mult(skew[(size_t)m]).compose(a.left_mult(skew[(size_t)m2]));
      auto c = out.instr.op_coords(v);
      if (!c) throw MathError("L_s L_{s'} escapes the inner structure algebra");
      put(off_sp + m, off_sm + m2, shift_indices(*c, off_t));
    }

  // components and Z-grading
  auto mk = [&](int off, int count) {
    RowSpace r(dim);
    for (int i = 0; i < count; ++i) r.insert(SVec::unit(off + i));
    return r;
  };
  g->set_component("K-2", mk(off_sm, k2));
  g->set_component("K-1", mk(off_am, n));
  g->set_component("K0", mk(off_t, k0));
  g->set_component("K1", mk(off_ap, n));
  g->set_component("K2", mk(off_sp, k2));
  std::vector<GElem> deg((size_t)dim);
  for (int m = 0; m < k2; ++m) deg[(size_t)(off_sm + m)] = GElem{{-2}};
  for (int i = 0; i < n; ++i) deg[(size_t)(off_am + i)] = GElem{{-1}};
  for (int p = 0; p < k0; ++p) deg[(size_t)(off_t + p)] = GElem{{0}};
  for (int i = 0; i < n; ++i) deg[(size_t)(off_ap + i)] = GElem{{1}};
  for (int m = 0; m < k2; ++m) deg[(size_t)(off_sp + m)] = GElem{{2}};
  out.zgrading = Grading::from_degrees(g, AbGroup::free(1), deg);
  out.lie = LieAlg{g, "Kan(" + a.name() + ")"};
  return out;
}

SteinbergResult steinberg(const InvAlgebra& ia) {
  const AlgebraSC& a = *ia.algebra;
  int n = a.dim();
  // standard triples
  auto std_triple = [&](const SVec& av, const SVec& bv, int i) {
    SVec ab = a.conj(av), bb = a.conj(bv);
    LinOp tL = a.left_mult(bb).compose(a.left_mult(av)) - a.left_mult(ab).compose(a.left_mult(bv));
    LinOp tR = a.right_mult(bb).compose(a.right_mult(av)) - a.right_mult(ab).compose(a.right_mult(bv));
    SVec arg = a.multiply(ab, bv) - a.multiply(bb, av);
    LinOp tM = a.right_mult(arg) + a.left_mult(bv).compose(a.left_mult(ab)) -
               a.left_mult(av).compose(a.left_mult(bb));
    // components placed cyclically starting at slot i (0-based)
    std::array<LinOp, 3> t = {LinOp(n, n), LinOp(n, n), LinOp(n, n)};
    t[(size_t)(i % 3)] = std::move(tL);
    t[(size_t)((i + 1) % 3)] = std::move(tR);
    t[(size_t)((i + 2) % 3)] = std::move(tM);
    return t;
  };
  auto flatten3 = [&](const std::array<LinOp, 3>& t) {
    SVec v = t[0].flatten();
    v.axpy(Cyclo(1), shift_indices(t[1].flatten(), n * n));
    v.axpy(Cyclo(1), shift_indices(t[2].flatten(), 2 * n * n));
    return v;
  };
  SteinbergResult out;
  RowSpace span(3 * n * n);
  std::vector<std::array<LinOp, 3>> work;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto t = std_triple(SVec::unit(i), SVec::unit(j), 0);
      if (span.insert(flatten3(t))) work.push_back(std::move(t));
    }
  // Lie closure
  size_t frontier = 0;
  while (frontier < work.size()) {
    size_t hi = work.size();
    for (size_t p = frontier; p < hi; ++p)
      for (size_t q = 0; q < hi; ++q) {
        std::array<LinOp, 3> br = {work[p][0].commutator(work[q][0]),
                                   work[p][1].commutator(work[q][1]),
                                   work[p][2].commutator(work[q][2])};
        if (span.insert(flatten3(br))) work.push_back(std::move(br));
      }
    frontier = hi;
  }
  out.trip_basis = std::move(work);
  int kt = (int)out.trip_basis.size();
  out.trip_dim = kt;
  std::vector<SVec> flats;
  for (auto& t : out.trip_basis) flats.push_back(flatten3(t));
  CoordSolver tcoords(3 * n * n, flats);

  int dim = kt + 3 * n;
  std::vector<std::string> labels;
  for (int p = 0; p < kt; ++p) labels.push_back("trip" + std::to_string(p));
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < n; ++i)
      labels.push_back("u" + std::to_string(s + 1) + std::to_string((s + 1) % 3 + 1) + "_" +
                       std::to_string(i));
  auto g = std::make_shared<AlgebraSC>("U(" + a.name() + ")", labels);
  g->set_anticommutative(true);
  auto uslot = [&](int s, int i) { return kt + s * n + i; };
  auto put = [&](int i, int j, SVec v) {
    g->set_mul(i, j, v);
    if (i != j) g->set_mul(j, i, -v);
  };
  for (int p = 0; p < kt; ++p)
    for (int q = 0; q < p; ++q) {
      std::array<LinOp, 3> br = {out.trip_basis[(size_t)p][0].commutator(out.trip_basis[(size_t)q][0]),
                                 out.trip_basis[(size_t)p][1].commutator(out.trip_basis[(size_t)q][1]),
                                 out.trip_basis[(size_t)p][2].commutator(out.trip_basis[(size_t)q][2])};
      auto c = tcoords.coords(flatten3(br));
      if (!c) throw MathError("trip(A) closure failure");
      put(p, q, *c);
    }
  // [T, u_{i,i+1}(a)] = u_{i,i+1}(T_{i+2} a); slots: 0 -> u12 uses T_3, etc.
  for (int p = 0; p < kt; ++p)
    for (int s = 0; s < 3; ++s) {
      const LinOp& comp = out.trip_basis[(size_t)p][(size_t)((s + 2) % 3)];
      for (int i = 0; i < n; ++i) {
        SVec img = comp.col(i);
        SVec outv;
        for (const auto& [ii, c] : img.t) outv.axpy(c, SVec::unit(uslot(s, ii)));
        put(p, uslot(s, i), std::move(outv));
      }
    }
  // [u_{i,i+1}(a), u_{i+1,i+2}(b)] = -u_{i+2,i}(bar(ab))
  for (int s = 0; s < 3; ++s) {
    int nxt = (s + 1) % 3, tgt = (s + 2) % 3;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        SVec v = -a.conj(a.mul(i, j));
        SVec outv;
        for (const auto& [ii, c] : v.t) outv.axpy(c, SVec::unit(uslot(tgt, ii)));
        put(uslot(s, i), uslot(nxt, j), std::move(outv));
      }
  }
  // [u_{i,i+1}(a), u_{i,i+1}(b)] = standard triple at slot i
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        auto t = std_triple(SVec::unit(i), SVec::unit(j), s);
        auto c = tcoords.coords(flatten3(t));
        if (!c) throw MathError("standard triple escapes trip(A)");
        put(uslot(s, i), uslot(s, j), *c);
      }

  RowSpace tripc(dim);
  for (int p = 0; p < kt; ++p) tripc.insert(SVec::unit(p));
  g->set_component("trip", tripc);
  for (int s = 0; s < 3; ++s) {
    RowSpace us(dim);
    for (int i = 0; i < n; ++i) us.insert(SVec::unit(uslot(s, i)));
    g->set_component("u" + std::to_string(s + 1) + std::to_string((s + 1) % 3 + 1), us);
  }
  std::vector<GElem> deg((size_t)dim, GElem{{0, 0}});
  for (int i = 0; i < n; ++i) {
    deg[(size_t)uslot(0, i)] = GElem{{1, 0}};
    deg[(size_t)uslot(1, i)] = GElem{{0, 1}};
    deg[(size_t)uslot(2, i)] = GElem{{1, 1}};
  }
  out.z22grading = Grading::from_degrees(g, AbGroup{0, {2, 2}}, deg);
  out.lie = LieAlg{g, "U(" + a.name() + ")"};
  return out;
}

DerAlgebra der_algebra(const AlgebraSC& a, bool commute_with_involution) {
  DerAlgebra out;
  out.flat = derivation_space(a, commute_with_involution);
  int n = a.dim();
  for (const SVec& r : out.flat.rows()) out.ops.push_back(LinOp::unflatten(r, n, n));
  int k = (int)out.ops.size();
  std::vector<std::string> labels;
  for (int p = 0; p < k; ++p) labels.push_back("d" + std::to_string(p));
  auto g = std::make_shared<AlgebraSC>("Der(" + a.name() + ")", labels);
  g->set_anticommutative(true);
  CoordSolver cs(n * n, out.flat.rows());
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < p; ++q) {
      auto c = cs.coords(out.ops[(size_t)p].commutator(out.ops[(size_t)q]).flatten());
      if (!c) throw MathError("derivation algebra not closed (internal error)");
      g->set_mul(p, q, *c);
      g->set_mul(q, p, -*c);
    }
  out.lie = LieAlg{g, "Der(" + a.name() + ")"};
  return out;
}

TkkModels tkk_e7_models(const CubicData& cd) {
  const JordanAlg& j = cd.albert;
  const AlgebraSC& ja = *j.algebra;
  int m = ja.dim();
  DerAlgebra dj = der_algebra(ja, false);
  int kd = (int)dj.ops.size();
  TkkModels out;
  {
    // Albert (x) sl2 + Der(Albert); sl2 basis e,h,f with Killing form
    // K(e,f) = 4, K(h,h) = 8
    int dim = 3 * m + kd;
    std::vector<std::string> labels;
    const char* sl2n[3] = {"e", "h", "f"};
    for (int x = 0; x < m; ++x)
      for (int s = 0; s < 3; ++s) labels.push_back(ja.labels()[(size_t)x] + "(x)" + sl2n[s]);
    for (int p = 0; p < kd; ++p) labels.push_back("d" + std::to_string(p));
    auto g = std::make_shared<AlgebraSC>("TKK-Tits(e7)", labels);
    g->set_anticommutative(true);
    auto ten = [&](int x, int s) { return x * 3 + s; };
    auto put = [&](int i, int jj, SVec v) {
      g->set_mul(i, jj, v);
      if (i != jj) g->set_mul(jj, i, -v);
    };
    // sl2 structure: [h,e] = 2e, [h,f] = -2f, [e,f] = h
    auto sl2_bracket = [&](int s1, int s2) {
      SVec v;  // over sl2 coordinates e,h,f
      if (s1 == 1 && s2 == 0) v.push(0, Cyclo(2));
      if (s1 == 0 && s2 == 1) v.push(0, Cyclo(-2));
      if (s1 == 1 && s2 == 2) v.push(2, Cyclo(-2));
      if (s1 == 2 && s2 == 1) v.push(2, Cyclo(2));
      if (s1 == 0 && s2 == 2) v.push(1, Cyclo(1));
      if (s1 == 2 && s2 == 0) v.push(1, Cyclo(-1));
      return v;
    };
    auto killing2 = [&](int s1, int s2) {
      if ((s1 == 0 && s2 == 2) || (s1 == 2 && s2 == 0)) return Cyclo(4);
      if (s1 == 1 && s2 == 1) return Cyclo(8);
      return Cyclo(0);
    };
    CoordSolver dcoords(m * m, dj.flat.rows());
    for (int x = 0; x < m; ++x)
      for (int s1 = 0; s1 < 3; ++s1)
        for (int y = 0; y < m; ++y)
          for (int s2 = 0; s2 < 3; ++s2) {
            int i = ten(x, s1), jj = ten(y, s2);
            if (jj >= i) continue;
            SVec outv;
            SVec xy = ja.mul(x, y);
            SVec br = sl2_bracket(s1, s2);
            for (const auto& [zz, cz] : xy.t)
              for (const auto& [ss, cs] : br.t) outv.axpy(cz * cs, SVec::unit(ten(zz, ss)));
            Cyclo kf = killing2(s1, s2);
            if (!kf.is_zero()) {
              LinOp rr = ja.left_mult(SVec::unit(x)).commutator(ja.left_mult(SVec::unit(y)));
              auto c = dcoords.coords(rr.flatten());
              if (!c) throw MathError("[R_x,R_y] outside Der");
              outv.axpy(kf * Cyclo(Rat(1, 2)), shift_indices(*c, 3 * m));
            }
            put(i, jj, std::move(outv));
          }
    for (int p = 0; p < kd; ++p) {
      for (int x = 0; x < m; ++x) {
        SVec img = dj.ops[(size_t)p].col(x);
        for (int s = 0; s < 3; ++s) {
          SVec outv;
          for (const auto& [xx, c] : img.t) outv.axpy(c, SVec::unit(ten(xx, s)));
          put(3 * m + p, ten(x, s), std::move(outv));
        }
      }
      for (int q = 0; q < p; ++q) {
        auto c = dcoords.coords(dj.ops[(size_t)p].commutator(dj.ops[(size_t)q]).flatten());
        put(3 * m + p, 3 * m + q, shift_indices(*c, 3 * m));
      }
    }
    out.tits_sl2 = LieAlg{g, "TKK-Tits(e7)"};
  }
  {
    // Koecher: A + A-bar + Str(A), Str = R_A + [R_A, R_A] = R_A + Der
    int dim = 2 * m + m + kd;
    int off_b = m, off_r = 2 * m, off_d = 3 * m;
    std::vector<std::string> labels;
    for (int x = 0; x < m; ++x) labels.push_back("x" + std::to_string(x));
    for (int x = 0; x < m; ++x) labels.push_back("xb" + std::to_string(x));
    for (int x = 0; x < m; ++x) labels.push_back("R" + std::to_string(x));
    for (int p = 0; p < kd; ++p) labels.push_back("d" + std::to_string(p));
    auto g = std::make_shared<AlgebraSC>("TKK-Koecher(e7)", labels);
    g->set_anticommutative(true);
    auto put = [&](int i, int jj, SVec v) {
      g->set_mul(i, jj, v);
      if (i != jj) g->set_mul(jj, i, -v);
    };
    CoordSolver dcoords(m * m, dj.flat.rows());
    // decompose an operator in Str into R-part and Der-part via op(1)
    auto str_coords = [&](const LinOp& op) {
      SVec r_arg = op.apply(*ja.unit());
      LinOp dpart = op - ja.left_mult(r_arg);
      auto c = dcoords.coords(dpart.flatten());
      if (!c) throw MathError("operator outside Str(A)");
      SVec outv = shift_indices(r_arg, off_r);
      outv.axpy(Cyclo(1), shift_indices(*c, off_d));
      return outv;
    };
    // [x, ybar] = 2 R_{x o y} + 2 [R_y, R_x]
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        LinOp op = ja.left_mult(ja.mul(x, y)) * Cyclo(2) +
                   ja.left_mult(SVec::unit(x)).commutator(ja.left_mult(SVec::unit(y))) * Cyclo(2);
        put(x, off_b + y, str_coords(op));
      }
    // [L, x] = L(x); [L, xbar] = (Lbar(x))bar with Rbar = -R, dbar = d
    for (int x = 0; x < m; ++x) {
      // L = R_z basis
      for (int z = 0; z < m; ++z) {
        put(off_r + z, x, ja.mul(z, x));
        put(off_r + z, off_b + x, shift_indices(-ja.mul(z, x), off_b));
      }
      for (int p = 0; p < kd; ++p) {
        put(off_d + p, x, dj.ops[(size_t)p].col(x));
        put(off_d + p, off_b + x, shift_indices(dj.ops[(size_t)p].col(x), off_b));
      }
    }
    // [Str, Str]: commutators decomposed again
    for (int z = 0; z < m; ++z) {
      for (int z2 = 0; z2 < z; ++z2)
        put(off_r + z, off_r + z2,
            str_coords(ja.left_mult(SVec::unit(z)).commutator(ja.left_mult(SVec::unit(z2)))));
      for (int p = 0; p < kd; ++p)
        put(off_d + p, off_r + z,
            str_coords(dj.ops[(size_t)p].commutator(ja.left_mult(SVec::unit(z)))));
    }
    for (int p = 0; p < kd; ++p)
      for (int q = 0; q < p; ++q) {
        auto c = dcoords.coords(dj.ops[(size_t)p].commutator(dj.ops[(size_t)q]).flatten());
        put(off_d + p, off_d + q, shift_indices(*c, off_d));
      }
    out.koecher = LieAlg{g, "TKK-Koecher(e7)"};
  }
  return out;
}

std::vector<std::pair<GElem, RowSpace>> split_triality_by_degree(const Triality& t,
                                                                 const Grading& gs) {
  int n = t.n;
  // adapted basis of S
  std::vector<GElem> adeg;
  LinOp to_std(n, n);
  {
    int k = 0;
    for (const auto& [d, s] : gs.comps)
      for (const SVec& row : s.rows()) {
        to_std.set_col(k, row);
        adeg.push_back(d);
        ++k;
      }
  }
  LinOp from_std = to_std.inverse();
  std::map<GElem, RowSpace> by_deg;
  for (int p = 0; p < t.rank(); ++p) {
    std::map<GElem, std::array<LinOp, 3>> pieces;
    for (int comp = 0; comp < 3; ++comp) {
      LinOp ad = from_std.compose(t.basis[(size_t)p][(size_t)comp]).compose(to_std);
      for (int j = 0; j < n; ++j)
        for (const auto& [i, c] : ad.col(j).t) {
          GElem d = g_add(gs.group, adeg[(size_t)i], g_neg(gs.group, adeg[(size_t)j]));
          auto it = pieces.find(d);
          if (it == pieces.end())
            it = pieces.emplace(d, std::array<LinOp, 3>{LinOp(n, n), LinOp(n, n), LinOp(n, n)}).first;
          it->second[(size_t)comp].set_entry(i, j, c);
        }
    }
    for (auto& [d, triple] : pieces) {
      std::array<LinOp, 3> std_triple;
      for (int comp = 0; comp < 3; ++comp)
        std_triple[(size_t)comp] = to_std.compose(triple[(size_t)comp]).compose(from_std);
      auto c = t.coords->coords(t.flatten(std_triple));
      if (!c) throw MathError("triality degree piece escapes tri(S)");
      auto it = by_deg.find(d);
      if (it == by_deg.end()) it = by_deg.emplace(d, RowSpace(t.rank())).first;
      it->second.insert(*c);
    }
  }
  int total = 0;
  std::vector<std::pair<GElem, RowSpace>> out;
  for (auto& [d, s] : by_deg) {
    total += s.rank();
    out.emplace_back(d, std::move(s));
  }
  if (total != t.rank()) throw MathError("triality degree split lost dimensions");
  return out;
}

}  // namespace exf
