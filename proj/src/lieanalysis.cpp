#include "exforge/lieanalysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace exf {

namespace {

unsigned long long splitmix(unsigned long long& s) {
  s += 0x9e3779b97f4a7c15ULL;
  unsigned long long z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool jacobi_triple(const AlgebraSC& l, int i, int j, int k) {
  SVec s = l.multiply(SVec::unit(i), l.mul(j, k));
  s.axpy(Cyclo(1), l.multiply(SVec::unit(j), l.mul(k, i)));
  s.axpy(Cyclo(1), l.multiply(SVec::unit(k), l.mul(i, j)));
  return s.empty();
}

}  // namespace

LieCheckReport verify_lie(const AlgebraSC& l, bool full_jacobi, long long samples,
                          unsigned long long seed) {
  LieCheckReport rep;
  int n = l.dim();
  for (int i = 0; i < n; ++i) {
    if (!l.mul(i, i).empty()) {
      rep.ok = false;
      rep.witness = "[x,x] != 0 at basis " + std::to_string(i);
      return rep;
    }
    for (int j = 0; j < i; ++j) {
      ++rep.pairs_checked;
      if (!(l.mul(i, j) == -l.mul(j, i))) {
        rep.ok = false;
        rep.witness = "anticommutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return rep;
      }
    }
  }
  if (full_jacobi) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) {
          ++rep.triples_checked;
          if (!jacobi_triple(l, i, j, k)) {
            rep.ok = false;
            rep.witness = "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")";
            return rep;
          }
        }
  } else {
    unsigned long long st = seed;
    for (long long t = 0; t < samples; ++t) {
      int i = (int)(splitmix(st) % (unsigned long long)n);
      int j = (int)(splitmix(st) % (unsigned long long)n);
      int k = (int)(splitmix(st) % (unsigned long long)n);
      ++rep.triples_checked;
      if (!jacobi_triple(l, i, j, k)) {
        rep.ok = false;
        rep.witness = "Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ")";
        return rep;
      }
    }
  }
  return rep;
}

RowSpace ideal_generated_by(const AlgebraSC& l, const SVec& v) {
  int n = l.dim();
  RowSpace span(n);
  std::vector<SVec> queue;
  if (span.insert(v)) queue.push_back(v);
  size_t head = 0;
  while (head < queue.size()) {
    SVec w = queue[head++];
    for (int g = 0; g < n; ++g) {
      SVec b = l.multiply(SVec::unit(g), w);
      if (span.insert(b)) {
        if (span.rank() == n) return span;
        queue.push_back(std::move(b));
      }
    }
  }
  return span;
}

RowSpace centralizer(const AlgebraSC& l, const std::vector<SVec>& family) {
  int n = l.dim();
  EchelonSolver solver(n);
  for (const SVec& t : family) {
    // [x, t] = 0: rows indexed by output coordinate
    std::map<int, SVec> rows;
    for (int i = 0; i < n; ++i) {
      SVec br = l.multiply(SVec::unit(i), t);
      for (const auto& [a, c] : br.t) rows[a].axpy(c, SVec::unit(i));
    }
    for (auto& [a, row] : rows) solver.add_row(std::move(row));
  }
  return solver.kernel();
}

KillingResult killing_simplicity(const LieAlg& l, const RowSpace* toral_seed) {
  const AlgebraSC& a = *l.algebra;
  int n = a.dim();
  KillingResult out;
  std::vector<LinOp> ads;
  for (int i = 0; i < n; ++i) ads.push_back(a.left_mult(SVec::unit(i)));
  out.killing = LinOp(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Cyclo v = trace_of_product(ads[(size_t)i], ads[(size_t)j]);
      if (!v.is_zero()) {
        out.killing.set_entry(i, j, v);
        if (i != j) out.killing.set_entry(j, i, v);
      }
    }
  out.rank_of_form = n - kernel_of(out.killing).rank();
  out.semisimple = (out.rank_of_form == n) && n > 0;
  if (!out.semisimple) {
    out.simple = false;
    return out;
  }
  // simplicity via connectedness of the root system
  RootDatum rd = cartan_and_roots(l, toral_seed);
  out.simple = rd.type_label.find('+') == std::string::npos;
  return out;
}

std::vector<Cyclo> rational_roots(const std::vector<Cyclo>& poly) {
  // clear denominators to an integer polynomial, try candidates p/q
  int deg = (int)poly.size() - 1;
  while (deg >= 0 && poly[(size_t)deg].is_zero()) --deg;
  if (deg <= 0) return {};
  std::vector<Rat> p((size_t)deg + 1);
  long long denlcm = 1;
  for (int i = 0; i <= deg; ++i) {
    if (!poly[(size_t)i].is_rational()) throw MathError("polynomial is not rational");
    p[(size_t)i] = poly[(size_t)i].rational_value();
    if (!p[(size_t)i].is_small()) throw MathError("rational root finding: coefficients too large");
    denlcm = std::lcm(denlcm, p[(size_t)i].den_small());
  }
  std::vector<long long> ip((size_t)deg + 1);
  for (int i = 0; i <= deg; ++i)
    ip[(size_t)i] = p[(size_t)i].num_small() * (denlcm / p[(size_t)i].den_small());
  auto divisors = [](long long v) {
    v = std::abs(v);
    std::vector<long long> d;
    for (long long k = 1; k * k <= v; ++k)
      if (v % k == 0) {
        d.push_back(k);
        d.push_back(v / k);
      }
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  };
  std::vector<Cyclo> roots;
  std::vector<Rat> cur(p);
  auto eval_and_deflate = [&](const Rat& r) {
    // synthetic division of cur by (x - r); returns true if remainder zero
    int d = (int)cur.size() - 1;
    while (d >= 0 && cur[(size_t)d].is_zero()) --d;
    if (d <= 0) return false;
    std::vector<Rat> q((size_t)d);
    Rat acc = cur[(size_t)d];
    for (int i = d - 1; i >= 0; --i) {
      q[(size_t)i] = acc;
      acc = cur[(size_t)i] + acc * r;
    }
    if (!acc.is_zero()) return false;
    cur = q;
    return true;
  };
  // zero roots first
  while (cur.size() > 1 && cur[0].is_zero()) {
    roots.push_back(Cyclo(0));
    cur.erase(cur.begin());
  }
  if (cur.size() <= 1) return roots;
  long long a0 = 0, alead = 0;
  {
    std::vector<long long> icur(cur.size());
    long long dl = 1;
    for (auto& c : cur) dl = std::lcm(dl, c.den_small());
    for (size_t i = 0; i < cur.size(); ++i) icur[i] = cur[i].num_small() * (dl / cur[i].den_small());
    a0 = icur[0];
    alead = icur.back();
  }
  for (long long pn : divisors(a0))
    for (long long qd : divisors(alead))
      for (int sgn : {1, -1}) {
        Rat cand(sgn * pn, qd);
        while (eval_and_deflate(cand)) roots.push_back(Cyclo(cand));
        if (cur.size() <= 1) return roots;
      }
  return roots;
}

bool is_semisimple_element(const AlgebraSC& l, const SVec& x) {
  LinOp ad = l.left_mult(x);
  std::vector<Cyclo> mp = minimal_polynomial(ad);
  // squarefree iff gcd(p, p') is constant
  std::vector<Cyclo> dp;
  for (size_t i = 1; i < mp.size(); ++i) dp.push_back(mp[i] * Cyclo((long long)i));
  auto pdeg = [](const std::vector<Cyclo>& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
      if (!p[(size_t)i].is_zero()) return i;
    return -1;
  };
  std::vector<Cyclo> a = mp, b = dp;
  while (pdeg(b) > 0) {
    // a mod b
    int da = pdeg(a), db = pdeg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    std::vector<Cyclo> r = a;
    for (int d = pdeg(r); d >= db; d = pdeg(r)) {
      Cyclo f = r[(size_t)d] / b[(size_t)db];
      for (int i = 0; i <= db; ++i) r[(size_t)(d - db + i)] -= f * b[(size_t)i];
    }
    a = std::move(b);
    b = std::move(r);
  }
  return pdeg(b) == 0 || (pdeg(b) < 0 && pdeg(a) <= 0);
}

bool subspace_is_cartan(const AlgebraSC& l, const RowSpace& h) {
  int n = l.dim();
  // abelian
  for (const SVec& x : h.rows())
    for (const SVec& y : h.rows())
      if (!l.multiply(x, y).empty()) return false;
  // self-normalizing: {x : [x, h] in h for all h} equals h
  EchelonSolver solver(n);
  for (const SVec& hb : h.rows()) {
    std::map<int, SVec> rows;
    for (int i = 0; i < n; ++i) {
      SVec br = h.reduce(l.multiply(SVec::unit(i), hb));
      for (const auto& [a, c] : br.t) rows[a].axpy(c, SVec::unit(i));
    }
    for (auto& [a, row] : rows) solver.add_row(std::move(row));
  }
  RowSpace norm = solver.kernel();
  if (norm.rank() != h.rank()) return false;
  for (const SVec& x : h.rows())
    if (!norm.contains(x)) return false;
  return true;
}

namespace {

// particular solution of a linear system given as rows (lhs over unknowns,
// rhs); returns nullopt when inconsistent
std::optional<SVec> solve_affine(int nunknowns,
                                 const std::vector<std::pair<SVec, Cyclo>>& equations) {
  EchelonSolver solver(nunknowns + 1);
  for (const auto& [lhs, rhs] : equations) {
    SVec row = lhs;
    if (!rhs.is_zero()) row.push(nunknowns, -rhs);
    solver.add_row(std::move(row));
  }
  RowSpace ker = solver.kernel();
  for (const SVec& k : ker.rows()) {
    Cyclo last = k.at(nunknowns);
    if (!last.is_zero()) {
      SVec sol;
      for (const auto& [i, c] : k.t)
        if (i < nunknowns) sol.push(i, c / last);
      return sol;
    }
  }
  return std::nullopt;
}

bool is_ad_nilpotent(const AlgebraSC& l, const SVec& e, int bound) {
  LinOp ad = l.left_mult(e);
  for (int j = 0; j < l.dim(); ++j) {
    SVec v = SVec::unit(j);
    int k = 0;
    while (!v.empty()) {
      v = ad.apply(v);
      if (++k > bound) return false;
    }
  }
  return true;
}

}  // namespace

RootDatum cartan_and_roots(const LieAlg& l, const RowSpace* toral_seed) {
  const AlgebraSC& a = *l.algebra;
  int n = a.dim();
  std::vector<SVec> torals;
  if (!toral_seed && a.component("toral")) toral_seed = a.component("toral");
  if (toral_seed)
    for (const SVec& t : toral_seed->rows()) torals.push_back(t);

  RowSpace h(n);
  for (int iter = 0; iter < n + 2; ++iter) {
    RowSpace z = torals.empty() ? RowSpace::full(n) : centralizer(a, torals);
    // derived space of z
    RowSpace zder(n);
    for (const SVec& x : z.rows())
      for (const SVec& y : z.rows()) zder.insert(a.multiply(x, y));
    if (zder.rank() == 0) {
      h = z;
      break;
    }
    // find a nilpotent element of the derived part
    std::optional<SVec> nil;
    std::vector<SVec> cands;
    for (const SVec& x : zder.rows()) cands.push_back(x);
    Cyclo im = Cyclo::root_of_unity(1, 4);
    int m = (int)zder.rank();
    for (int i = 0; i < m && (int)cands.size() < m + 120; ++i)
      for (int j = i + 1; j < m; ++j) {
        cands.push_back(zder.rows()[(size_t)i] + zder.rows()[(size_t)j]);
        cands.push_back(zder.rows()[(size_t)i] - zder.rows()[(size_t)j]);
        // anisotropic Q-forms (so(3)-like pieces) split only over Q(i)
        cands.push_back(zder.rows()[(size_t)i] + zder.rows()[(size_t)j] * im);
        cands.push_back(zder.rows()[(size_t)i] - zder.rows()[(size_t)j] * im);
      }
    unsigned long long st = 0xabcdef12345ULL;
    for (int t = 0; t < 120; ++t) {
      SVec r;
      for (const SVec& row : zder.rows()) {
        long long re = (long long)(splitmix(st) % 5) - 2;
        long long imc = t % 3 == 0 ? (long long)(splitmix(st) % 3) - 1 : 0;
        Cyclo coef = Cyclo(re) + im * Cyclo(imc);
        r.axpy(coef, row);
      }
      cands.push_back(std::move(r));
    }
    for (SVec& c : cands) {
      if (c.empty()) continue;
      if (is_ad_nilpotent(a, c, 40)) {
        nil = c;
        break;
      }
    }
    if (!nil) throw MathError("cartan search: no nilpotent element found in the centralizer");
    // Jacobson-Morozov inside z: h0 in [e, z] with [h0, e] = 2e
    const SVec& e = *nil;
    std::vector<SVec> zb = z.rows();
    int zk = (int)zb.size();
    {
      std::vector<std::pair<SVec, Cyclo>> eqs;
      // unknown y in z-coords; h0 = [e, y]; equation [[e,y], e] = 2e
      // row per output coordinate
      std::map<int, SVec> rows;
      SVec rhsv = e * Cyclo(2);
      for (int p = 0; p < zk; ++p) {
        SVec h0p = a.multiply(e, zb[(size_t)p]);
        SVec br = a.multiply(h0p, e);
        for (const auto& [coord, c] : br.t) rows[coord].axpy(c, SVec::unit(p));
      }
      std::set<int> coords_used;
      for (auto& [coord, row] : rows) coords_used.insert(coord);
      for (const auto& [coord, c] : rhsv.t) coords_used.insert(coord);
      for (int coord : coords_used) {
        SVec lhs = rows.count(coord) ? rows[coord] : SVec();
        eqs.emplace_back(lhs, rhsv.at(coord));
      }
      auto y = solve_affine(zk, eqs);
      if (!y) throw MathError("Jacobson-Morozov: no h with [h,e] = 2e");
      SVec h0;
      for (const auto& [p, c] : y->t) h0.axpy(c, a.multiply(e, zb[(size_t)p]));
      torals.push_back(std::move(h0));
    }
  }
  if (h.rank() == 0) throw MathError("cartan search failed to stabilize");

  RootDatum rd;
  rd.cartan = h;
  rd.rank = h.rank();
  // choose a cartan basis with rational ad-spectra: the climbing torals
  // first, then remaining echelon directions, rescaled by i when a direction
  // is split only after the twist
  std::vector<SVec> hbasis;
  {
    RowSpace spanned(n);
    for (const SVec& t : torals)
      if (h.contains(t) && spanned.insert(t)) hbasis.push_back(t);
    for (const SVec& row : h.rows())
      if (spanned.insert(row)) hbasis.push_back(row);
    if ((int)hbasis.size() != h.rank()) throw MathError("cartan basis assembly failed");
  }
  std::vector<LinOp> ads;
  std::vector<std::vector<Cyclo>> lists;
  Cyclo iunit = Cyclo::root_of_unity(1, 4);
  for (SVec& hb : hbasis) {
    bool done = false;
    for (int attempt = 0; attempt < 2 && !done; ++attempt) {
      LinOp ad = a.left_mult(hb);
      std::vector<Cyclo> mp = minimal_polynomial(ad);
      bool rational = true;
      for (const Cyclo& c : mp)
        if (!c.is_rational()) rational = false;
      std::vector<Cyclo> roots;
      if (rational) roots = rational_roots(mp);
      if (rational && (int)roots.size() == (int)mp.size() - 1) {
        std::sort(roots.begin(), roots.end(), [](const Cyclo& x, const Cyclo& y) {
          return x.rational_value().cmp(y.rational_value()) < 0;
        });
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        ads.push_back(std::move(ad));
        lists.push_back(std::move(roots));
        done = true;
      } else {
        hb = hb * iunit;  // retry with the quarter turn
      }
    }
    if (!done) throw MathError("non-split spectrum: ad(h) has irrational eigenvalues");
  }
  auto comps = simultaneous_eigenspaces(ads, lists);
  for (auto& ec : comps) {
    if (ec.space.rank() == 0) continue;
    bool zero = true;
    for (const Cyclo& v : ec.values)
      if (!v.is_zero()) zero = false;
    if (zero) {
      if (!(ec.space == h))
        throw MathError("zero weight space differs from the cartan (element not regular)");
      continue;
    }
    if (ec.space.rank() != 1)
      throw MathError("root space of dimension > 1; not a split semisimple decomposition");
    Vec alpha;
    for (const Cyclo& v : ec.values) alpha.push_back(v);
    rd.roots.push_back(std::move(alpha));
    rd.root_spaces.push_back(std::move(ec.space));
  }

  // Killing form restricted to the cartan via root values
  int r = rd.rank;
  LinOp kh(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclo s(0);
      for (const Vec& al : rd.roots) s += al[(size_t)i] * al[(size_t)j];
      kh.set_entry(i, j, s);
    }
  LinOp khinv = kh.inverse();
  auto inner = [&](const Vec& al, const Vec& be) {
    // (al, be) = al . kh^{-1} . be
    SVec bev;
    for (int i = 0; i < r; ++i) bev.push(i, be[(size_t)i]);
    SVec tb = khinv.apply(bev);
    Cyclo s(0);
    for (const auto& [i, c] : tb.t) s += al[(size_t)i] * c;
    return s;
  };

  // positive system via a generic functional
  std::vector<int> positive;
  for (long long big = 1;; big *= 257) {
    positive.clear();
    bool degenerate = false;
    for (int idx = 0; idx < (int)rd.roots.size(); ++idx) {
      Cyclo s(0);
      long long w = 1;
      for (int i = 0; i < r; ++i) {
        s += rd.roots[(size_t)idx][(size_t)i] * Cyclo(w);
        w *= (big + 1);
      }
      if (s.is_zero()) {
        degenerate = true;
        break;
      }
      if (s.rational_value().sign() > 0) positive.push_back(idx);
    }
    if (!degenerate) break;
    if (big > (1LL << 40)) throw MathError("could not find a generic functional for positivity");
  }
  std::set<Vec> posset;
  auto veceq = [](const Vec& a2, const Vec& b2) {
    if (a2.size() != b2.size()) return false;
    for (size_t i = 0; i < a2.size(); ++i)
      if (!(a2[i] == b2[i])) return false;
    return true;
  };
  (void)veceq;
  std::vector<Vec> posroots;
  for (int idx : positive) posroots.push_back(rd.roots[(size_t)idx]);
  auto is_pos_root = [&](const Vec& v) {
    for (const Vec& p : posroots) {
      bool eq = true;
      for (size_t i = 0; i < v.size(); ++i)
        if (!(v[i] == p[i])) {
          eq = false;
          break;
        }
      if (eq) return true;
    }
    return false;
  };
  for (int idx : positive) {
    // simple if not the sum of two positive roots
    bool sum = false;
    for (int j1 : positive) {
      if (sum) break;
      for (int j2 : positive) {
        Vec s((size_t)r);
        for (int i = 0; i < r; ++i)
          s[(size_t)i] = rd.roots[(size_t)j1][(size_t)i] + rd.roots[(size_t)j2][(size_t)i];
        bool eq = true;
        for (int i = 0; i < r; ++i)
          if (!(s[(size_t)i] == rd.roots[(size_t)idx][(size_t)i])) {
            eq = false;
            break;
          }
        if (eq) {
          sum = true;
          break;
        }
      }
    }
    if (!sum) rd.simple_roots.push_back(idx);
  }
  (void)is_pos_root;
  if ((int)rd.simple_roots.size() != r)
    throw MathError("simple root count " + std::to_string(rd.simple_roots.size()) +
                    " does not match rank " + std::to_string(r));

  rd.cartan_matrix.assign((size_t)r, std::vector<long long>((size_t)r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Cyclo v = Cyclo(2) * inner(rd.roots[(size_t)rd.simple_roots[(size_t)i]],
                                 rd.roots[(size_t)rd.simple_roots[(size_t)j]]) /
                inner(rd.roots[(size_t)rd.simple_roots[(size_t)j]],
                      rd.roots[(size_t)rd.simple_roots[(size_t)j]]);
      Rat rv = v.rational_value();
      if (!rv.is_integer()) throw MathError("Cartan matrix entry is not an integer");
      rd.cartan_matrix[(size_t)i][(size_t)j] = rv.to_int64();
    }

  // Dynkin classification
  {
    std::vector<std::vector<int>> adj((size_t)r);
    std::vector<std::pair<int, int>> mults;  // per edge (i<j): a_ij * a_ji
    auto edge_mult = [&](int i, int j) {
      return rd.cartan_matrix[(size_t)i][(size_t)j] * rd.cartan_matrix[(size_t)j][(size_t)i];
    };
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (i != j && rd.cartan_matrix[(size_t)i][(size_t)j] != 0) adj[(size_t)i].push_back(j);
    (void)mults;
    std::vector<int> comp((size_t)r, -1);
    int ncomp = 0;
    for (int i = 0; i < r; ++i) {
      if (comp[(size_t)i] >= 0) continue;
      std::vector<int> stack{i};
      comp[(size_t)i] = ncomp;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[(size_t)v])
          if (comp[(size_t)w] < 0) {
            comp[(size_t)w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }
    std::vector<std::string> names;
    for (int c = 0; c < ncomp; ++c) {
      std::vector<int> nodes;
      for (int i = 0; i < r; ++i)
        if (comp[(size_t)i] == c) nodes.push_back(i);
      int rk = (int)nodes.size();
      int triple = 0, dbl = 0;
      for (int i : nodes)
        for (int j : nodes)
          if (i < j && rd.cartan_matrix[(size_t)i][(size_t)j] != 0) {
            int m = (int)edge_mult(i, j);
            if (m == 3) ++triple;
            if (m == 2) ++dbl;
          }
      std::string name;
      auto degree = [&](int v) {
        int d = 0;
        for (int w : adj[(size_t)v]) {
          (void)w;
          ++d;
        }
        return d;
      };
      if (rk == 1) {
        name = "A1";
      } else if (triple > 0) {
        name = "G2";
      } else if (dbl > 0) {
        // B/C/F: a path with one double edge
        int maxdeg = 0;
        for (int v : nodes) maxdeg = std::max(maxdeg, degree(v));
        if (maxdeg > 2) throw MathError("unrecognized Dynkin diagram (branch + double edge)");
        if (rk == 2) {
          name = "B2";
        } else {
          // find the double edge; F4 iff it is interior
          int di = -1, dj = -1;
          for (int i : nodes)
            for (int j : nodes)
              if (i < j && rd.cartan_matrix[(size_t)i][(size_t)j] != 0 && edge_mult(i, j) == 2) {
                di = i;
                dj = j;
              }
          bool interior = degree(di) == 2 && degree(dj) == 2;
          if (interior && rk == 4) {
            name = "F4";
          } else {
            // short end => B, long end => C; a_ij = -2 means alpha_j short
            int endnode = degree(di) == 1 ? di : dj;
            bool end_short = false;
            int other = endnode == di ? dj : di;
            if (rd.cartan_matrix[(size_t)other][(size_t)endnode] == -2) end_short = true;
            name = (end_short ? "B" : "C") + std::to_string(rk);
          }
        }
      } else {
        int branch = -1, leaves = 0;
        for (int v : nodes) {
          if (degree(v) == 3) branch = v;
          if (degree(v) > 3) throw MathError("unrecognized Dynkin diagram (degree > 3)");
          if (degree(v) <= 1) ++leaves;
        }
        if (branch < 0) {
          name = "A" + std::to_string(rk);
        } else {
          // arm lengths from the branch node
          std::vector<int> arms;
          for (int w : adj[(size_t)branch]) {
            int len = 1, prev = branch, cur = w;
            while (true) {
              int nxt = -1;
              for (int u : adj[(size_t)cur])
                if (u != prev) nxt = u;
              if (nxt < 0) break;
              prev = cur;
              cur = nxt;
              ++len;
            }
            arms.push_back(len);
          }
          std::sort(arms.begin(), arms.end());
          if (arms == std::vector<int>{1, 1, rk - 3} || (rk == 4 && arms == std::vector<int>{1, 1, 1}))
            name = "D" + std::to_string(rk);
          else if (arms == std::vector<int>{1, 2, 2})
            name = "E6";
          else if (arms == std::vector<int>{1, 2, 3})
            name = "E7";
          else if (arms == std::vector<int>{1, 2, 4})
            name = "E8";
          else
            throw MathError("unrecognized simply-laced Dynkin diagram");
        }
        (void)leaves;
      }
      names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    std::string label;
    for (size_t i = 0; i < names.size(); ++i) {
      if (i) label += "+";
      label += names[i];
    }
    rd.type_label = label;
  }
  return rd;
}

Grading root_space_grading(const LieAlg& l, const RootDatum& rd) {
  int r = rd.rank;
  // express each root in the simple-root basis (integer coordinates)
  LinOp m(r, r);  // columns = simple roots
  for (int j = 0; j < r; ++j) {
    SVec col;
    for (int i = 0; i < r; ++i) col.axpy(rd.roots[(size_t)rd.simple_roots[(size_t)j]][(size_t)i],
                                         SVec::unit(i));
    m.set_col(j, std::move(col));
  }
  LinOp minv = m.inverse();
  Grading g;
  g.target = l.algebra;
  g.group = AbGroup::free(r);
  g.comps.emplace_back(g_zero(g.group), rd.cartan);
  for (size_t k = 0; k < rd.roots.size(); ++k) {
    SVec al;
    for (int i = 0; i < r; ++i) al.axpy(rd.roots[k][(size_t)i], SVec::unit(i));
    SVec coords = minv.apply(al);
    GElem d{std::vector<long long>((size_t)r, 0)};
    for (const auto& [i, c] : coords.t) {
      Rat rv = c.rational_value();
      if (!rv.is_integer()) throw MathError("root coordinates are not integers");
      d.v[(size_t)i] = rv.to_int64();
    }
    g.comps.emplace_back(std::move(d), rd.root_spaces[k]);
  }
  g.sort_components();
  return g;
}

}  // namespace exf
