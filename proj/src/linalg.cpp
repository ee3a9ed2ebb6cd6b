#include "exforge/linalg.hpp"

#include <algorithm>
#include <map>

namespace exf {

SVec SVec::unit(int i, Cyclo c) {
  SVec v;
  if (!c.is_zero()) v.t.emplace_back(i, std::move(c));
  return v;
}

SVec SVec::from_dense(const Vec& v) {
  SVec r;
  for (int i = 0; i < (int)v.size(); ++i)
    if (!v[i].is_zero()) r.t.emplace_back(i, v[i]);
  return r;
}

Vec SVec::to_dense(int n) const {
  Vec v(n, Cyclo(0));
  for (const auto& [i, c] : t) v[(size_t)i] = c;
  return v;
}

void SVec::push(int i, Cyclo c) {
  if (c.is_zero()) return;
  if (!t.empty() && t.back().first >= i)
    throw MathError("SVec::push indices must increase");
  t.emplace_back(i, std::move(c));
}

Cyclo SVec::at(int i) const {
  auto it = std::lower_bound(t.begin(), t.end(), i,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != t.end() && it->first == i) return it->second;
  return Cyclo(0);
}

SVec SVec::operator-() const {
  SVec r = *this;
  for (auto& [i, c] : r.t) c = -c;
  return r;
}

SVec SVec::operator*(const Cyclo& c) const {
  if (c.is_zero()) return SVec();
  SVec r = *this;
  for (auto& [i, x] : r.t) x *= c;
  return r;
}

void SVec::axpy(const Cyclo& c, const SVec& o) {
  if (c.is_zero() || o.t.empty()) return;
  std::vector<std::pair<int, Cyclo>> out;
  out.reserve(t.size() + o.t.size());
  size_t i = 0, j = 0;
  while (i < t.size() || j < o.t.size()) {
    if (j == o.t.size() || (i < t.size() && t[i].first < o.t[j].first)) {
      out.push_back(std::move(t[i++]));
    } else if (i == t.size() || o.t[j].first < t[i].first) {
      Cyclo v = c * o.t[j].second;
      if (!v.is_zero()) out.emplace_back(o.t[j].first, std::move(v));
      ++j;
    } else {
      Cyclo v = t[i].second + c * o.t[j].second;
      if (!v.is_zero()) out.emplace_back(t[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  t = std::move(out);
}

SVec SVec::operator+(const SVec& o) const {
  SVec r = *this;
  r.axpy(Cyclo(1), o);
  return r;
}

SVec SVec::operator-(const SVec& o) const {
  SVec r = *this;
  r.axpy(Cyclo(-1), o);
  return r;
}

Cyclo dot(const SVec& a, const Vec& b) {
  Cyclo s(0);
  for (const auto& [i, c] : a.t) s += c * b[(size_t)i];
  return s;
}

// ---------------------------------------------------------------------------
// RowSpace

RowSpace RowSpace::full(int n) {
  RowSpace r(n);
  for (int i = 0; i < n; ++i) {
    r.rows_.push_back(SVec::unit(i));
    r.pivots_.push_back(i);
  }
  return r;
}

RowSpace RowSpace::span(int ambient, const std::vector<SVec>& gens) {
  RowSpace r(ambient);
  for (const SVec& g : gens) r.insert(g);
  return r;
}

SVec RowSpace::reduce(SVec v) const {
  // full reduction: every coordinate sitting on a pivot column is cleared;
  // subtracting a RREF row only touches indices >= its pivot, so earlier
  // terms of v stay settled
  size_t k = 0;
  while (k < v.t.size()) {
    int idx = v.t[k].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), idx);
    if (it != pivots_.end() && *it == idx) {
      Cyclo c = v.t[k].second;
      v.axpy(-c, rows_[(size_t)(it - pivots_.begin())]);
    } else {
      ++k;
    }
  }
  return v;
}

bool RowSpace::insert(SVec v) {
  v = reduce(v);
  if (v.empty()) return false;
  Cyclo lead = v.t.front().second;
  if (!lead.is_one()) v = v * lead.inv();
  int p = v.lead();
  // eliminate the new pivot from existing rows to keep RREF canonical
  for (size_t i = 0; i < rows_.size(); ++i) {
    Cyclo c = rows_[i].at(p);
    if (!c.is_zero()) rows_[i].axpy(-c, v);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = (size_t)(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::optional<Vec> RowSpace::coords(const SVec& v) const {
  Vec c(rows_.size(), Cyclo(0));
  SVec w = v;
  while (!w.empty()) {
    int lead = w.lead();
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    if (it == pivots_.end() || *it != lead) return std::nullopt;
    size_t idx = (size_t)(it - pivots_.begin());
    Cyclo coef = w.t.front().second;
    c[idx] = coef;
    w.axpy(-coef, rows_[idx]);
  }
  return c;
}

RowSpace RowSpace::sum(const RowSpace& o) const {
  RowSpace r = *this;
  for (const SVec& row : o.rows_) r.insert(row);
  return r;
}

RowSpace RowSpace::intersect(const RowSpace& o) const {
  // Solve sum_i x_i a_i = sum_j y_j b_j; unknowns (x, y).
  int ra = rank(), rb = o.rank();
  if (ra == 0 || rb == 0) return RowSpace(n_);
  EchelonSolver solver(ra + rb);
  // constraints indexed by ambient coordinate
  std::map<int, SVec> constraint;
  for (int i = 0; i < ra; ++i)
    for (const auto& [c, v] : rows_[(size_t)i].t) constraint[c].push(i, v);
  for (int j = 0; j < rb; ++j)
    for (const auto& [c, v] : o.rows_[(size_t)j].t) constraint[c].push(ra + j, -v);
  for (auto& [c, row] : constraint) solver.add_row(std::move(row));
  RowSpace ker = solver.kernel();
  RowSpace out(n_);
  for (const SVec& sol : ker.rows()) {
    SVec vec;
    for (const auto& [k, coef] : sol.t) {
      if (k >= ra) break;
      vec.axpy(coef, rows_[(size_t)k]);
    }
    out.insert(vec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// EchelonSolver

void EchelonSolver::add_row(SVec r) {
  while (!r.empty()) {
    int lead = r.lead();
    auto it = std::lower_bound(pivot_of_.begin(), pivot_of_.end(), lead);
    if (it == pivot_of_.end() || *it != lead) {
      Cyclo c = r.t.front().second;
      if (!c.is_one()) r = r * c.inv();
      size_t idx = (size_t)(it - pivot_of_.begin());
      pivot_of_.insert(it, lead);
      rows_.insert(rows_.begin() + idx, std::move(r));
      return;
    }
    size_t idx = (size_t)(it - pivot_of_.begin());
    Cyclo c = r.t.front().second;
    r.axpy(-c, rows_[idx]);
  }
}

RowSpace EchelonSolver::kernel() {
  // back-substitute to RREF first
  for (int i = (int)rows_.size() - 1; i >= 0; --i) {
    for (int j = 0; j < i; ++j) {
      Cyclo c = rows_[(size_t)j].at(pivot_of_[(size_t)i]);
      if (!c.is_zero()) rows_[(size_t)j].axpy(-c, rows_[(size_t)i]);
    }
  }
  std::vector<char> is_pivot(n_, 0);
  for (int p : pivot_of_) is_pivot[(size_t)p] = 1;
  RowSpace ker(n_);
  for (int f = 0; f < n_; ++f) {
    if (is_pivot[(size_t)f]) continue;
    SVec sol;
    // order terms by index: pivots below f have entries, plus 1 at f
    std::vector<std::pair<int, Cyclo>> terms;
    for (size_t r = 0; r < rows_.size(); ++r) {
      Cyclo c = rows_[r].at(f);
      if (!c.is_zero()) terms.emplace_back(pivot_of_[r], -c);
    }
    terms.emplace_back(f, Cyclo(1));
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    sol.t = std::move(terms);
    ker.insert(sol);
  }
  return ker;
}

// ---------------------------------------------------------------------------
// LinOp

LinOp LinOp::identity(int n) {
  LinOp m(n, n);
  for (int j = 0; j < n; ++j) m.col_[j] = SVec::unit(j);
  return m;
}

void LinOp::set_entry(int i, int j, const Cyclo& c) {
  SVec& col = col_[(size_t)j];
  auto it = std::lower_bound(col.t.begin(), col.t.end(), i,
                             [](const auto& p, int k) { return p.first < k; });
  if (it != col.t.end() && it->first == i) {
    if (c.is_zero())
      col.t.erase(it);
    else
      it->second = c;
  } else if (!c.is_zero()) {
    col.t.emplace(it, i, c);
  }
}

SVec LinOp::apply(const SVec& v) const {
  SVec r;
  for (const auto& [j, c] : v.t) r.axpy(c, col_[(size_t)j]);
  return r;
}

Vec LinOp::apply(const Vec& v) const {
  Vec r((size_t)nr_, Cyclo(0));
  for (int j = 0; j < nc_; ++j) {
    if (v[(size_t)j].is_zero()) continue;
    for (const auto& [i, c] : col_[(size_t)j].t) r[(size_t)i] += c * v[(size_t)j];
  }
  return r;
}

LinOp LinOp::compose(const LinOp& o) const {
  if (nc_ != o.nr_) throw MathError("operator composition shape mismatch");
  LinOp r(nr_, o.nc_);
  for (int j = 0; j < o.nc_; ++j) r.col_[(size_t)j] = apply(o.col_[(size_t)j]);
  return r;
}

LinOp LinOp::operator+(const LinOp& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw MathError("operator addition shape mismatch");
  LinOp r = *this;
  for (int j = 0; j < nc_; ++j) r.col_[(size_t)j].axpy(Cyclo(1), o.col_[(size_t)j]);
  return r;
}

LinOp LinOp::operator-(const LinOp& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw MathError("operator subtraction shape mismatch");
  LinOp r = *this;
  for (int j = 0; j < nc_; ++j) r.col_[(size_t)j].axpy(Cyclo(-1), o.col_[(size_t)j]);
  return r;
}

LinOp LinOp::operator*(const Cyclo& c) const {
  LinOp r(nr_, nc_);
  for (int j = 0; j < nc_; ++j) r.col_[(size_t)j] = col_[(size_t)j] * c;
  return r;
}

LinOp LinOp::commutator(const LinOp& o) const {
  return compose(o) - o.compose(*this);
}

LinOp LinOp::transpose() const {
  LinOp r(nc_, nr_);
  for (int j = 0; j < nc_; ++j)
    for (const auto& [i, c] : col_[(size_t)j].t) r.col_[(size_t)i].t.emplace_back(j, c);
  return r;  // columns built in increasing row order, already sorted
}

LinOp LinOp::pow(int e) const {
  LinOp acc = identity(nr_);
  for (int k = 0; k < e; ++k) acc = compose(acc);
  return acc;
}

bool LinOp::operator==(const LinOp& o) const {
  return nr_ == o.nr_ && nc_ == o.nc_ && col_ == o.col_;
}

bool LinOp::is_zero() const {
  for (const SVec& c : col_)
    if (!c.empty()) return false;
  return true;
}

size_t LinOp::nnz() const {
  size_t n = 0;
  for (const SVec& c : col_) n += c.nnz();
  return n;
}

SVec LinOp::flatten() const {
  SVec v;
  for (int j = 0; j < nc_; ++j)
    for (const auto& [i, c] : col_[(size_t)j].t) v.t.emplace_back(j * nr_ + i, c);
  return v;
}

LinOp LinOp::unflatten(const SVec& v, int nrows, int ncols) {
  LinOp m(nrows, ncols);
  for (const auto& [k, c] : v.t) m.col_[(size_t)(k / nrows)].t.emplace_back(k % nrows, c);
  return m;
}

Cyclo LinOp::trace() const {
  Cyclo s(0);
  for (int j = 0; j < std::min(nr_, nc_); ++j) s += col_[(size_t)j].at(j);
  return s;
}

Cyclo trace_of_product(const LinOp& a, const LinOp& b) {
  // tr(ab) = sum_{i,j} a[i][j] b[j][i]
  Cyclo s(0);
  for (int j = 0; j < b.ncols(); ++j) {
    const SVec& bc = b.col(j);
    if (bc.empty()) continue;
    for (const auto& [i, c] : bc.t) {
      Cyclo aji = a.col(i).at(j);
      if (!aji.is_zero()) s += aji * c;
    }
  }
  return s;
}

LinOp LinOp::inverse() const {
  if (nr_ != nc_) throw MathError("inverse of non-square operator");
  int n = nr_;
  // dense Gauss-Jordan on [A | I]
  std::vector<Vec> a(n, Vec((size_t)n, Cyclo(0)));
  std::vector<Vec> inv(n, Vec((size_t)n, Cyclo(0)));
  for (int j = 0; j < n; ++j)
    for (const auto& [i, c] : col_[(size_t)j].t) a[(size_t)i][(size_t)j] = c;
  for (int i = 0; i < n; ++i) inv[(size_t)i][(size_t)i] = Cyclo(1);
  for (int cpos = 0; cpos < n; ++cpos) {
    int prow = -1;
    for (int r = cpos; r < n; ++r)
      if (!a[(size_t)r][(size_t)cpos].is_zero()) { prow = r; break; }
    if (prow < 0) throw MathError("singular matrix has no inverse");
    std::swap(a[(size_t)prow], a[(size_t)cpos]);
    std::swap(inv[(size_t)prow], inv[(size_t)cpos]);
    Cyclo pinv = a[(size_t)cpos][(size_t)cpos].inv();
    for (int j = 0; j < n; ++j) {
      a[(size_t)cpos][(size_t)j] *= pinv;
      inv[(size_t)cpos][(size_t)j] *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == cpos) continue;
      Cyclo f = a[(size_t)r][(size_t)cpos];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a[(size_t)r][(size_t)j] -= f * a[(size_t)cpos][(size_t)j];
        inv[(size_t)r][(size_t)j] -= f * inv[(size_t)cpos][(size_t)j];
      }
    }
  }
  LinOp r(n, n);
  for (int j = 0; j < n; ++j) {
    SVec col;
    for (int i = 0; i < n; ++i) col.push(i, inv[(size_t)i][(size_t)j]);
    r.set_col(j, std::move(col));
  }
  return r;
}

RowSpace kernel_of(const LinOp& op) {
  EchelonSolver solver(op.ncols());
  LinOp t = op.transpose();  // rows of op = columns of transpose
  for (int i = 0; i < t.ncols(); ++i) solver.add_row(t.col(i));
  return solver.kernel();
}

std::vector<Cyclo> minimal_polynomial(const LinOp& op) {
  if (op.nrows() != op.ncols()) throw MathError("minimal polynomial of non-square operator");
  int n = op.nrows();
  // Krylov from several start vectors; lcm of annihilators via growing echelon.
  // Track for each start vector the first linear dependence of v, Av, A^2 v, ...
  std::vector<Cyclo> minpoly{Cyclo(1)};  // polynomial 1 (degree 0)

  auto polyeval_apply = [&](const std::vector<Cyclo>& p, const SVec& v) {
    // p(A) v
    SVec acc;
    SVec power = v;
    for (size_t k = 0; k < p.size(); ++k) {
      if (!p[k].is_zero()) acc.axpy(p[k], power);
      if (k + 1 < p.size()) power = op.apply(power);
    }
    return acc;
  };

  for (int start = 0; start < n; ++start) {
    SVec v0 = polyeval_apply(minpoly, SVec::unit(start));
    if (v0.empty()) continue;
    // Krylov sequence of v0
    RowSpace spanned(n);
    std::vector<SVec> seq;
    SVec v = v0;
    while (true) {
      if (!spanned.insert(v)) break;
      seq.push_back(v);
      v = op.apply(v);
    }
    // solve sum c_k A^k v0 = A^m v0 with m = seq.size()
    EchelonSolver es((int)seq.size() + 1);
    std::map<int, SVec> constraint;
    for (size_t k = 0; k < seq.size(); ++k)
      for (const auto& [i, c] : seq[k].t) constraint[i].push((int)k, c);
    for (const auto& [i, c] : v.t) constraint[i].push((int)seq.size(), c);
    for (auto& [i, row] : constraint) es.add_row(std::move(row));
    RowSpace ker = es.kernel();
    if (ker.rank() != 1) throw MathError("minimal polynomial: unexpected kernel rank");
    Vec rel = ker.rows()[0].to_dense((int)seq.size() + 1);
    Cyclo leadc = rel.back();
    std::vector<Cyclo> ann(seq.size() + 1);
    for (size_t k = 0; k <= seq.size(); ++k) ann[k] = rel[k] / leadc;
    // minpoly := minpoly * ann (they are coprime-ish in sequence; product works
    // because we seeded with minpoly(A) v already)
    std::vector<Cyclo> prod(minpoly.size() + ann.size() - 1, Cyclo(0));
    for (size_t i = 0; i < minpoly.size(); ++i)
      for (size_t j = 0; j < ann.size(); ++j) prod[i + j] += minpoly[i] * ann[j];
    minpoly = std::move(prod);
  }
  return minpoly;
}

std::vector<EigenComponent> simultaneous_eigenspaces(
    const std::vector<LinOp>& ops,
    const std::vector<std::vector<Cyclo>>& eigenvalues,
    const RowSpace& domain) {
  if (ops.size() != eigenvalues.size())
    throw MathError("eigenvalue list count must match operator count");
  for (size_t a = 0; a < ops.size(); ++a)
    for (size_t b = a + 1; b < ops.size(); ++b)
      if (!(ops[a].compose(ops[b]) == ops[b].compose(ops[a])))
        throw MathError("simultaneous eigenspaces require commuting operators");
  for (size_t a = 0; a < ops.size(); ++a) {
    LinOp p = LinOp::identity(ops[a].nrows());
    for (const Cyclo& lam : eigenvalues[a])
      p = p.compose(ops[a] - LinOp::identity(ops[a].nrows()) * lam);
    // annihilation only needs to hold on the domain
    for (const SVec& row : domain.rows())
      if (!p.apply(row).empty())
        throw MathError("operator is not diagonalizable with the declared eigenvalues");
  }

  std::vector<EigenComponent> comps;
  comps.push_back(EigenComponent{{}, domain});
  for (size_t a = 0; a < ops.size(); ++a) {
    std::vector<EigenComponent> next;
    for (const EigenComponent& comp : comps) {
      int r = comp.space.rank();
      if (r == 0) continue;
      // matrix of op on component coordinates; requires invariance
      std::vector<Vec> m(r);
      for (int k = 0; k < r; ++k) {
        SVec img = ops[a].apply(comp.space.rows()[(size_t)k]);
        auto c = comp.space.coords(img);
        if (!c) throw MathError("operator does not preserve a refinement component");
        m[(size_t)k] = *c;
      }
      LinOp local(r, r);
      for (int k = 0; k < r; ++k) {
        SVec col;
        for (int i = 0; i < r; ++i) col.push(i, m[(size_t)k][(size_t)i]);
        local.set_col(k, std::move(col));  // column k = image of basis k
      }
      int found = 0;
      for (const Cyclo& lam : eigenvalues[a]) {
        RowSpace ker = kernel_of(local - LinOp::identity(r) * lam);
        if (ker.rank() == 0) continue;
        EigenComponent ec;
        ec.values = comp.values;
        ec.values.push_back(lam);
        RowSpace sp(comp.space.ambient());
        for (const SVec& coef : ker.rows()) {
          SVec v;
          for (const auto& [k, c] : coef.t) v.axpy(c, comp.space.rows()[(size_t)k]);
          sp.insert(v);
        }
        ec.space = sp;
        found += sp.rank();
        next.push_back(std::move(ec));
      }
      if (found != r)
        throw MathError("eigenspace refinement lost dimensions (missing eigenvalue?)");
    }
    comps = std::move(next);
  }
  return comps;
}

std::vector<EigenComponent> simultaneous_eigenspaces(
    const std::vector<LinOp>& ops,
    const std::vector<std::vector<Cyclo>>& eigenvalues) {
  if (ops.empty()) throw MathError("no operators given");
  return simultaneous_eigenspaces(ops, eigenvalues, RowSpace::full(ops[0].nrows()));
}

}  // namespace exf
