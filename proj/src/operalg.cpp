#include "exforge/operalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exf {

namespace {

// Leibniz constraint rows for the pair (i,j), one row per output coordinate.
// Unknown D[a][k] (coefficient of x_a in d(x_k)) has flat index k*n + a.
void leibniz_rows(const AlgebraSC& alg, int i, int j,
                  std::map<int, std::vector<std::pair<int, Cyclo>>>& rows) {
  int n = alg.dim();
  rows.clear();
  for (const auto& [k, c] : alg.mul(i, j).t)
    for (int a = 0; a < n; ++a) rows[a].emplace_back(k * n + a, c);
  for (int b = 0; b < n; ++b) {
    for (const auto& [a, c] : alg.mul(b, j).t) rows[a].emplace_back(i * n + b, -c);
    for (const auto& [a, c] : alg.mul(i, b).t) rows[a].emplace_back(j * n + b, -c);
  }
}

SVec collect_row(std::vector<std::pair<int, Cyclo>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec r;
  for (auto& [i, c] : terms) {
    if (!r.t.empty() && r.t.back().first == i)
      r.t.back().second += c;
    else
      r.t.emplace_back(i, c);
  }
  std::erase_if(r.t, [](const auto& p) { return p.second.is_zero(); });
  return r;
}

}  // namespace

RowSpace derivation_space(const AlgebraSC& a, bool commute_with_involution) {
  int n = a.dim();
  EchelonSolver solver(n * n);
  std::map<int, std::vector<std::pair<int, Cyclo>>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      leibniz_rows(a, i, j, rows);
      for (auto& [out, terms] : rows) solver.add_row(collect_row(std::move(terms)));
    }
  if (commute_with_involution) {
    const LinOp& s = *a.involution();
    // d(s(x_j)) - s(d(x_j)) = 0
    for (int j = 0; j < n; ++j) {
      std::map<int, std::vector<std::pair<int, Cyclo>>> crows;
      for (const auto& [k, c] : s.col(j).t)
        for (int aa = 0; aa < n; ++aa) crows[aa].emplace_back(k * n + aa, c);
      for (int b = 0; b < n; ++b)
        for (const auto& [aa, c] : s.col(b).t) crows[aa].emplace_back(j * n + b, -c);
      for (auto& [out, terms] : crows) solver.add_row(collect_row(std::move(terms)));
    }
  }
  return solver.kernel();
}

GradedOperatorSpace derivation_space_graded(const AlgebraSC& a, const Grading& g,
                                            bool commute_with_involution) {
  int n = a.dim();
  // adapted basis and algebra
  std::vector<GElem> adeg;
  LinOp to_std(n, n);
  {
    int k = 0;
    for (const auto& [d, s] : g.comps)
      for (const SVec& row : s.rows()) {
        to_std.set_col(k, row);
        adeg.push_back(d);
        ++k;
      }
    if (k != n) throw MathError("grading does not fill the algebra");
  }
  LinOp from_std = to_std.inverse();
  AlgebraSC ad("adapted", std::vector<std::string>(a.labels().begin(), a.labels().end()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ad.set_mul(i, j, from_std.apply(a.multiply(to_std.col(i), to_std.col(j))));
  std::optional<LinOp> ainv;
  if (commute_with_involution)
    ainv = from_std.compose(*a.involution()).compose(to_std);

  // candidate degrees: differences of support degrees (the involution used
  // here is degree preserving; der pieces outside this set are impossible)
  std::set<GElem> cand;
  for (const auto& [d1, s1] : g.comps)
    for (const auto& [d2, s2] : g.comps) cand.insert(g_add(g.group, d1, g_neg(g.group, d2)));

  GradedOperatorSpace out;
  out.total = RowSpace(n * n);
  std::map<int, std::vector<std::pair<int, Cyclo>>> rows;
  for (const GElem& d : cand) {
    // unknown slots: (k -> a) with deg(a) = deg(k) + d
    std::vector<int> slot((size_t)n * n, -1);
    std::vector<std::pair<int, int>> slots;  // (a, k)
    for (int k = 0; k < n; ++k)
      for (int aa = 0; aa < n; ++aa)
        if (g_add(g.group, adeg[(size_t)k], d) == adeg[(size_t)aa]) {
          slot[(size_t)(k * n + aa)] = (int)slots.size();
          slots.emplace_back(aa, k);
        }
    if (slots.empty()) continue;
    EchelonSolver solver((int)slots.size());
    auto add_projected = [&](std::vector<std::pair<int, Cyclo>> terms) {
      std::vector<std::pair<int, Cyclo>> proj;
      for (auto& [flat, c] : terms) {
        int si = slot[(size_t)flat];
        if (si >= 0) proj.emplace_back(si, c);
        // unknowns outside the block are zero for this degree piece
      }
      SVec r = collect_row(std::move(proj));
      if (!r.empty()) solver.add_row(std::move(r));
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        leibniz_rows(ad, i, j, rows);
        for (auto& [o, terms] : rows) add_projected(std::move(terms));
      }
    if (ainv) {
      for (int j = 0; j < n; ++j) {
        std::map<int, std::vector<std::pair<int, Cyclo>>> crows;
        for (const auto& [k, c] : ainv->col(j).t)
          for (int aa = 0; aa < n; ++aa) crows[aa].emplace_back(k * n + aa, c);
        for (int b = 0; b < n; ++b)
          for (const auto& [aa, c] : ainv->col(b).t) crows[aa].emplace_back(j * n + b, -c);
        for (auto& [o, terms] : crows) add_projected(std::move(terms));
      }
    }
    RowSpace ker = solver.kernel();
    if (ker.rank() == 0) continue;
    RowSpace piece(n * n);
    for (const SVec& sol : ker.rows()) {
      LinOp dd(n, n);
      for (const auto& [si, c] : sol.t) dd.set_entry(slots[(size_t)si].first, slots[(size_t)si].second, c);
      LinOp std_op = to_std.compose(dd).compose(from_std);
      SVec flat = std_op.flatten();
      piece.insert(flat);
      out.total.insert(flat);
    }
    out.pieces.emplace_back(d, std::move(piece));
  }
  return out;
}

CoordSolver::CoordSolver(int ambient, const std::vector<SVec>& family)
    : n_(ambient), k_((int)family.size()), aug_(ambient + (int)family.size()) {
  for (int k = 0; k < k_; ++k) {
    SVec r = family[(size_t)k];
    r.t.emplace_back(n_ + k, Cyclo(1));
    if (!aug_.insert(r)) throw MathError("CoordSolver family is not independent");
  }
}

std::optional<SVec> CoordSolver::coords(const SVec& v) const {
  SVec resid = aug_.reduce(v);
  SVec c;
  for (const auto& [i, x] : resid.t) {
    if (i < n_) return std::nullopt;
    c.push(i - n_, -x);
  }
  return c;
}

AlgebraSC subalgebra_on_basis(const AlgebraSC& ambient, const std::string& name,
                              const std::vector<std::string>& labels,
                              const std::vector<SVec>& basis, ProductRule rule) {
  CoordSolver cs(ambient.dim(), basis);
  AlgebraSC sub(name, labels);
  int n = (int)basis.size();
  Cyclo half(Rat(1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SVec p;
      switch (rule) {
        case ProductRule::Plain:
          p = ambient.multiply(basis[(size_t)i], basis[(size_t)j]);
          break;
        case ProductRule::Symmetrized: {
          p = ambient.multiply(basis[(size_t)i], basis[(size_t)j]);
          p.axpy(Cyclo(1), ambient.multiply(basis[(size_t)j], basis[(size_t)i]));
          p = p * half;
          break;
        }
        case ProductRule::Commutator: {
          p = ambient.multiply(basis[(size_t)i], basis[(size_t)j]);
          p.axpy(Cyclo(-1), ambient.multiply(basis[(size_t)j], basis[(size_t)i]));
          break;
        }
      }
      auto c = cs.coords(p);
      if (!c)
        throw MathError(name + ": product of basis " + std::to_string(i) + "," +
                        std::to_string(j) + " escapes the span");
      sub.set_mul(i, j, std::move(*c));
    }
  if (rule == ProductRule::Commutator) sub.set_anticommutative(true);
  return sub;
}

OperatorSpan operator_span(int n, const std::vector<LinOp>& gens) {
  OperatorSpan out;
  out.span = RowSpace(n * n);
  for (const LinOp& g : gens) out.span.insert(g.flatten());
  for (const SVec& row : out.span.rows()) out.basis.push_back(LinOp::unflatten(row, n, n));
  return out;
}

OperatorSpan lie_closure(int n, const std::vector<LinOp>& gens) {
  RowSpace span(n * n);
  std::vector<LinOp> work;
  for (const LinOp& g : gens)
    if (span.insert(g.flatten())) work.push_back(g);
  size_t frontier = 0;
  while (frontier < work.size()) {
    size_t hi = work.size();
    for (size_t i = frontier; i < hi; ++i)
      for (size_t j = 0; j < hi; ++j) {
        LinOp c = work[i].commutator(work[j]);
        if (span.insert(c.flatten())) work.push_back(std::move(c));
      }
    frontier = hi;
  }
  OperatorSpan out;
  out.span = std::move(span);
  for (const SVec& row : out.span.rows()) out.basis.push_back(LinOp::unflatten(row, n, n));
  return out;
}

}  // namespace exf
