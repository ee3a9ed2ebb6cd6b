#include "exforge/grading.hpp"

#include <algorithm>
#include <set>

#include "exforge/snf.hpp"

namespace exf {

const RowSpace* Grading::component(const GElem& g) const {
  for (const auto& [d, s] : comps)
    if (d == g) return &s;
  return nullptr;
}

void Grading::sort_components() {
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

Grading Grading::from_degrees(AlgebraPtr target, AbGroup group,
                              const std::vector<GElem>& degree_of_basis) {
  if ((int)degree_of_basis.size() != target->dim())
    throw MathError("degree map size must equal algebra dimension");
  std::map<GElem, RowSpace> by_deg;
  for (int i = 0; i < target->dim(); ++i) {
    GElem d = g_reduce(group, degree_of_basis[(size_t)i]);
    auto it = by_deg.find(d);
    if (it == by_deg.end()) it = by_deg.emplace(d, RowSpace(target->dim())).first;
    it->second.insert(SVec::unit(i));
  }
  Grading g;
  g.target = std::move(target);
  g.group = std::move(group);
  for (auto& [d, s] : by_deg) g.comps.emplace_back(d, std::move(s));
  return g;
}

Grading Grading::from_homogeneous_vectors(
    AlgebraPtr target, AbGroup group,
    const std::vector<std::pair<GElem, SVec>>& gens) {
  std::map<GElem, RowSpace> by_deg;
  for (const auto& [d0, v] : gens) {
    GElem d = g_reduce(group, d0);
    auto it = by_deg.find(d);
    if (it == by_deg.end()) it = by_deg.emplace(d, RowSpace(target->dim())).first;
    it->second.insert(v);
  }
  Grading g;
  g.target = std::move(target);
  g.group = std::move(group);
  for (auto& [d, s] : by_deg)
    if (s.rank() > 0) g.comps.emplace_back(d, std::move(s));
  return g;
}

CheckReport check_grading(const Grading& g) {
  CheckReport rep;
  const AlgebraSC& a = *g.target;
  // direct sum filling the space
  RowSpace all(a.dim());
  int total = 0;
  for (const auto& [d, s] : g.comps) {
    total += s.rank();
    for (const SVec& row : s.rows()) {
      if (!all.insert(row)) {
        rep.ok = false;
        rep.witness = "components are not independent at degree " + d.str();
        return rep;
      }
    }
  }
  if (total != a.dim() || all.rank() != a.dim()) {
    rep.ok = false;
    rep.witness = "components do not fill the algebra (sum dim " +
                  std::to_string(total) + " of " + std::to_string(a.dim()) + ")";
    return rep;
  }
  // compatibility A_g A_h <= A_{g+h}
  for (const auto& [dg, sg] : g.comps)
    for (const auto& [dh, sh] : g.comps) {
      GElem sum = g_add(g.group, dg, dh);
      const RowSpace* dst = g.component(sum);
      for (const SVec& x : sg.rows())
        for (const SVec& y : sh.rows()) {
          SVec p = a.multiply(x, y);
          if (p.empty()) continue;
          if (!dst || !dst->contains(p)) {
            rep.ok = false;
            rep.witness = "product of degrees " + dg.str() + " and " + dh.str() +
                          " escapes component " + sum.str();
            return rep;
          }
        }
    }
  return rep;
}

std::vector<long long> type_of(const Grading& g) {
  int maxd = 0;
  for (const auto& [d, s] : g.comps) maxd = std::max(maxd, s.rank());
  std::vector<long long> h((size_t)maxd, 0);
  for (const auto& [d, s] : g.comps)
    if (s.rank() > 0) h[(size_t)s.rank() - 1]++;
  return h;
}

std::string type_str(const std::vector<long long>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

Grading combine(const Grading& g1, const Grading& g2) {
  if (g1.target != g2.target)
    throw MathError("combine requires gradings on the same algebra instance");
  Grading out;
  out.target = g1.target;
  out.group = AbGroup::product(g1.group, g2.group);
  std::vector<int> used1(g1.comps.size(), 0), used2(g2.comps.size(), 0);
  for (size_t i = 0; i < g1.comps.size(); ++i)
    for (size_t j = 0; j < g2.comps.size(); ++j) {
      RowSpace w = g1.comps[i].second.intersect(g2.comps[j].second);
      if (w.rank() == 0) continue;
      used1[i] += w.rank();
      used2[j] += w.rank();
      out.comps.emplace_back(
          g_concat(g1.group, g1.comps[i].first, g2.group, g2.comps[j].first), std::move(w));
    }
  for (size_t i = 0; i < g1.comps.size(); ++i)
    if (used1[i] != g1.comps[i].second.rank())
      throw MathError("incompatible gradings: component " + g1.comps[i].first.str() +
                      " of the first does not decompose along the second");
  for (size_t j = 0; j < g2.comps.size(); ++j)
    if (used2[j] != g2.comps[j].second.rank())
      throw MathError("incompatible gradings: component " + g2.comps[j].first.str() +
                      " of the second does not decompose along the first");
  out.sort_components();
  return out;
}

Grading refine_by_automorphisms(const Grading& g, const std::vector<LinOp>& ops,
                                const std::vector<int>& orders) {
  const AlgebraSC& a = *g.target;
  if (ops.size() != orders.size()) throw MathError("orders list size mismatch");
  std::string w;
  for (size_t k = 0; k < ops.size(); ++k) {
    if (!a.is_homomorphism(ops[k], &w))
      throw MathError("refining operator " + std::to_string(k) + " is not an automorphism: " + w);
    if (!(ops[k].pow(orders[k]) == LinOp::identity(a.dim())))
      throw MathError("refining operator " + std::to_string(k) + " does not have order dividing " +
                      std::to_string(orders[k]));
    for (size_t l = k + 1; l < ops.size(); ++l)
      if (!(ops[k].compose(ops[l]) == ops[l].compose(ops[k])))
        throw MathError("refining operators do not commute");
    for (const auto& [d, s] : g.comps)
      for (const SVec& row : s.rows())
        if (!s.contains(ops[k].apply(row)))
          throw MathError("refining operator does not preserve component " + d.str());
  }
  std::vector<std::vector<Cyclo>> eigenlists;
  for (size_t k = 0; k < ops.size(); ++k) {
    std::vector<Cyclo> lams;
    for (int e = 0; e < orders[k]; ++e) lams.push_back(Cyclo::root_of_unity(e, orders[k]));
    eigenlists.push_back(std::move(lams));
  }
  AbGroup ext;
  for (int o : orders) ext.torsion.push_back(o);
  Grading out;
  out.target = g.target;
  out.group = AbGroup::product(g.group, ext);
  for (const auto& [d, s] : g.comps) {
    auto pieces = simultaneous_eigenspaces(ops, eigenlists, s);
    for (auto& ec : pieces) {
      if (ec.space.rank() == 0) continue;
      GElem extra{std::vector<long long>(orders.size(), 0)};
      for (size_t k = 0; k < ops.size(); ++k) {
        // eigenvalue is a root of unity zeta_o^e: recover the exponent
        long long e = 0;
        for (; e < orders[k]; ++e)
          if (ec.values[k] == Cyclo::root_of_unity(e, orders[k])) break;
        extra.v[k] = e;
      }
      out.comps.emplace_back(g_concat(g.group, d, ext, extra), std::move(ec.space));
    }
  }
  out.sort_components();
  return out;
}

UniversalGroupResult universal_group(const Grading& g) {
  const AlgebraSC& a = *g.target;
  int m = (int)g.comps.size();
  std::set<std::vector<long long>> rel_set;
  auto nonzero_product = [&](const RowSpace& u, const RowSpace& v) {
    for (const SVec& x : u.rows())
      for (const SVec& y : v.rows())
        if (!a.multiply(x, y).empty()) return true;
    return false;
  };
  std::map<GElem, int> index;
  for (int i = 0; i < m; ++i) index[g.comps[(size_t)i].first] = i;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!nonzero_product(g.comps[(size_t)i].second, g.comps[(size_t)j].second)) continue;
      GElem sum = g_add(g.group, g.comps[(size_t)i].first, g.comps[(size_t)j].first);
      auto it = index.find(sum);
      if (it == index.end())
        throw MathError("nonzero product lands outside the support; invalid grading");
      std::vector<long long> row((size_t)m, 0);
      row[(size_t)i] += 1;
      row[(size_t)j] += 1;
      row[(size_t)it->second] -= 1;
      bool allzero = std::all_of(row.begin(), row.end(), [](long long x) { return x == 0; });
      if (!allzero) rel_set.insert(std::move(row));
    }
  ZMat rel;
  rel.reserve(rel_set.size());
  for (const auto& r : rel_set) {
    std::vector<mpz_class> rr(r.size());
    for (size_t i = 0; i < r.size(); ++i) rr[i] = mpz_class((long)r[i]);
    rel.push_back(std::move(rr));
  }
  SNFResult snf = smith_normal_form(std::move(rel), false);

  // column i of the quotient has order diag[i] (0 = free beyond the diagonal)
  std::vector<long long> col_order((size_t)m, 0);
  for (size_t i = 0; i < snf.diag.size() && i < (size_t)m; ++i) {
    if (!snf.diag[i].fits_slong_p()) throw MathError("universal group modulus overflow");
    col_order[i] = snf.diag[i].get_si();
  }
  std::vector<int> free_cols, tors_cols;
  for (int i = 0; i < m; ++i) {
    if (col_order[(size_t)i] == 0)
      free_cols.push_back(i);
    else if (col_order[(size_t)i] >= 2)
      tors_cols.push_back(i);
  }
  AbGroup ug;
  ug.free_rank = (int)free_cols.size();
  for (int i : tors_cols) ug.torsion.push_back(col_order[(size_t)i]);

  Grading re;
  re.target = g.target;
  re.group = ug;
  for (int k = 0; k < m; ++k) {
    // image of generator k is row k of V
    GElem d{std::vector<long long>()};
    d.v.reserve(free_cols.size() + tors_cols.size());
    for (int i : free_cols) d.v.push_back(snf.right[(size_t)k][(size_t)i].get_si());
    for (int i : tors_cols) d.v.push_back(snf.right[(size_t)k][(size_t)i].get_si());
    re.comps.emplace_back(g_reduce(ug, std::move(d)), g.comps[(size_t)k].second);
  }
  re.sort_components();
  // degrees must stay distinct and the regraded decomposition must be valid
  for (size_t i = 0; i + 1 < re.comps.size(); ++i)
    if (re.comps[i].first == re.comps[i + 1].first)
      throw MathError("universal group remap collided two support degrees");
  CheckReport rep = check_grading(re);
  if (!rep.ok) throw MathError("universal group remap broke the grading: " + rep.witness);
  return UniversalGroupResult{ug.canonical(), std::move(re)};
}

std::vector<std::pair<GElem, RowSpace>> operator_degree_split(
    const Grading& g, const RowSpace& op_space) {
  const int n = g.target->dim();
  if (op_space.ambient() != n * n)
    throw MathError("operator space ambient must be dim^2 (column-major flattening)");
  // adapted basis: rows of all components stacked; transition matrices
  std::vector<GElem> deg_of_adapted;
  LinOp to_std(n, n);  // columns = adapted basis vectors in standard coords
  {
    int k = 0;
    for (const auto& [d, s] : g.comps)
      for (const SVec& row : s.rows()) {
        to_std.set_col(k, row);
        deg_of_adapted.push_back(d);
        ++k;
      }
    if (k != n) throw MathError("grading components do not fill the space");
  }
  LinOp from_std = to_std.inverse();

  std::map<GElem, RowSpace> by_deg;
  for (const SVec& flatw : op_space.rows()) {
    LinOp w = LinOp::unflatten(flatw, n, n);
    LinOp adapted = from_std.compose(w).compose(to_std);
    // split entries by degree difference
    std::map<GElem, LinOp> pieces;
    for (int j = 0; j < n; ++j)
      for (const auto& [i, c] : adapted.col(j).t) {
        GElem d = g_add(g.group, deg_of_adapted[(size_t)i],
                        g_neg(g.group, deg_of_adapted[(size_t)j]));
        auto it = pieces.find(d);
        if (it == pieces.end()) it = pieces.emplace(d, LinOp(n, n)).first;
        it->second.set_entry(i, j, c);
      }
    for (auto& [d, piece] : pieces) {
      LinOp std_piece = to_std.compose(piece).compose(from_std);
      auto it = by_deg.find(d);
      if (it == by_deg.end()) it = by_deg.emplace(d, RowSpace(n * n)).first;
      it->second.insert(std_piece.flatten());
    }
  }
  // the pieces must span exactly the original space (graded subspace check)
  RowSpace total(n * n);
  int total_rank = 0;
  for (auto& [d, s] : by_deg) {
    total_rank += s.rank();
    for (const SVec& row : s.rows()) {
      if (!op_space.contains(row))
        throw MathError("operator subspace is not graded: degree-" + d.str() +
                        " piece escapes the span");
      total.insert(row);
    }
  }
  if (total_rank != op_space.rank() || total.rank() != op_space.rank())
    throw MathError("operator degree split does not reconstruct the subspace");
  std::vector<std::pair<GElem, RowSpace>> out;
  for (auto& [d, s] : by_deg) out.emplace_back(d, std::move(s));
  return out;
}

Grading induced_operator_grading(AlgebraPtr op_algebra,
                                 const std::vector<LinOp>& op_basis,
                                 const Grading& base) {
  const int n = base.target->dim();
  if ((int)op_basis.size() != op_algebra->dim())
    throw MathError("operator basis size must match the operator algebra dimension");
  RowSpace flat_span(n * n);
  for (const LinOp& op : op_basis) flat_span.insert(op.flatten());
  if (flat_span.rank() != (int)op_basis.size())
    throw MathError("operator basis is not independent");
  auto split = operator_degree_split(base, flat_span);

  // coordinates of flattened vectors with respect to op_basis via an
  // augmented echelon
  int K = (int)op_basis.size();
  RowSpace aug(n * n + K);
  for (int k = 0; k < K; ++k) {
    SVec r = op_basis[(size_t)k].flatten();
    r.t.emplace_back(n * n + k, Cyclo(1));
    aug.insert(r);
  }
  Grading out;
  out.target = std::move(op_algebra);
  out.group = base.group;
  for (auto& [d, s] : split) {
    RowSpace comp(K);
    for (const SVec& flatw : s.rows()) {
      SVec resid = aug.reduce(flatw);
      SVec coords;
      for (const auto& [i, c] : resid.t) {
        if (i < n * n)
          throw MathError("degree piece does not lie in the operator span");
        coords.push(i - n * n, -c);
      }
      comp.insert(coords);
    }
    if (comp.rank() > 0) out.comps.emplace_back(d, std::move(comp));
  }
  out.sort_components();
  return out;
}

}  // namespace exf
