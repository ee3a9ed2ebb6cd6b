#include "exforge/hurwitz.hpp"

namespace exf {

HurwitzKind hurwitz_kind_from_string(const std::string& s) {
  if (s == "F") return HurwitzKind::F;
  if (s == "K") return HurwitzKind::K;
  if (s == "Q") return HurwitzKind::Q;
  if (s == "C") return HurwitzKind::Cayley;
  throw MathError("unknown Hurwitz algebra id: " + s);
}

std::string hurwitz_kind_name(HurwitzKind k) {
  switch (k) {
    case HurwitzKind::F: return "F";
    case HurwitzKind::K: return "K";
    case HurwitzKind::Q: return "Q";
    case HurwitzKind::Cayley: return "C";
  }
  return "?";
}

int hurwitz_dim(HurwitzKind k) {
  switch (k) {
    case HurwitzKind::F: return 1;
    case HurwitzKind::K: return 2;
    case HurwitzKind::Q: return 4;
    case HurwitzKind::Cayley: return 8;
  }
  return 0;
}

namespace {

void attach_bar_and_norm(AlgebraSC& a, const Vec& trace, const Vec& qdiag,
                         const std::vector<std::tuple<int, int, Cyclo>>& polar_offdiag) {
  int n = a.dim();
  // bar(x) = t(x) 1 - x
  LinOp bar(n, n);
  for (int j = 0; j < n; ++j) {
    SVec col = a.unit()->operator*(trace[(size_t)j]);
    col.axpy(Cyclo(-1), SVec::unit(j));
    bar.set_col(j, std::move(col));
  }
  a.set_involution(std::move(bar));
  LinOp polar(n, n);
  for (int i = 0; i < n; ++i) polar.set_entry(i, i, Cyclo(2) * qdiag[(size_t)i]);
  for (const auto& [i, j, v] : polar_offdiag) {
    polar.set_entry(i, j, v);
    polar.set_entry(j, i, v);
  }
  a.set_qform(AlgebraSC::QuadForm{std::move(polar), qdiag});
}

}  // namespace

AlgebraPtr build_hurwitz(HurwitzKind k) {
  switch (k) {
    case HurwitzKind::F: {
      auto a = std::make_shared<AlgebraSC>("F", std::vector<std::string>{"1"});
      a->set_mul(0, 0, SVec::unit(0));
      a->set_unit(SVec::unit(0));
      attach_bar_and_norm(*a, {Cyclo(2)}, {Cyclo(1)}, {});
      return a;
    }
    case HurwitzKind::K: {
      auto a = std::make_shared<AlgebraSC>("K", std::vector<std::string>{"e1", "e2"});
      a->set_mul(0, 0, SVec::unit(0));
      a->set_mul(1, 1, SVec::unit(1));
      SVec unit = SVec::unit(0) + SVec::unit(1);
      a->set_unit(unit);
      attach_bar_and_norm(*a, {Cyclo(1), Cyclo(1)}, {Cyclo(0), Cyclo(0)},
                          {{0, 1, Cyclo(1)}});
      return a;
    }
    case HurwitzKind::Q: {
      // e1->E11, e2->E22, u1->E12, v1->E21; norm = det
      auto a = std::make_shared<AlgebraSC>(
          "Q", std::vector<std::string>{"e1", "e2", "u1", "v1"});
      auto mu = [&](const char* x, const char* y, const char* z, long long c = 1) {
        a->set_mul(a->index_of(x), a->index_of(y), SVec::unit(a->index_of(z), Cyclo(c)));
      };
      mu("e1", "e1", "e1");
      mu("e2", "e2", "e2");
      mu("e1", "u1", "u1");
      mu("u1", "e2", "u1");
      mu("e2", "v1", "v1");
      mu("v1", "e1", "v1");
      mu("u1", "v1", "e1");
      mu("v1", "u1", "e2");
      a->set_unit(SVec::unit(0) + SVec::unit(1));
      attach_bar_and_norm(*a, {Cyclo(1), Cyclo(1), Cyclo(0), Cyclo(0)},
                          {Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0)},
                          {{0, 1, Cyclo(1)}, {2, 3, Cyclo(-1)}});
      return a;
    }
    case HurwitzKind::Cayley: {
      auto a = std::make_shared<AlgebraSC>(
          "C", std::vector<std::string>{"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"});
      auto idx = [&](const std::string& s) { return a->index_of(s); };
      auto mu = [&](const std::string& x, const std::string& y, const std::string& z,
                    long long c = 1) {
        a->set_mul(idx(x), idx(y), SVec::unit(idx(z), Cyclo(c)));
      };
      mu("e1", "e1", "e1");
      mu("e2", "e2", "e2");
      for (int i = 1; i <= 3; ++i) {
        std::string ui = "u" + std::to_string(i), vi = "v" + std::to_string(i);
        int ip1 = i % 3 + 1, ip2 = ip1 % 3 + 1;
        std::string uip1 = "u" + std::to_string(ip1), uip2 = "u" + std::to_string(ip2);
        std::string vip1 = "v" + std::to_string(ip1), vip2 = "v" + std::to_string(ip2);
        mu("e1", ui, ui);
        mu(ui, "e2", ui);
        mu("e2", vi, vi);
        mu(vi, "e1", vi);
        mu(ui, vi, "e1");
        mu(vi, ui, "e2");
        mu(ui, uip1, vip2);
        mu(uip1, ui, vip2, -1);
        mu(vi, vip1, uip2, -1);
        mu(vip1, vi, uip2);
      }
      a->set_unit(SVec::unit(0) + SVec::unit(1));
      Vec tr(8, Cyclo(0)), qd(8, Cyclo(0));
      tr[0] = tr[1] = Cyclo(1);
      attach_bar_and_norm(*a, tr, qd,
                          {{0, 1, Cyclo(1)},
                           {idx("u1"), idx("v1"), Cyclo(-1)},
                           {idx("u2"), idx("v2"), Cyclo(-1)},
                           {idx("u3"), idx("v3"), Cyclo(-1)}});
      return a;
    }
  }
  throw MathError("unreachable");
}

CayleyDickson cayley_dickson(const AlgebraSC& c, const Cyclo& alpha) {
  if (alpha.is_zero()) throw MathError("Cayley-Dickson parameter must be nonzero");
  if (!c.unit() || !c.involution() || !c.qform())
    throw MathError("Cayley-Dickson needs a unital algebra with involution and norm");
  int n = c.dim();
  std::vector<std::string> labels;
  for (const auto& l : c.labels()) labels.push_back(l);
  for (const auto& l : c.labels()) labels.push_back("w*" + l);
  auto d = std::make_shared<AlgebraSC>("CD(" + c.name() + ")", std::move(labels));
  auto shift = [&](const SVec& v) {
    SVec r = v;
    for (auto& [i, x] : r.t) i += n;
    return r;
  };
  // (a,b)(c,d) = (ac + alpha concat(d)~ b, da + b c~)
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      SVec ax = i < n ? SVec::unit(i) : SVec();
      SVec bx = i < n ? SVec() : SVec::unit(i - n);
      SVec cx = j < n ? SVec::unit(j) : SVec();
      SVec dx = j < n ? SVec() : SVec::unit(j - n);
      SVec even = c.multiply(ax, cx);
      even.axpy(alpha, c.multiply(c.conj(dx), bx));
      SVec odd = c.multiply(dx, ax);
      odd.axpy(Cyclo(1), c.multiply(bx, c.conj(cx)));
      SVec prod = even;
      prod.axpy(Cyclo(1), shift(odd));
      d->set_mul(i, j, std::move(prod));
    }
  d->set_unit(*c.unit());
  // bar(a,b) = (a~, -b)
  LinOp bar(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) bar.set_col(j, c.involution()->col(j));
  for (int j = 0; j < n; ++j) bar.set_col(n + j, shift(SVec::unit(j)) * Cyclo(-1));
  d->set_involution(std::move(bar));
  // q(a,b) = q(a) - alpha q(b)
  LinOp polar(2 * n, 2 * n);
  Vec qd(2 * (size_t)n, Cyclo(0));
  const auto& base = *c.qform();
  for (int i = 0; i < n; ++i) {
    qd[(size_t)i] = base.values[(size_t)i];
    qd[(size_t)(n + i)] = base.values[(size_t)i] * (-alpha);
  }
  for (int j = 0; j < n; ++j) {
    for (const auto& [i, v] : base.polar.col(j).t) {
      polar.set_entry(i, j, v);
      polar.set_entry(n + i, n + j, v * (-alpha));
    }
  }
  d->set_qform(AlgebraSC::QuadForm{std::move(polar), std::move(qd)});

  CayleyDickson out;
  out.algebra = d;
  std::vector<GElem> degs;
  for (int i = 0; i < 2 * n; ++i) degs.push_back(GElem{{i < n ? 0LL : 1LL}});
  out.z2 = Grading::from_degrees(d, AbGroup::cyclic(2), degs);
  // multiplicativity of the doubled norm holds iff the base is associative
  out.hurwitz = norm_multiplicative(*d, &out.witness);
  return out;
}

bool norm_multiplicative(const AlgebraSC& a, std::string* witness) {
  // Both sides of q(xy) = q(x) q(y) are quadratic in each slot, so checking
  // x, y over basis vectors and pairwise sums of basis vectors is complete.
  int n = a.dim();
  std::vector<SVec> s;
  for (int i = 0; i < n; ++i) s.push_back(SVec::unit(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(SVec::unit(i) + SVec::unit(j));
  for (size_t i = 0; i < s.size(); ++i) {
    Cyclo qi = a.q_value(s[i]);
    for (size_t j = 0; j < s.size(); ++j) {
      SVec p = a.multiply(s[i], s[j]);
      if (!(a.q_value(p) == qi * a.q_value(s[j]))) {
        if (witness)
          *witness = "q not multiplicative at spanning pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
        return false;
      }
    }
  }
  return true;
}

LinOp derivation_dab(const AlgebraSC& c, const SVec& a, const SVec& b) {
  LinOp la = c.left_mult(a), lb = c.left_mult(b);
  LinOp ra = c.right_mult(a), rb = c.right_mult(b);
  return la.commutator(lb) + la.commutator(rb) + ra.commutator(rb);
}

Grading hurwitz_grading(AlgebraPtr c, HurwitzKind k, const std::string& id) {
  auto up = [&](const std::string& l) {
    int i = c->index_of(l);
    if (i < 0) throw MathError("missing basis label " + l);
    return i;
  };
  if (k == HurwitzKind::Cayley && id == "cartan") {
    std::vector<GElem> deg(8);
    deg[(size_t)up("e1")] = GElem{{0, 0}};
    deg[(size_t)up("e2")] = GElem{{0, 0}};
    deg[(size_t)up("u1")] = GElem{{1, 0}};
    deg[(size_t)up("v1")] = GElem{{-1, 0}};
    deg[(size_t)up("u2")] = GElem{{0, 1}};
    deg[(size_t)up("v2")] = GElem{{0, -1}};
    deg[(size_t)up("u3")] = GElem{{-1, -1}};
    deg[(size_t)up("v3")] = GElem{{1, 1}};
    return Grading::from_degrees(c, AbGroup::free(2), deg);
  }
  if (k == HurwitzKind::Cayley && id == "z2z2z2") {
    AbGroup g{0, {2, 2, 2}};
    std::vector<std::pair<GElem, SVec>> gens;
    auto put = [&](std::initializer_list<long long> d, const SVec& v) {
      gens.emplace_back(GElem{std::vector<long long>(d)}, v);
    };
    auto U = [&](const std::string& l) { return SVec::unit(up(l)); };
    put({0, 0, 0}, U("e1") + U("e2"));
    put({1, 0, 0}, U("e1") - U("e2"));
    put({0, 1, 0}, U("u1") + U("v1"));
    put({1, 1, 0}, U("u1") - U("v1"));
    put({0, 0, 1}, U("u2") + U("v2"));
    put({1, 0, 1}, U("u2") - U("v2"));
    put({0, 1, 1}, U("u3") - U("v3"));
    put({1, 1, 1}, U("u3") + U("v3"));
    return Grading::from_homogeneous_vectors(c, g, gens);
  }
  if (k == HurwitzKind::Q && id == "cartan") {
    std::vector<GElem> deg(4);
    deg[(size_t)up("e1")] = GElem{{0}};
    deg[(size_t)up("e2")] = GElem{{0}};
    deg[(size_t)up("u1")] = GElem{{1}};
    deg[(size_t)up("v1")] = GElem{{-1}};
    return Grading::from_degrees(c, AbGroup::free(1), deg);
  }
  if (k == HurwitzKind::Q && id == "z2z2") {
    AbGroup g{0, {2, 2}};
    std::vector<std::pair<GElem, SVec>> gens;
    auto U = [&](const std::string& l) { return SVec::unit(up(l)); };
    gens.emplace_back(GElem{{0, 0}}, U("e1") + U("e2"));
    gens.emplace_back(GElem{{1, 0}}, U("e1") - U("e2"));
    gens.emplace_back(GElem{{0, 1}}, U("u1") + U("v1"));
    gens.emplace_back(GElem{{1, 1}}, U("u1") - U("v1"));
    return Grading::from_homogeneous_vectors(c, g, gens);
  }
  if (k == HurwitzKind::K && id == "z2") {
    AbGroup g{0, {2}};
    std::vector<std::pair<GElem, SVec>> gens;
    gens.emplace_back(GElem{{0}}, SVec::unit(up("e1")) + SVec::unit(up("e2")));
    gens.emplace_back(GElem{{1}}, SVec::unit(up("e1")) - SVec::unit(up("e2")));
    return Grading::from_homogeneous_vectors(c, g, gens);
  }
  throw MathError("unknown grading id '" + id + "' for " + hurwitz_kind_name(k));
}

}  // namespace exf
