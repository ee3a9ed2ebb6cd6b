#include "exforge/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace exf {

AlgebraSC::AlgebraSC(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)),
      dim_((int)basis_labels.size()),
      labels_(std::move(basis_labels)),
      mul_((size_t)dim_ * dim_) {}

int AlgebraSC::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : (int)(it - labels_.begin());
}

const SVec& AlgebraSC::mul(int i, int j) const {
  return mul_[(size_t)i * dim_ + j];
}

void AlgebraSC::set_mul(int i, int j, SVec v) {
  mul_[(size_t)i * dim_ + j] = std::move(v);
}

SVec AlgebraSC::multiply(const SVec& x, const SVec& y) const {
  SVec r;
  for (const auto& [i, ci] : x.t)
    for (const auto& [j, cj] : y.t) {
      const SVec& m = mul(i, j);
      if (!m.empty()) r.axpy(ci * cj, m);
    }
  return r;
}

LinOp AlgebraSC::left_mult(const SVec& x) const {
  LinOp op(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    SVec col;
    for (const auto& [i, c] : x.t) col.axpy(c, mul(i, j));
    op.set_col(j, std::move(col));
  }
  return op;
}

LinOp AlgebraSC::right_mult(const SVec& x) const {
  LinOp op(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    SVec col;
    for (const auto& [i, c] : x.t) col.axpy(c, mul(j, i));
    op.set_col(j, std::move(col));
  }
  return op;
}

int AlgebraSC::field_order() const {
  long long m = 1;
  auto bump = [&](const Cyclo& c) { m = std::lcm(m, (long long)c.order()); };
  for (const SVec& v : mul_)
    for (const auto& [i, c] : v.t) bump(c);
  return (int)m;
}

SVec AlgebraSC::conj(const SVec& x) const {
  if (!involution_) throw MathError("algebra " + name_ + " has no involution");
  return involution_->apply(x);
}

Cyclo AlgebraSC::q_value(const SVec& x) const {
  if (!qform_) throw MathError("algebra " + name_ + " has no quadratic form");
  // q(sum x_i b_i) = sum x_i^2 q(b_i) + sum_{i<j} x_i x_j q(b_i, b_j)
  Cyclo s(0);
  for (size_t a = 0; a < x.t.size(); ++a) {
    const auto& [i, ci] = x.t[a];
    s += ci * ci * qform_->values[(size_t)i];
    for (size_t b = a + 1; b < x.t.size(); ++b) {
      const auto& [j, cj] = x.t[b];
      s += ci * cj * qform_->polar.entry(i, j);
    }
  }
  return s;
}

Cyclo AlgebraSC::q_polar(const SVec& x, const SVec& y) const {
  if (!qform_) throw MathError("algebra " + name_ + " has no quadratic form");
  Cyclo s(0);
  for (const auto& [i, ci] : x.t)
    for (const auto& [j, cj] : y.t) s += ci * cj * qform_->polar.entry(i, j);
  return s;
}

const RowSpace* AlgebraSC::component(const std::string& key) const {
  auto it = components_.find(key);
  return it == components_.end() ? nullptr : &it->second;
}

bool AlgebraSC::check_unital(std::string* witness) const {
  if (!unit_) {
    if (witness) *witness = "no unit set";
    return false;
  }
  for (int i = 0; i < dim_; ++i) {
    SVec e = SVec::unit(i);
    if (!(multiply(*unit_, e) == e) || !(multiply(e, *unit_) == e)) {
      if (witness) *witness = "unit fails on basis element " + labels_[(size_t)i];
      return false;
    }
  }
  return true;
}

bool AlgebraSC::check_involution(std::string* witness) const {
  if (!involution_) {
    if (witness) *witness = "no involution set";
    return false;
  }
  const LinOp& s = *involution_;
  for (int i = 0; i < dim_; ++i) {
    if (!(s.apply(s.col(i)) == SVec::unit(i))) {
      if (witness) *witness = "involution not involutive at " + labels_[(size_t)i];
      return false;
    }
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      SVec lhs = s.apply(mul(i, j));
      SVec rhs = multiply(s.col(j), s.col(i));
      if (!(lhs == rhs)) {
        if (witness)
          *witness = "involution not an anti-automorphism on (" + labels_[(size_t)i] + ", " +
                     labels_[(size_t)j] + ")";
        return false;
      }
    }
  return true;
}

bool AlgebraSC::is_derivation(const LinOp& d, std::string* witness) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      SVec lhs = d.apply(mul(i, j));
      SVec rhs = multiply(d.col(i), SVec::unit(j)) + multiply(SVec::unit(i), d.col(j));
      if (!(lhs == rhs)) {
        if (witness)
          *witness = "Leibniz fails on (" + labels_[(size_t)i] + ", " + labels_[(size_t)j] + ")";
        return false;
      }
    }
  return true;
}

bool AlgebraSC::is_homomorphism(const LinOp& phi, std::string* witness) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      SVec lhs = phi.apply(mul(i, j));
      SVec rhs = multiply(phi.col(i), phi.col(j));
      if (!(lhs == rhs)) {
        if (witness)
          *witness = "not multiplicative on (" + labels_[(size_t)i] + ", " + labels_[(size_t)j] + ")";
        return false;
      }
    }
  return true;
}

AlgebraSC tensor(const AlgebraSC& a, const AlgebraSC& b) {
  std::vector<std::string> labels;
  labels.reserve((size_t)a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) labels.push_back(a.labels()[(size_t)i] + "(x)" + b.labels()[(size_t)j]);
  AlgebraSC t(a.name() + "(x)" + b.name(), std::move(labels));
  int db = b.dim();
  for (int i1 = 0; i1 < a.dim(); ++i1)
    for (int j1 = 0; j1 < db; ++j1)
      for (int i2 = 0; i2 < a.dim(); ++i2)
        for (int j2 = 0; j2 < db; ++j2) {
          const SVec& pa = a.mul(i1, i2);
          if (pa.empty()) continue;
          const SVec& pb = b.mul(j1, j2);
          if (pb.empty()) continue;
          SVec prod;
          for (const auto& [k1, c1] : pa.t)
            for (const auto& [k2, c2] : pb.t) prod.push(k1 * db + k2, c1 * c2);
          t.set_mul(i1 * db + j1, i2 * db + j2, std::move(prod));
        }
  if (a.unit() && b.unit()) {
    SVec u;
    for (const auto& [i, ci] : a.unit()->t)
      for (const auto& [j, cj] : b.unit()->t) u.axpy(ci * cj, SVec::unit(i * db + j));
    t.set_unit(std::move(u));
  }
  if (a.involution() && b.involution()) {
    LinOp s((int)((size_t)a.dim() * db), (int)((size_t)a.dim() * db));
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < db; ++j) {
        SVec img;
        for (const auto& [i2, c1] : a.involution()->col(i).t)
          for (const auto& [j2, c2] : b.involution()->col(j).t)
            img.axpy(c1 * c2, SVec::unit(i2 * db + j2));
        s.set_col(i * db + j, std::move(img));
      }
    t.set_involution(std::move(s));
  }
  return t;
}

}  // namespace exf
