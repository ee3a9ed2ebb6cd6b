#ifndef EXFORGE_ALGEBRA_HPP
#define EXFORGE_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exforge/linalg.hpp"

namespace exf {

/// Finite-dimensional algebra given by a labeled basis and sparse structure
/// constants x_i x_j = sum_k c_{ij}^k x_k. Optionally carries an involution,
/// a quadratic form (polar matrix + values on basis vectors), a unit, and
/// named distinguished subspaces used by the constructions downstream.
class AlgebraSC {
public:
  AlgebraSC() = default;
  AlgebraSC(std::string name, std::vector<std::string> basis_labels);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 if absent

  const SVec& mul(int i, int j) const;
  void set_mul(int i, int j, SVec v);
  SVec multiply(const SVec& x, const SVec& y) const;
  LinOp left_mult(const SVec& x) const;
  LinOp right_mult(const SVec& x) const;

  /// Largest cyclotomic order appearing in the structure constants.
  int field_order() const;

  // --- optional structure -------------------------------------------------
  void set_unit(SVec u) { unit_ = std::move(u); }
  const std::optional<SVec>& unit() const { return unit_; }
  void set_involution(LinOp s) { involution_ = std::move(s); }
  const std::optional<LinOp>& involution() const { return involution_; }
  SVec conj(const SVec& x) const;  // apply involution

  void set_anticommutative(bool b) { anticommutative_ = b; }
  bool anticommutative() const { return anticommutative_; }

  struct QuadForm {
    LinOp polar;  // matrix of the polar form q(x,y)
    Vec values;   // q on basis vectors
  };
  void set_qform(QuadForm q) { qform_ = std::move(q); }
  const std::optional<QuadForm>& qform() const { return qform_; }
  Cyclo q_value(const SVec& x) const;
  Cyclo q_polar(const SVec& x, const SVec& y) const;

  /// Named distinguished subspaces (construction pieces, toral seeds, ...).
  void set_component(const std::string& key, RowSpace s) { components_[key] = std::move(s); }
  const RowSpace* component(const std::string& key) const;
  const std::map<std::string, RowSpace>& components() const { return components_; }

  // --- verification helpers -----------------------------------------------
  /// Unit acts as a two-sided identity on every basis element.
  bool check_unital(std::string* witness = nullptr) const;
  /// Involution is involutive and an anti-automorphism on basis pairs.
  bool check_involution(std::string* witness = nullptr) const;
  /// d(xy) = d(x)y + x d(y) on all basis pairs.
  bool is_derivation(const LinOp& d, std::string* witness = nullptr) const;
  /// phi(xy) = phi(x)phi(y) on all basis pairs (phi invertible not checked).
  bool is_homomorphism(const LinOp& phi, std::string* witness = nullptr) const;

private:
  std::string name_;
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<SVec> mul_;  // i*dim+j
  std::optional<SVec> unit_;
  std::optional<LinOp> involution_;
  std::optional<QuadForm> qform_;
  bool anticommutative_ = false;
  std::map<std::string, RowSpace> components_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSC>;

/// Tensor product with (a (x) b)(c (x) d) = ac (x) bd; involution tensors
/// when both factors carry one. Basis index = i*dimB + j.
AlgebraSC tensor(const AlgebraSC& a, const AlgebraSC& b);

}  // namespace exf

#endif
