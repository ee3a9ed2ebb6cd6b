#ifndef EXFORGE_LINALG_HPP
#define EXFORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "exforge/cyclo.hpp"

namespace exf {

using Vec = std::vector<Cyclo>;

/// Sparse vector: terms sorted by index, no zero coefficients.
struct SVec {
  std::vector<std::pair<int, Cyclo>> t;

  SVec() = default;
  static SVec unit(int i, Cyclo c = Cyclo(1));
  static SVec from_dense(const Vec& v);
  Vec to_dense(int n) const;

  bool empty() const { return t.empty(); }
  int lead() const { return t.empty() ? -1 : t.front().first; }
  size_t nnz() const { return t.size(); }
  void push(int i, Cyclo c);  // append, indices must be increasing
  Cyclo at(int i) const;

  SVec operator-() const;
  SVec operator*(const Cyclo& c) const;
  SVec operator+(const SVec& o) const;
  SVec operator-(const SVec& o) const;
  /// this += c * o
  void axpy(const Cyclo& c, const SVec& o);
  bool operator==(const SVec& o) const { return t == o.t; }
};

Cyclo dot(const SVec& a, const Vec& b);

/// Subspace of F^n held as a reduced row echelon basis. Canonical: two
/// subspaces are equal iff their row lists are equal.
class RowSpace {
public:
  RowSpace() : n_(0) {}
  explicit RowSpace(int ambient) : n_(ambient) {}

  int ambient() const { return n_; }
  int rank() const { return (int)rows_.size(); }
  const std::vector<SVec>& rows() const { return rows_; }

  /// Insert a vector; returns true if the rank grew.
  bool insert(SVec v);
  /// Residual of v after reduction by the basis.
  SVec reduce(SVec v) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  /// Coordinates of v in the row basis, if v lies in the span.
  std::optional<Vec> coords(const SVec& v) const;

  RowSpace intersect(const RowSpace& o) const;
  RowSpace sum(const RowSpace& o) const;
  bool operator==(const RowSpace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const RowSpace& o) const { return !(*this == o); }

  static RowSpace full(int n);
  static RowSpace span(int ambient, const std::vector<SVec>& gens);

private:
  int n_;
  std::vector<SVec> rows_;  // RREF, sorted by pivot
  std::vector<int> pivots_;
};

/// Forward-elimination accumulator for large constraint systems: rows are
/// streamed in, reduced against the current echelon, and kept only when they
/// add rank. kernel() back-substitutes for the solution space.
class EchelonSolver {
public:
  explicit EchelonSolver(int ncols) : n_(ncols) {}
  void add_row(SVec r);
  int rank() const { return (int)rows_.size(); }
  int ncols() const { return n_; }
  RowSpace kernel();

private:
  int n_;
  std::vector<SVec> rows_;       // echelon, normalized pivots
  std::vector<int> pivot_of_;    // sorted pivot list parallel to rows_
};

/// Sparse linear operator, column-major.
class LinOp {
public:
  LinOp() : nr_(0), nc_(0) {}
  LinOp(int nrows, int ncols) : nr_(nrows), nc_(ncols), col_(ncols) {}
  static LinOp identity(int n);
  static LinOp zero(int n) { return LinOp(n, n); }

  int nrows() const { return nr_; }
  int ncols() const { return nc_; }
  const SVec& col(int j) const { return col_[j]; }
  void set_col(int j, SVec v) { col_[j] = std::move(v); }
  void set_entry(int i, int j, const Cyclo& c);
  Cyclo entry(int i, int j) const { return col_[j].at(i); }

  SVec apply(const SVec& v) const;
  Vec apply(const Vec& v) const;
  LinOp compose(const LinOp& o) const;  // this ∘ o
  LinOp operator+(const LinOp& o) const;
  LinOp operator-(const LinOp& o) const;
  LinOp operator*(const Cyclo& c) const;
  LinOp commutator(const LinOp& o) const;  // [this, o]
  LinOp transpose() const;
  LinOp pow(int e) const;
  bool operator==(const LinOp& o) const;
  bool is_zero() const;
  size_t nnz() const;

  /// Column-major flattening into F^{nr*nc} (index = j*nr + i).
  SVec flatten() const;
  static LinOp unflatten(const SVec& v, int nrows, int ncols);

  /// Dense inverse (small matrices only); throws when singular.
  LinOp inverse() const;

  Cyclo trace() const;

private:
  int nr_, nc_;
  std::vector<SVec> col_;
};

/// Trace of a*b without forming the product.
Cyclo trace_of_product(const LinOp& a, const LinOp& b);

/// Kernel of an operator (solution space of op x = 0).
RowSpace kernel_of(const LinOp& op);

/// Minimal polynomial of a square operator (monic, low degree first).
std::vector<Cyclo> minimal_polynomial(const LinOp& op);

/// Rational/cyclotomic roots of a polynomial with coefficients in the
/// generated cyclotomic field, found by testing candidate roots of unity
/// times rationals — only used where spectra are known to be split.
struct EigenComponent {
  std::vector<Cyclo> values;  // one eigenvalue per operator
  RowSpace space;
};

/// Joint eigenspace decomposition of commuting diagonalizable operators,
/// restricted to `domain`. Eigenvalue candidate lists must be supplied.
/// Verifies commutativity and that each operator is annihilated by
/// prod(t - lambda); throws MathError otherwise.
std::vector<EigenComponent> simultaneous_eigenspaces(
    const std::vector<LinOp>& ops,
    const std::vector<std::vector<Cyclo>>& eigenvalues,
    const RowSpace& domain);

std::vector<EigenComponent> simultaneous_eigenspaces(
    const std::vector<LinOp>& ops,
    const std::vector<std::vector<Cyclo>>& eigenvalues);

}  // namespace exf

#endif
