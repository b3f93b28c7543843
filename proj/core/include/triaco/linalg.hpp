#pragma once

// Exact linear algebra over the rationals.
//
// Every value here is an immutable-after-construction value type; all free
// functions are pure. Matrices act on column vectors: the image of the i-th
// basis vector under a linear map is column i of its matrix.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace triaco {

/// Exact rational. gmp keeps numerator/denominator reduced with a positive
/// denominator, so zero is always 0/1.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

std::string to_string(const Scalar& q);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major literal; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  const std::vector<Scalar>& data() const noexcept { return data_; }

  /// Matrix-vector product M v.
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix power(unsigned k) const;
  bool is_zero() const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::string to_string(const Matrix& m);

/// Commutator a*b - b*a.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Block-diagonal sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Unique reduced row-echelon form. Elimination skips zero entries, so
/// sparse constraint systems stay cheap.
Rref rref(Matrix m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^ambient, stored by the RREF of a spanning set.
/// Two subspaces are equal iff their stored bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }

  /// Rows are the RREF basis.
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Linear equations cutting out this subspace: rows of the returned
  /// matrix span the annihilator, so the subspace is its kernel.
  Matrix equations() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Full null space of m (a subspace of Q^cols).
Subspace kernel_basis(const Matrix& m);

/// Column space of m (a subspace of Q^rows).
Subspace image(const Matrix& m);

/// Null space as a free-variable parametrization: one basis vector per free
/// column, with a 1 in that column and pivot entries solved. The columns are
/// eliminated in `column_order` (identity when empty), which decides which
/// unknowns end up free.
struct KernelParametrization {
  std::vector<std::size_t> free_columns;
  std::vector<Vector> basis;
};
KernelParametrization parametrize_kernel(const Matrix& m,
                                         const std::vector<std::size_t>& column_order = {});

struct Quotient {
  std::size_t dim = 0;
  /// RREF basis vectors of z whose pivots are not pivots of b; their cosets
  /// form a basis of z/b.
  std::vector<Vector> representatives;
};

/// dim(z/b) plus coset representatives. Throws NotASubspace unless b ⊆ z.
Quotient quotient_dim(const Subspace& z, const Subspace& b);

/// Some x with a x = b, if the system is consistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Throws Singular for non-invertible (or non-square) input.
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Row-sparse matrix used to assemble large coboundary operators.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// Adds `value` to entry (r, c).
  void add(std::size_t r, std::size_t c, const Scalar& value);
  /// Merges duplicate columns and drops zeros in every row.
  void compress();

  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  Vector apply(const Vector& v) const;
  Matrix to_dense() const;
  std::size_t nonzeros() const;

  /// Sparse matrix whose rows are the given dense vectors.
  static SparseMatrix from_dense(const Matrix& m);
  SparseMatrix transpose() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

/// Product of compressed sparse matrices; the result is compressed.
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

/// Rank by incremental sparse echelon reduction along the shorter side.
std::size_t rank(const SparseMatrix& m);

}  // namespace triaco
