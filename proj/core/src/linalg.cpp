#include "triaco/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "triaco/error.hpp"

namespace triaco {

std::string to_string(const Scalar& q) { return q.get_str(); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector sum of unequal lengths");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::ShapeMismatch, "vector difference of unequal lengths");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::ShapeMismatch, "row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(Errc::ShapeMismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(Errc::ShapeMismatch, "matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::power(unsigned k) const {
  if (!square()) throw Error(Errc::ShapeMismatch, "power of a non-square matrix");
  Matrix result = identity(rows_);
  for (unsigned i = 0; i < k; ++i) result = result * (*this);
  return result;
}

bool Matrix::is_zero() const { return triaco::is_zero(data_); }

bool Matrix::is_identity() const { return square() && *this == identity(rows_); }

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix sum shape");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix difference shape");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product shape");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// ---------------------------------------------------------------- RREF

namespace {

// In-place RREF visiting columns in `order`; returns pivot columns in the
// order they were found.
std::vector<std::size_t> reduce(Matrix& m, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  std::vector<std::size_t> support;
  for (std::size_t c : order) {
    if (r == m.rows()) break;
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);

    const Scalar inv = 1 / m(r, c);
    support.clear();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j : support) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> natural_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

}  // namespace

Rref rref(Matrix m) {
  auto pivots = reduce(m, natural_order(m.cols()));
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side.
  if (m.rows() > m.cols()) {
    Matrix t = m.transpose();
    return reduce(t, natural_order(t.cols())).size();
  }
  Matrix copy = m;
  return reduce(copy, natural_order(copy.cols())).size();
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto [reduced, pivots] = rref(Matrix::from_rows(ambient_dim, vectors));
  s.basis_ = Matrix(pivots.size(), ambient_dim);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) s.basis_(r, c) = reduced(r, c);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  s.pivots_ = natural_order(ambient_dim);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(Errc::ShapeMismatch, "vector not in ambient space");
  // Reduce v against the RREF basis; v is inside iff the remainder is zero.
  Vector rem = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar f = rem[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (sgn(basis_(r, c)) != 0) rem[c] -= f * basis_(r, c);
  }
  return triaco::is_zero(rem);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::ShapeMismatch, "sum of subspaces in different ambients");
  auto vs = basis_vectors();
  auto ws = other.basis_vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(ambient_, vs);
}

Matrix Subspace::equations() const {
  // The annihilator of the row space is the kernel of the basis matrix.
  return kernel_basis(basis_).basis();
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::ShapeMismatch, "intersection in different ambients");
  Matrix a = equations();
  Matrix b = other.equations();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
  if (rows.empty()) return full(ambient_);
  return kernel_basis(Matrix::from_rows(ambient_, rows));
}

// ---------------------------------------------------------------- kernels

KernelParametrization parametrize_kernel(const Matrix& m, const std::vector<std::size_t>& column_order) {
  const auto order = column_order.empty() ? natural_order(m.cols()) : column_order;
  Matrix work = m;
  const auto pivots = reduce(work, order);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  KernelParametrization out;
  for (std::size_t c : order) {
    if (is_pivot[c]) continue;
    Vector v(m.cols());
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, c);
    out.free_columns.push_back(c);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Subspace kernel_basis(const Matrix& m) {
  return Subspace::span(m.cols(), parametrize_kernel(m).basis);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span(m.rows(), cols);
}

Quotient quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim() || !z.contains(b))
    throw Error(Errc::NotASubspace, "quotient requires b to be contained in z");
  Quotient q;
  const auto& bp = b.pivots();
  for (std::size_t r = 0; r < z.dim(); ++r) {
    if (std::find(bp.begin(), bp.end(), z.pivots()[r]) == bp.end())
      q.representatives.push_back(z.basis_vector(r));
  }
  q.dim = q.representatives.size();
  return q;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(Errc::ShapeMismatch, "right-hand side length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red(r, a.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw Error(Errc::Singular, "non-square matrix has no inverse");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(Errc::Singular, "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& value) {
  if (sgn(value) != 0) rows_[r].emplace_back(c, value);
}

void SparseMatrix::compress() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return sgn(e.second) == 0; });
    row = std::move(merged);
  }
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(Errc::ShapeMismatch, "sparse matrix-vector size mismatch");
  Vector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, a] : rows_[r])
      if (sgn(v[c]) != 0) out[r] += a * v[c];
  return out;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, a] : rows_[r]) m(r, c) += a;
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.add(r, c, m(r, c));
  return s;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, a] : rows_[r]) t.rows_[c].emplace_back(r, a);
  t.compress();
  return t;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "sparse product inner dimensions differ");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, x] : a.row(r))
      for (const auto& [c, y] : b.row(k)) out.add(r, c, x * y);
  out.compress();
  return out;
}

namespace {

using SparseRow = std::vector<SparseMatrix::Entry>;

// row -= f * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Scalar& f, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -f * pivot[j].second);
      ++j;
    } else {
      Scalar v = row[i].second - f * pivot[j].second;
      if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
  if (m.rows() > m.cols()) return rank(m.transpose());
  std::vector<std::optional<SparseRow>> pivots(m.cols());
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row = m.row(i);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      if (!pivots[lead]) {
        const Scalar inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        pivots[lead] = std::move(row);
        ++r;
        break;
      }
      row = axpy(row, row.front().second, *pivots[lead]);
    }
  }
  return r;
}

}  // namespace triaco
