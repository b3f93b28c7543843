#include "triaco/algebra.hpp"

#include <string>

#include "triaco/error.hpp"

namespace triaco {

Trialgebra Trialgebra::abelian(std::size_t n) {
  return {n, Tensor3(n, n, n), Tensor3(n, n, n), Tensor3(n, n, n), Matrix::identity(n), Matrix::identity(n)};
}

const Tensor3& Trialgebra::product(Op op) const {
  switch (op) {
    case Op::Left: return left;
    case Op::Right: return right;
    case Op::Middle: break;
  }
  return middle;
}

Tensor3& Trialgebra::product(Op op) {
  return const_cast<Tensor3&>(static_cast<const Trialgebra&>(*this).product(op));
}

Vector Trialgebra::multiply(Op op, const Vector& x, const Vector& y) const {
  return product(op).contract(x, y);
}

void Trialgebra::validate_shape() const {
  for (Op op : kAllOps)
    if (!product(op).has_dims(dim, dim, dim))
      throw Error(Errc::ShapeMismatch, std::string(op_name(op)) + " tensor must be dim×dim×dim");
  if (alpha.rows() != dim || alpha.cols() != dim) throw Error(Errc::ShapeMismatch, "alpha must be dim×dim");
  if (beta.rows() != dim || beta.cols() != dim) throw Error(Errc::ShapeMismatch, "beta must be dim×dim");
}

LinearMap::LinearMap(Matrix m) : source_dim(m.cols()), target_dim(m.rows()), matrix(std::move(m)) {}

LinearMap::LinearMap(std::size_t source, std::size_t target, Matrix m)
    : source_dim(source), target_dim(target), matrix(std::move(m)) {
  if (matrix.rows() != target || matrix.cols() != source)
    throw Error(Errc::ShapeMismatch, "linear map matrix must be target×source");
}

LinearMap LinearMap::identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }

LinearMap LinearMap::zero(std::size_t source, std::size_t target) {
  return LinearMap(source, target, Matrix(target, source));
}

ViolationReport check_axioms(const Trialgebra& t) {
  t.validate_shape();
  const std::size_t n = t.dim;
  ViolationReport report;

  const Matrix comm = commutator(t.alpha, t.beta);
  for (std::size_t i = 0; i < n; ++i) {
    Vector d = comm.col(i);
    if (!is_zero(d)) report.add({"commute(alpha,beta)", 1, 0, {i}, std::move(d)});
  }

  // α e_a and β e_c are the columns of α and β.
  std::vector<Vector> alpha_e(n), beta_e(n);
  for (std::size_t i = 0; i < n; ++i) {
    alpha_e[i] = t.alpha.col(i);
    beta_e[i] = t.beta.col(i);
  }

  for (const auto& ax : kProductAxioms) {
    const std::string rule = "axiom(" + std::to_string(ax.id) + ")";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vector xy = t.product(ax.lhs_inner).fibre(a, b);
          const Vector lhs = t.multiply(ax.lhs_outer, xy, beta_e[c]);
          const Vector yz = t.product(ax.rhs_inner).fibre(b, c);
          const Vector rhs = t.multiply(ax.rhs_outer, alpha_e[a], yz);
          record_if_nonzero(report, rule, ax.id, {a, b, c}, lhs, rhs);
        }
  }
  return report;
}

ViolationReport check_multiplicative(const Trialgebra& t) {
  t.validate_shape();
  const std::size_t n = t.dim;
  ViolationReport report;
  const std::array<std::pair<const char*, const Matrix*>, 2> maps{{{"alpha", &t.alpha}, {"beta", &t.beta}}};
  for (const auto& [name, m] : maps) {
    for (Op op : kAllOps) {
      const std::string rule = std::string("multiplicative(") + name + "," + std::string(op_name(op)) + ")";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector lhs = m->apply(t.product(op).fibre(i, j));
          const Vector rhs = t.multiply(op, m->col(i), m->col(j));
          record_if_nonzero(report, rule, 0, {i, j}, lhs, rhs);
        }
    }
  }
  return report;
}

bool is_multiplicative_trialgebra(const Trialgebra& t) {
  return check_axioms(t).ok() && check_multiplicative(t).ok();
}

ViolationReport is_homomorphism(const LinearMap& phi, const Trialgebra& t1, const Trialgebra& t2) {
  t1.validate_shape();
  t2.validate_shape();
  if (phi.source_dim != t1.dim || phi.target_dim != t2.dim ||
      phi.matrix.rows() != t2.dim || phi.matrix.cols() != t1.dim)
    throw Error(Errc::ShapeMismatch, "homomorphism dimensions do not match the algebras");

  ViolationReport report;
  for (Op op : kAllOps) {
    const std::string rule = "homomorphism(" + std::string(op_name(op)) + ")";
    for (std::size_t i = 0; i < t1.dim; ++i)
      for (std::size_t j = 0; j < t1.dim; ++j) {
        const Vector lhs = phi(t1.product(op).fibre(i, j));
        const Vector rhs = t2.multiply(op, phi.matrix.col(i), phi.matrix.col(j));
        record_if_nonzero(report, rule, 0, {i, j}, lhs, rhs);
      }
  }
  const Matrix da = t2.alpha * phi.matrix - phi.matrix * t1.alpha;
  const Matrix db = t2.beta * phi.matrix - phi.matrix * t1.beta;
  for (std::size_t i = 0; i < t1.dim; ++i) {
    Vector a = da.col(i);
    if (!is_zero(a)) report.add({"intertwine(alpha)", 0, 0, {i}, std::move(a)});
  }
  for (std::size_t i = 0; i < t1.dim; ++i) {
    Vector b = db.col(i);
    if (!is_zero(b)) report.add({"intertwine(beta)", 0, 0, {i}, std::move(b)});
  }
  return report;
}

Subspace center(const Trialgebra& t) {
  t.validate_shape();
  const std::size_t n = t.dim;
  // Rows: coefficients of z in (z * e_j)_k and (e_j * z)_k.
  std::vector<Vector> rows;
  for (Op op : kAllOps) {
    const Tensor3& c = t.product(op);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector zr(n), zl(n);
        for (std::size_t i = 0; i < n; ++i) {
          zr[i] = c(i, j, k);
          zl[i] = c(j, i, k);
        }
        rows.push_back(std::move(zr));
        rows.push_back(std::move(zl));
      }
  }
  Subspace z = rows.empty() ? Subspace::full(n) : kernel_basis(Matrix::from_rows(n, rows));

  while (true) {
    const Matrix eq = z.equations();
    if (eq.rows() == 0) return z;
    std::vector<Vector> stacked;
    for (const Matrix& m : {Matrix::identity(n), t.alpha, t.beta}) {
      const Matrix pre = eq * m;
      for (std::size_t r = 0; r < pre.rows(); ++r) stacked.push_back(pre.row(r));
    }
    Subspace next = kernel_basis(Matrix::from_rows(n, stacked));
    if (next.dim() == z.dim()) return next;
    z = std::move(next);
  }
}

bool is_ideal(const Trialgebra& t, const Subspace& s) {
  t.validate_shape();
  if (s.ambient_dim() != t.dim) throw Error(Errc::ShapeMismatch, "subspace ambient differs from algebra dim");
  for (const Vector& b : s.basis_vectors()) {
    if (!s.contains(t.alpha.apply(b)) || !s.contains(t.beta.apply(b))) return false;
    for (Op op : kAllOps)
      for (std::size_t j = 0; j < t.dim; ++j) {
        const Vector e = unit_vector(t.dim, j);
        if (!s.contains(t.multiply(op, b, e)) || !s.contains(t.multiply(op, e, b))) return false;
      }
  }
  return true;
}

Trialgebra from_associative(const Tensor3& product, const Matrix& alpha, const Matrix& beta) {
  Trialgebra t{product.dim0(), product, product, product, alpha, beta};
  t.validate_shape();
  return t;
}

}  // namespace triaco
