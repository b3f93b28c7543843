#include "triaco/deformation.hpp"

#include <string>

#include "triaco/bimodule.hpp"
#include "triaco/error.hpp"

namespace triaco {

namespace {

ProductTriple base_products(const Trialgebra& t) { return {t.left, t.right, t.middle}; }

ProductTriple zero_products(std::size_t n) { return {Tensor3(n, n, n), Tensor3(n, n, n), Tensor3(n, n, n)}; }

// *' = p∘*∘(q⊗q) on one tensor.
Tensor3 transform(const Tensor3& c, const Matrix& p, const Matrix& q) {
  const std::size_t n = c.dim0();
  Tensor3 out(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector img = p.apply(c.contract(q.col(i), q.col(j)));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = img[k];
    }
  return out;
}

}  // namespace

TruncatedDeformation TruncatedDeformation::trivial(const Trialgebra& base, std::size_t order) {
  base.validate_shape();
  TruncatedDeformation d{base, order, {base_products(base)}};
  for (std::size_t i = 1; i <= order; ++i) d.terms.push_back(zero_products(base.dim));
  return d;
}

void TruncatedDeformation::validate() const {
  base.validate_shape();
  if (terms.size() != order + 1)
    throw Error(Errc::ShapeMismatch, "a deformation of order N needs N+1 terms");
  for (const auto& term : terms)
    for (const auto& c : term)
      if (!c.has_dims(base.dim, base.dim, base.dim)) throw Error(Errc::ShapeMismatch, "deformation term must be n×n×n");
  if (!(terms[0] == base_products(base)))
    throw Error(Errc::BaseTermMismatch, "terms[0] must equal the base products");
}

FormalAutomorphism FormalAutomorphism::identity(std::size_t dim, std::size_t order) {
  FormalAutomorphism phi{order, {Matrix::identity(dim)}};
  for (std::size_t i = 1; i <= order; ++i) phi.maps.emplace_back(dim, dim);
  return phi;
}

void FormalAutomorphism::validate(std::size_t dim) const {
  if (maps.size() != order + 1) throw Error(Errc::ShapeMismatch, "an automorphism of order N needs N+1 maps");
  for (const auto& m : maps)
    if (m.rows() != dim || m.cols() != dim) throw Error(Errc::ShapeMismatch, "automorphism maps must be n×n");
  if (!maps[0].is_identity()) throw Error(Errc::NotIdentityAtZero, "maps[0] must be the identity");
}

ViolationReport verify_deformation(const TruncatedDeformation& d) {
  d.validate();
  const Trialgebra& t = d.base;
  const std::size_t n = t.dim;
  ViolationReport report;

  const Matrix comm = commutator(t.alpha, t.beta);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = comm.col(i);
    if (!is_zero(v)) report.add({"commute(alpha,beta)", 1, 0, {i}, std::move(v)});
  }

  for (const auto& ax : kProductAxioms) {
    const std::string rule = "axiom(" + std::to_string(ax.id) + ")";
    for (std::size_t ord = 0; ord <= d.order; ++ord)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            Vector lhs(n), rhs(n);
            for (std::size_t i = 0; i <= ord; ++i) {
              const std::size_t j = ord - i;
              const Vector xy = d.terms[j][index(ax.lhs_inner)].fibre(a, b);
              lhs = lhs + d.terms[i][index(ax.lhs_outer)].contract(xy, t.beta.col(c));
              const Vector yz = d.terms[j][index(ax.rhs_inner)].fibre(b, c);
              rhs = rhs + d.terms[i][index(ax.rhs_outer)].contract(t.alpha.col(a), yz);
            }
            record_if_nonzero(report, rule, ax.id, {a, b, c}, lhs, rhs, ord);
          }
  }
  return report;
}

ViolationReport check_term_equivariance(const TruncatedDeformation& d) {
  d.validate();
  const Trialgebra& t = d.base;
  ViolationReport report;
  const std::array<std::pair<const char*, const Matrix*>, 2> maps{{{"alpha", &t.alpha}, {"beta", &t.beta}}};
  for (std::size_t ord = 1; ord <= d.order; ++ord)
    for (const auto& [name, m] : maps)
      for (Op op : kAllOps) {
        const Tensor3& c = d.terms[ord][index(op)];
        const std::string rule = std::string("equivariant(") + name + "," + std::string(op_name(op)) + ")";
        for (std::size_t i = 0; i < t.dim; ++i)
          for (std::size_t j = 0; j < t.dim; ++j)
            record_if_nonzero(report, rule, 0, {i, j}, m->apply(c.fibre(i, j)), c.contract(m->col(i), m->col(j)),
                              ord);
      }
  return report;
}

TreeCochain infinitesimal(const TruncatedDeformation& d, const TreeConvention& convention) {
  d.validate();
  if (d.order < 1) throw Error(Errc::OrderZero, "an order-0 deformation has no infinitesimal");
  return triple_to_cochain(CocycleTriple{d.terms[1]}, convention);
}

bool is_infinitesimal_cocycle(const TruncatedDeformation& d, const TreeConvention& convention) {
  HochschildOptions opts;
  opts.convention = convention;
  const TreeCochain f = infinitesimal(d, convention);
  return is_zero(delta_bht(d.base, adjoint_module(d.base), f, opts).values);
}

ViolationReport verify_equivalence(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                                   const FormalAutomorphism& phi) {
  d1.validate();
  d2.validate();
  if (d1.order != d2.order || phi.order != d1.order)
    throw Error(Errc::OrderMismatch, "deformations and automorphism must share one truncation order");
  if (d1.base.dim != d2.base.dim) throw Error(Errc::ShapeMismatch, "deformations have different dimensions");
  const std::size_t n = d1.base.dim, top = d1.order;
  phi.validate(n);
  ViolationReport report;

  for (Op op : kAllOps) {
    const std::string rule = "intertwine(" + std::string(op_name(op)) + ")";
    const std::size_t o = index(op);
    for (std::size_t ord = 0; ord <= top; ++ord)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Vector lhs(n), rhs(n);
          for (std::size_t i = 0; i <= ord; ++i)
            lhs = lhs + phi.maps[i].apply(d1.terms[ord - i][o].fibre(a, b));
          for (std::size_t i = 0; i <= ord; ++i)
            for (std::size_t j = 0; i + j <= ord; ++j)
              rhs = rhs + d2.terms[ord - i - j][o].contract(phi.maps[i].col(a), phi.maps[j].col(b));
          record_if_nonzero(report, rule, 0, {a, b}, lhs, rhs, ord);
        }
  }

  for (std::size_t i = 0; i <= top; ++i) {
    const Matrix da = phi.maps[i] * d1.base.alpha - d2.base.alpha * phi.maps[i];
    const Matrix db = phi.maps[i] * d1.base.beta - d2.base.beta * phi.maps[i];
    for (std::size_t c = 0; c < n; ++c) {
      Vector v = da.col(c);
      if (!is_zero(v)) report.add({"commute(phi,alpha)", 0, i, {c}, std::move(v)});
    }
    for (std::size_t c = 0; c < n; ++c) {
      Vector v = db.col(c);
      if (!is_zero(v)) report.add({"commute(phi,beta)", 0, i, {c}, std::move(v)});
    }
  }
  return report;
}

FormalAutomorphism series_inverse(const FormalAutomorphism& phi) {
  if (phi.maps.empty()) throw Error(Errc::ShapeMismatch, "empty automorphism");
  const std::size_t n = phi.maps[0].rows();
  phi.validate(n);
  FormalAutomorphism inv{phi.order, {Matrix::identity(n)}};
  for (std::size_t k = 1; k <= phi.order; ++k) {
    Matrix acc(n, n);
    for (std::size_t i = 1; i <= k; ++i) acc = acc - phi.maps[i] * inv.maps[k - i];
    inv.maps.push_back(std::move(acc));
  }
  return inv;
}

TruncatedDeformation transport(const TruncatedDeformation& d, const FormalAutomorphism& phi) {
  d.validate();
  const std::size_t n = d.base.dim, top = d.order;
  if (phi.order != top) throw Error(Errc::OrderMismatch, "automorphism order differs from the deformation");
  phi.validate(n);
  const FormalAutomorphism psi = series_inverse(phi);

  TruncatedDeformation out{d.base, top, {}};
  for (std::size_t ord = 0; ord <= top; ++ord) {
    ProductTriple term = zero_products(n);
    for (std::size_t o = 0; o < 3; ++o)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Vector acc(n);
          for (std::size_t i = 0; i <= ord; ++i)
            for (std::size_t j = 0; i + j <= ord; ++j)
              for (std::size_t k = 0; i + j + k <= ord; ++k) {
                const std::size_t l = ord - i - j - k;
                acc = acc + phi.maps[i].apply(d.terms[l][o].contract(psi.maps[j].col(a), psi.maps[k].col(b)));
              }
          for (std::size_t c = 0; c < n; ++c) term[o](a, b, c) = acc[c];
        }
    out.terms.push_back(std::move(term));
  }
  return out;
}

Trialgebra pushforward(const Trialgebra& t, const LinearMap& phi) {
  t.validate_shape();
  if (phi.matrix.rows() != t.dim || phi.matrix.cols() != t.dim)
    throw Error(Errc::ShapeMismatch, "transport map must be n×n");
  const Matrix inv = inverse(phi.matrix);
  Trialgebra out;
  out.dim = t.dim;
  for (Op op : kAllOps) out.product(op) = transform(t.product(op), phi.matrix, inv);
  out.alpha = phi.matrix * t.alpha * inv;
  out.beta = phi.matrix * t.beta * inv;
  return out;
}

Trialgebra pullback(const Trialgebra& t2, const LinearMap& phi) {
  t2.validate_shape();
  if (phi.matrix.rows() != t2.dim || phi.matrix.cols() != t2.dim)
    throw Error(Errc::ShapeMismatch, "transport map must be n×n");
  return pushforward(t2, LinearMap(inverse(phi.matrix)));
}

}  // namespace triaco
