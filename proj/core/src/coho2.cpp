#include "triaco/coho2.hpp"

#include <string>

#include "triaco/error.hpp"

namespace triaco {

CocycleTriple CocycleTriple::zero(std::size_t n, std::size_t m) {
  return {{Tensor3(n, n, m), Tensor3(n, n, m), Tensor3(n, n, m)}};
}

Vector CocycleTriple::to_vector() const {
  Vector out;
  out.reserve(3 * f[0].data().size());
  for (const auto& t : f) out.insert(out.end(), t.data().begin(), t.data().end());
  return out;
}

CocycleTriple CocycleTriple::from_vector(std::size_t n, std::size_t m, const Vector& v) {
  const std::size_t block = n * n * m;
  if (v.size() != 3 * block) throw Error(Errc::ShapeMismatch, "cocycle vector must have length 3n²m");
  CocycleTriple out = zero(n, m);
  for (std::size_t o = 0; o < 3; ++o)
    std::copy(v.begin() + static_cast<std::ptrdiff_t>(o * block),
              v.begin() + static_cast<std::ptrdiff_t>((o + 1) * block), out.f[o].data().begin());
  return out;
}

CocycleTriple operator+(const CocycleTriple& a, const CocycleTriple& b) {
  return {{a.f[0] + b.f[0], a.f[1] + b.f[1], a.f[2] + b.f[2]}};
}

CocycleTriple operator-(const CocycleTriple& a, const CocycleTriple& b) {
  return {{a.f[0] - b.f[0], a.f[1] - b.f[1], a.f[2] - b.f[2]}};
}

Matrix CentralExtension::iota() const {
  const std::size_t n = base.dim, m = coefficients.dim;
  Matrix i(n + m, m);
  for (std::size_t k = 0; k < m; ++k) i(n + k, k) = 1;
  return i;
}

Matrix CentralExtension::pi() const {
  const std::size_t n = base.dim, m = coefficients.dim;
  Matrix p(n, n + m);
  for (std::size_t k = 0; k < n; ++k) p(k, k) = 1;
  return p;
}

namespace {

void require_central(const Trialgebra& t, const TriBimodule& v) {
  v.validate_shape(t);
  if (!v.is_central()) throw Error(Errc::NonCentralCoefficients, "coefficient module has nonzero actions");
}

void require_shape(const CocycleTriple& f, std::size_t n, std::size_t m) {
  for (const auto& t : f.f)
    if (!t.has_dims(n, n, m)) throw Error(Errc::ShapeMismatch, "cocycle components must be n×n×m");
}

std::size_t unknown(std::size_t op, std::size_t i, std::size_t j, std::size_t k, std::size_t n, std::size_t m) {
  return op * n * n * m + (i * n + j) * m + k;
}

// Linear constraints whose kernel is Z² (columns follow CocycleTriple::to_vector).
Matrix cocycle_constraints(const Trialgebra& t, const TriBimodule& v) {
  const std::size_t n = t.dim, m = v.dim;
  std::vector<Vector> rows;
  const std::array<std::pair<const Matrix*, const Matrix*>, 2> maps{{{&t.alpha, &v.alphaV}, {&t.beta, &v.betaV}}};
  for (const auto& [a, av] : maps)
    for (std::size_t o = 0; o < 3; ++o)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < m; ++k) {
            Vector row(3 * n * n * m);
            for (std::size_t p = 0; p < n; ++p)
              for (std::size_t q = 0; q < n; ++q) row[unknown(o, p, q, k, n, m)] += (*a)(p, i) * (*a)(q, j);
            for (std::size_t l = 0; l < m; ++l) row[unknown(o, i, j, l, n, m)] -= (*av)(k, l);
            rows.push_back(std::move(row));
          }

  for (const auto& ax : kProductAxioms) {
    const Tensor3& in_l = t.product(ax.lhs_inner);
    const Tensor3& in_r = t.product(ax.rhs_inner);
    const std::size_t out_l = index(ax.lhs_outer), out_r = index(ax.rhs_outer);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t k = 0; k < m; ++k) {
            Vector row(3 * n * n * m);
            for (std::size_t p = 0; p < n; ++p)
              for (std::size_t q = 0; q < n; ++q) {
                row[unknown(out_l, p, q, k, n, m)] += in_l(a, b, p) * t.beta(q, c);
                row[unknown(out_r, p, q, k, n, m)] -= t.alpha(p, a) * in_r(b, c, q);
              }
            rows.push_back(std::move(row));
          }
  }
  return Matrix::from_rows(3 * n * n * m, rows);
}

// μ ↦ (μα − αVμ, μβ − βVμ), μ flattened row-major as μ(k, i) at k·n + i.
Matrix intertwiner_constraints(const Trialgebra& t, const TriBimodule& v) {
  const std::size_t n = t.dim, m = v.dim;
  std::vector<Vector> rows;
  const std::array<std::pair<const Matrix*, const Matrix*>, 2> maps{{{&t.alpha, &v.alphaV}, {&t.beta, &v.betaV}}};
  for (const auto& [a, av] : maps)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        Vector row(m * n);
        for (std::size_t l = 0; l < n; ++l) row[k * n + l] += (*a)(l, i);
        for (std::size_t l = 0; l < m; ++l) row[l * n + i] -= (*av)(k, l);
        rows.push_back(std::move(row));
      }
  return Matrix::from_rows(m * n, rows);
}

// Columns: μ entries; rows: the flattened triple (μ∘⊣, μ∘⊢, μ∘⊥).
Matrix coboundary_operator(const Trialgebra& t, std::size_t m) {
  const std::size_t n = t.dim;
  Matrix d(3 * n * n * m, m * n);
  for (std::size_t o = 0; o < 3; ++o) {
    const Tensor3& c = t.product(kAllOps[o]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t p = 0; p < n; ++p)
            if (sgn(c(i, j, p)) != 0) d(unknown(o, i, j, k, n, m), k * n + p) += c(i, j, p);
  }
  return d;
}

}  // namespace

ViolationReport is_two_cocycle(const Trialgebra& t, const TriBimodule& v, const CocycleTriple& f) {
  require_central(t, v);
  const std::size_t n = t.dim, m = v.dim;
  require_shape(f, n, m);
  ViolationReport report;

  const std::array<std::pair<const char*, std::pair<const Matrix*, const Matrix*>>, 2> maps{
      {{"alpha", {&t.alpha, &v.alphaV}}, {"beta", {&t.beta, &v.betaV}}}};
  for (const auto& [name, pair] : maps) {
    const auto& [a, av] = pair;
    for (Op op : kAllOps) {
      const std::string rule = std::string("equivariant(") + name + "," + std::string(op_name(op)) + ")";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          record_if_nonzero(report, rule, 0, {i, j}, f[op].contract(a->col(i), a->col(j)),
                            av->apply(f[op].fibre(i, j)));
    }
  }

  for (const auto& ax : kProductAxioms) {
    const std::string rule = "axiom(" + std::to_string(ax.id) + ")";
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vector lhs = f[ax.lhs_outer].contract(t.product(ax.lhs_inner).fibre(a, b), t.beta.col(c));
          const Vector rhs = f[ax.rhs_outer].contract(t.alpha.col(a), t.product(ax.rhs_inner).fibre(b, c));
          record_if_nonzero(report, rule, ax.id, {a, b, c}, lhs, rhs);
        }
  }
  return report;
}

CocycleTriple coboundary_of(const Trialgebra& t, const TriBimodule& v, const LinearMap& mu) {
  require_central(t, v);
  const std::size_t n = t.dim, m = v.dim;
  if (mu.matrix.rows() != m || mu.matrix.cols() != n) throw Error(Errc::ShapeMismatch, "mu must be m×n");
  if (!(mu.matrix * t.alpha == v.alphaV * mu.matrix) || !(mu.matrix * t.beta == v.betaV * mu.matrix))
    throw Error(Errc::NotAModuleMorphism, "mu does not intertwine the structure maps");
  CocycleTriple out = CocycleTriple::zero(n, m);
  for (Op op : kAllOps)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector img = mu(t.product(op).fibre(i, j));
        for (std::size_t k = 0; k < m; ++k) out[op](i, j, k) = img[k];
      }
  return out;
}

Subspace cocycle_space(const Trialgebra& t, const TriBimodule& v) {
  require_central(t, v);
  return kernel_basis(cocycle_constraints(t, v));
}

Subspace intertwiner_space(const Trialgebra& t, const TriBimodule& v) {
  v.validate_shape(t);
  return kernel_basis(intertwiner_constraints(t, v));
}

Subspace coboundary_space(const Trialgebra& t, const TriBimodule& v) {
  require_central(t, v);
  const Matrix d = coboundary_operator(t, v.dim);
  std::vector<Vector> images;
  for (const Vector& mu : intertwiner_space(t, v).basis_vectors()) images.push_back(d.apply(mu));
  return Subspace::span(d.rows(), images);
}

Quotient second_cohomology(const Trialgebra& t, const TriBimodule& v) {
  return quotient_dim(cocycle_space(t, v), coboundary_space(t, v));
}

CentralExtension central_extension(const Trialgebra& t, const TriBimodule& v, const CocycleTriple& f) {
  require_central(t, v);
  const std::size_t n = t.dim, m = v.dim, s = n + m;
  require_shape(f, n, m);
  Trialgebra total;
  total.dim = s;
  for (Op op : kAllOps) {
    Tensor3 p(s, s, s);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) p(i, j, k) = t.product(op)(i, j, k);
        for (std::size_t k = 0; k < m; ++k) p(i, j, n + k) = f[op](i, j, k);
      }
    total.product(op) = std::move(p);
  }
  total.alpha = direct_sum(t.alpha, v.alphaV);
  total.beta = direct_sum(t.beta, v.betaV);
  return {std::move(total), t, v};
}

CocycleTriple extract_cocycle(const CentralExtension& e) {
  const Trialgebra& t = e.base;
  const TriBimodule& v = e.coefficients;
  require_central(t, v);
  const std::size_t n = t.dim, m = v.dim, s = n + m;
  e.total.validate_shape();
  if (e.total.dim != s) throw Error(Errc::NotStandardForm, "total dimension is not dim T + dim V");
  if (!(e.total.alpha == direct_sum(t.alpha, v.alphaV)) || !(e.total.beta == direct_sum(t.beta, v.betaV)))
    throw Error(Errc::NotStandardForm, "structure maps are not block diagonal α⊕αV, β⊕βV");

  CocycleTriple out = CocycleTriple::zero(n, m);
  for (Op op : kAllOps) {
    const Tensor3& p = e.total.product(op);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < s; ++k) {
          const Scalar& x = p(i, j, k);
          if (i < n && j < n) {
            if (k < n && x != t.product(op)(i, j, k))
              throw Error(Errc::NotStandardForm, "T-block of " + std::string(op_name(op)) + " differs from the base");
            if (k >= n) out[op](i, j, k - n) = x;
          } else if (sgn(x) != 0) {
            throw Error(Errc::NotStandardForm, "a product with a V-coordinate is nonzero");
          }
        }
  }
  return out;
}

std::optional<EquivalenceWitness> are_equivalent(const CentralExtension& e1, const CentralExtension& e2) {
  if (!(e1.base == e2.base) || !(e1.coefficients == e2.coefficients))
    throw Error(Errc::MismatchedBase, "extensions are over different (T, V)");
  const Trialgebra& t = e1.base;
  const TriBimodule& v = e1.coefficients;
  const std::size_t n = t.dim, m = v.dim;
  const Vector diff = (extract_cocycle(e2) - extract_cocycle(e1)).to_vector();

  // μα − αVμ = 0, μβ − βVμ = 0, μ∘* = F₂ − F₁.
  const Matrix ic = intertwiner_constraints(t, v);
  const Matrix d = coboundary_operator(t, m);
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t r = 0; r < ic.rows(); ++r) {
    rows.push_back(ic.row(r));
    rhs.emplace_back(0);
  }
  for (std::size_t r = 0; r < d.rows(); ++r) {
    rows.push_back(d.row(r));
    rhs.push_back(diff[r]);
  }
  const auto sol = solve(Matrix::from_rows(m * n, rows), rhs);
  if (!sol) return std::nullopt;

  Matrix mu(m, n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) mu(k, i) = (*sol)[k * n + i];
  Matrix phi = Matrix::identity(n + m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < n; ++i) phi(n + k, i) = mu(k, i);

  ViolationReport report = is_homomorphism(LinearMap(phi), e1.total, e2.total);
  const Matrix tri_iota = phi * e1.iota() - e2.iota();
  const Matrix tri_pi = e2.pi() * phi - e1.pi();
  for (std::size_t c = 0; c < m; ++c) {
    Vector dv = tri_iota.col(c);
    if (!is_zero(dv)) report.add({"triangle(iota)", 0, 0, {c}, std::move(dv)});
  }
  for (std::size_t c = 0; c < n + m; ++c) {
    Vector dv = tri_pi.col(c);
    if (!is_zero(dv)) report.add({"triangle(pi)", 0, 0, {c}, std::move(dv)});
  }
  return EquivalenceWitness{LinearMap(std::move(mu)), std::move(phi), std::move(report)};
}

}  // namespace triaco
