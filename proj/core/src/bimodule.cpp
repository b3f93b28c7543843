#include "triaco/bimodule.hpp"

#include <string>

#include "triaco/error.hpp"

namespace triaco {

bool TriBimodule::is_central() const {
  for (Op op : kAllOps)
    if (!lact[index(op)].is_zero() || !ract[index(op)].is_zero()) return false;
  return true;
}

void TriBimodule::validate_shape() const {
  const std::size_t n = algebra_dim, m = dim;
  for (Op op : kAllOps) {
    if (!lact[index(op)].has_dims(n, m, m))
      throw Error(Errc::ShapeMismatch, "lact_" + std::string(op_name(op)) + " must be n×m×m");
    if (!ract[index(op)].has_dims(m, n, m))
      throw Error(Errc::ShapeMismatch, "ract_" + std::string(op_name(op)) + " must be m×n×m");
  }
  if (alphaV.rows() != m || alphaV.cols() != m) throw Error(Errc::ShapeMismatch, "alphaV must be m×m");
  if (betaV.rows() != m || betaV.cols() != m) throw Error(Errc::ShapeMismatch, "betaV must be m×m");
}

void TriBimodule::validate_shape(const Trialgebra& t) const {
  t.validate_shape();
  if (algebra_dim != t.dim) throw Error(Errc::ShapeMismatch, "module is over an algebra of another dimension");
  validate_shape();
}

ViolationReport check_module_axioms(const Trialgebra& t, const TriBimodule& v) {
  v.validate_shape(t);
  const std::size_t n = t.dim, m = v.dim;
  ViolationReport report;

  const Matrix comm = commutator(v.alphaV, v.betaV);
  for (std::size_t i = 0; i < m; ++i) {
    Vector d = comm.col(i);
    if (!is_zero(d)) report.add({"commute(alphaV,betaV)", 1, 0, {i}, std::move(d)});
  }

  const std::array<std::pair<const char*, std::pair<const Matrix*, const Matrix*>>, 2> maps{
      {{"alpha", {&t.alpha, &v.alphaV}}, {"beta", {&t.beta, &v.betaV}}}};
  for (const auto& [name, pair] : maps) {
    const auto& [a, av] = pair;
    for (Op op : kAllOps) {
      const std::string sfx = std::string(name) + "," + std::string(op_name(op));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Vector lhs = av->apply(v.lact[index(op)].fibre(i, j));
          const Vector rhs = v.left_action(op, a->col(i), av->col(j));
          record_if_nonzero(report, "equivariant(" + sfx + ",lact)", 0, {i, j}, lhs, rhs);
        }
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector lhs = av->apply(v.ract[index(op)].fibre(i, j));
          const Vector rhs = v.right_action(op, av->col(i), a->col(j));
          record_if_nonzero(report, "equivariant(" + sfx + ",ract)", 0, {i, j}, lhs, rhs);
        }
    }
  }

  for (const auto& ax : kProductAxioms) {
    const std::string base = "mixed(" + std::to_string(ax.id) + ",slot";
    // Module element in slot 1: (v * y) * βz = αV(v) * (y * z).
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vector lhs = v.right_action(ax.lhs_outer, v.ract[index(ax.lhs_inner)].fibre(a, b), t.beta.col(c));
          const Vector rhs = v.right_action(ax.rhs_outer, v.alphaV.col(a), t.product(ax.rhs_inner).fibre(b, c));
          record_if_nonzero(report, base + "1)", ax.id, {a, b, c}, lhs, rhs);
        }
    // Slot 2: (x * v) * βz = αx * (v * z).
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const Vector lhs = v.right_action(ax.lhs_outer, v.lact[index(ax.lhs_inner)].fibre(a, b), t.beta.col(c));
          const Vector rhs = v.left_action(ax.rhs_outer, t.alpha.col(a), v.ract[index(ax.rhs_inner)].fibre(b, c));
          record_if_nonzero(report, base + "2)", ax.id, {a, b, c}, lhs, rhs);
        }
    // Slot 3: (x * y) * βV(v) = αx * (y * v).
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < m; ++c) {
          const Vector lhs = v.left_action(ax.lhs_outer, t.product(ax.lhs_inner).fibre(a, b), v.betaV.col(c));
          const Vector rhs = v.left_action(ax.rhs_outer, t.alpha.col(a), v.lact[index(ax.rhs_inner)].fibre(b, c));
          record_if_nonzero(report, base + "3)", ax.id, {a, b, c}, lhs, rhs);
        }
  }
  return report;
}

TriBimodule trivial_module(const Trialgebra& t, std::size_t m, const Matrix& alphaV, const Matrix& betaV) {
  t.validate_shape();
  TriBimodule v;
  v.dim = m;
  v.algebra_dim = t.dim;
  for (Op op : kAllOps) {
    v.lact[index(op)] = Tensor3(t.dim, m, m);
    v.ract[index(op)] = Tensor3(m, t.dim, m);
  }
  v.alphaV = alphaV;
  v.betaV = betaV;
  v.validate_shape();
  if (!commutator(alphaV, betaV).is_zero())
    throw Error(Errc::NonCommutingStructureMaps, "alphaV and betaV do not commute");
  return v;
}

TriBimodule adjoint_module(const Trialgebra& t) {
  t.validate_shape();
  TriBimodule v;
  v.dim = t.dim;
  v.algebra_dim = t.dim;
  for (Op op : kAllOps) {
    v.lact[index(op)] = t.product(op);
    v.ract[index(op)] = t.product(op);
  }
  v.alphaV = t.alpha;
  v.betaV = t.beta;
  return v;
}

ViolationReport is_module_morphism(const LinearMap& phi, const TriBimodule& v, const TriBimodule& w) {
  v.validate_shape();
  w.validate_shape();
  if (phi.matrix.cols() != v.dim || phi.matrix.rows() != w.dim)
    throw Error(Errc::ShapeMismatch, "morphism matrix must be dim W × dim V");
  ViolationReport report;
  const Matrix da = phi.matrix * v.alphaV - w.alphaV * phi.matrix;
  const Matrix db = phi.matrix * v.betaV - w.betaV * phi.matrix;
  for (std::size_t i = 0; i < v.dim; ++i) {
    Vector d = da.col(i);
    if (!is_zero(d)) report.add({"intertwine(alpha)", 0, 0, {i}, std::move(d)});
  }
  for (std::size_t i = 0; i < v.dim; ++i) {
    Vector d = db.col(i);
    if (!is_zero(d)) report.add({"intertwine(beta)", 0, 0, {i}, std::move(d)});
  }
  return report;
}

Trialgebra semidirect_product_unchecked(const Trialgebra& t, const TriBimodule& v) {
  v.validate_shape(t);
  const std::size_t n = t.dim, m = v.dim, s = n + m;
  Trialgebra out;
  out.dim = s;
  for (Op op : kAllOps) {
    Tensor3 p(s, s, s);
    const Tensor3& c = t.product(op);
    const Tensor3& l = v.lact[index(op)];
    const Tensor3& r = v.ract[index(op)];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) p(i, j, k) = c(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) p(i, n + j, n + k) = l(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) p(n + i, j, n + k) = r(i, j, k);
    out.product(op) = std::move(p);
  }
  out.alpha = direct_sum(t.alpha, v.alphaV);
  out.beta = direct_sum(t.beta, v.betaV);
  return out;
}

Trialgebra semidirect_product(const Trialgebra& t, const TriBimodule& v) {
  const ViolationReport r = check_module_axioms(t, v);
  if (!r.ok())
    throw Error(Errc::InvalidModule, "module fails " + std::to_string(r.size()) + " axiom instances, first " +
                                         r.rows.front().rule);
  return semidirect_product_unchecked(t, v);
}

}  // namespace triaco
