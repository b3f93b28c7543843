#pragma once

// BiHom-associative trialgebras given by structure constants.
//
// A trialgebra of dimension n carries three n×n×n tensors (⊣, ⊢, ⊥) with
// t(i, j, k) the coefficient of e_k in e_i * e_j, and two n×n structure maps
// α, β acting on column vectors.

#include <array>
#include <cstddef>

#include "triaco/linalg.hpp"
#include "triaco/report.hpp"
#include "triaco/tensor.hpp"

namespace triaco {

/// One product identity  (x inner_l y) outer_l β(z) = α(x) outer_r (y inner_r z).
struct AxiomShape {
  int id;
  Op lhs_inner;
  Op lhs_outer;
  Op rhs_outer;
  Op rhs_inner;
};

/// Identities (2)..(12). Identity (1) is αβ = βα.
inline constexpr std::array<AxiomShape, 11> kProductAxioms{{
    {2, Op::Left, Op::Left, Op::Left, Op::Left},
    {3, Op::Left, Op::Left, Op::Left, Op::Right},
    {4, Op::Right, Op::Left, Op::Right, Op::Left},
    {5, Op::Left, Op::Right, Op::Right, Op::Right},
    {6, Op::Right, Op::Right, Op::Right, Op::Right},
    {7, Op::Left, Op::Left, Op::Left, Op::Middle},
    {8, Op::Middle, Op::Left, Op::Middle, Op::Left},
    {9, Op::Left, Op::Middle, Op::Middle, Op::Right},
    {10, Op::Right, Op::Middle, Op::Right, Op::Middle},
    {11, Op::Middle, Op::Right, Op::Right, Op::Right},
    {12, Op::Middle, Op::Middle, Op::Middle, Op::Middle},
}};

struct Trialgebra {
  std::size_t dim = 0;
  Tensor3 left;
  Tensor3 right;
  Tensor3 middle;
  Matrix alpha;
  Matrix beta;

  /// All products zero, α = β = id.
  static Trialgebra abelian(std::size_t n);

  const Tensor3& product(Op op) const;
  Tensor3& product(Op op);

  /// x * y for arbitrary coordinate vectors.
  Vector multiply(Op op, const Vector& x, const Vector& y) const;

  /// Throws ShapeMismatch unless all tensors and maps match `dim`.
  void validate_shape() const;

  friend bool operator==(const Trialgebra&, const Trialgebra&) = default;
};

/// A linear map given by its target×source matrix.
struct LinearMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Matrix matrix;

  LinearMap() = default;
  explicit LinearMap(Matrix m);
  LinearMap(std::size_t source, std::size_t target, Matrix m);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t source, std::size_t target);

  Vector operator()(const Vector& v) const { return matrix.apply(v); }
};

/// Evaluates αβ − βα on basis vectors and each product identity on every
/// basis triple. Empty ⇔ T is a BiHom-associative trialgebra.
ViolationReport check_axioms(const Trialgebra& t);

/// α(e_i * e_j) = α(e_i) * α(e_j) and likewise for β, every product.
ViolationReport check_multiplicative(const Trialgebra& t);

/// Both checkers pass.
bool is_multiplicative_trialgebra(const Trialgebra& t);

/// φ(x *₁ y) = φ(x) *₂ φ(y) for all three products, α₂φ = φα₁, β₂φ = φβ₁.
ViolationReport is_homomorphism(const LinearMap& phi, const Trialgebra& t1, const Trialgebra& t2);

/// The largest α,β-stable subspace of {z : z*t = t*z = 0 for all t and all
/// three products}. Stability is obtained by intersecting with α- and
/// β-preimages until the dimension stops dropping.
Subspace center(const Trialgebra& t);

/// α- and β-stable, and closed under all six one-sided products with T.
bool is_ideal(const Trialgebra& t, const Subspace& s);

/// The trialgebra with all three products equal to `product`.
Trialgebra from_associative(const Tensor3& product, const Matrix& alpha, const Matrix& beta);

}  // namespace triaco
