#pragma once

// One-parameter formal deformations truncated at order N. Only the products
// are deformed; α and β stay fixed. All series arithmetic is mod t^{N+1}.

#include <array>
#include <cstddef>
#include <vector>

#include "triaco/algebra.hpp"
#include "triaco/hochschild.hpp"

namespace triaco {

/// (⊣_i, ⊢_i, ⊥_i), indexed by Op.
using ProductTriple = std::array<Tensor3, 3>;

struct TruncatedDeformation {
  Trialgebra base;
  std::size_t order = 0;
  /// terms[0] equals the base products.
  std::vector<ProductTriple> terms;

  /// The undeformed series: terms[i] = 0 for i ≥ 1.
  static TruncatedDeformation trivial(const Trialgebra& base, std::size_t order);

  /// Throws ShapeMismatch or BaseTermMismatch.
  void validate() const;
};

struct FormalAutomorphism {
  std::size_t order = 0;
  /// maps[0] is the identity.
  std::vector<Matrix> maps;

  static FormalAutomorphism identity(std::size_t dim, std::size_t order);

  /// Throws ShapeMismatch or NotIdentityAtZero.
  void validate(std::size_t dim) const;
};

/// For every product identity and every order n ≤ N:
///   Σ_{i+j=n} (x inner_j y) outer_i βz = Σ_{i+j=n} αx outer_i (y inner_j z).
/// Order 0 also carries αβ = βα, so it agrees with check_axioms(base).
ViolationReport verify_deformation(const TruncatedDeformation& d);

/// α(x *_i y) = αx *_i αy (and β) for i ≥ 1.
ViolationReport check_term_equivariance(const TruncatedDeformation& d);

/// The order-1 term as a degree-2 tree cochain with adjoint coefficients.
/// Throws OrderZero.
TreeCochain infinitesimal(const TruncatedDeformation& d,
                          const TreeConvention& convention = kCalibratedConvention);

/// δ²(infinitesimal(d)) = 0 with adjoint coefficients.
bool is_infinitesimal_cocycle(const TruncatedDeformation& d,
                              const TreeConvention& convention = kCalibratedConvention);

/// Σ_{i+j=n} φ_i(x *_j y) = Σ_{i+j+l=n} φ_i(x) *'_l φ_j(y) for every order
/// and product, plus φ_i α = α φ_i and φ_i β = β φ_i for each i. Throws
/// OrderMismatch unless all three orders agree.
ViolationReport verify_equivalence(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                                   const FormalAutomorphism& phi);

/// The truncated series inverse of φ_t (exists since φ₀ = id).
FormalAutomorphism series_inverse(const FormalAutomorphism& phi);

/// The deformation with products φ_t ∘ *_t ∘ (φ_t⁻¹ ⊗ φ_t⁻¹) mod t^{N+1}.
TruncatedDeformation transport(const TruncatedDeformation& d, const FormalAutomorphism& phi);

/// *' = φ∘*∘(φ⁻¹⊗φ⁻¹), α' = φαφ⁻¹, β' = φβφ⁻¹. Throws Singular.
Trialgebra pushforward(const Trialgebra& t, const LinearMap& phi);

/// *₁ = φ⁻¹∘*₂∘(φ⊗φ), the inverse of pushforward. Throws Singular.
Trialgebra pullback(const Trialgebra& t2, const LinearMap& phi);

}  // namespace triaco
