#pragma once

// Second cohomology with central coefficients and central extensions.

#include <array>
#include <cstddef>
#include <optional>

#include "triaco/algebra.hpp"
#include "triaco/bimodule.hpp"

namespace triaco {

/// Three bilinear maps T×T→V, each stored n×n×m with f(i, j, k) the
/// coefficient of v_k in f(e_i, e_j). Indexed by Op.
struct CocycleTriple {
  std::array<Tensor3, 3> f;

  static CocycleTriple zero(std::size_t n, std::size_t m);

  const Tensor3& operator[](Op op) const { return f[index(op)]; }
  Tensor3& operator[](Op op) { return f[index(op)]; }

  std::size_t base_dim() const { return f[0].dim0(); }
  std::size_t coefficient_dim() const { return f[0].dim2(); }

  /// Flattened as op·n²m + (i·n + j)·m + k, ops in the order left, right, middle.
  Vector to_vector() const;
  static CocycleTriple from_vector(std::size_t n, std::size_t m, const Vector& v);

  friend bool operator==(const CocycleTriple&, const CocycleTriple&) = default;
  friend CocycleTriple operator+(const CocycleTriple& a, const CocycleTriple& b);
  friend CocycleTriple operator-(const CocycleTriple& a, const CocycleTriple& b);
};

/// A central extension in standard form: coordinates 0..n-1 of `total` are
/// the T-part, coordinates n..n+m-1 the V-part.
struct CentralExtension {
  Trialgebra total;
  Trialgebra base;
  TriBimodule coefficients;

  /// Inclusion of V as the last m coordinates ((n+m)×m).
  Matrix iota() const;
  /// Projection onto the first n coordinates (n×(n+m)).
  Matrix pi() const;
};

/// Equivariance f(αx, αy) = αV f(x, y) (and β) plus the eleven identities
///   f_outer(x inner y, βz) = f_outer'(αx, y inner' z).
/// Throws NonCentralCoefficients if V has a nonzero action.
ViolationReport is_two_cocycle(const Trialgebra& t, const TriBimodule& v, const CocycleTriple& f);

/// (μ∘⊣, μ∘⊢, μ∘⊥). μ is m×n and must satisfy μα = αVμ, μβ = βVμ
/// (NotAModuleMorphism otherwise).
CocycleTriple coboundary_of(const Trialgebra& t, const TriBimodule& v, const LinearMap& mu);

/// Z², as a subspace of Q^{3n²m}.
Subspace cocycle_space(const Trialgebra& t, const TriBimodule& v);

/// All μ (m×n, row-major flattened) with μα = αVμ and μβ = βVμ.
Subspace intertwiner_space(const Trialgebra& t, const TriBimodule& v);

/// B², the image of μ ↦ coboundary_of(μ) over intertwiner_space.
Subspace coboundary_space(const Trialgebra& t, const TriBimodule& v);

/// dim Z²/B² and coset representatives.
Quotient second_cohomology(const Trialgebra& t, const TriBimodule& v);

/// T ⊕ V with (x+u)*(y+v) = x*y + f_*(x, y) and maps α⊕αV, β⊕βV. A
/// non-cocycle F still yields an algebra; check_axioms then reports it.
CentralExtension central_extension(const Trialgebra& t, const TriBimodule& v, const CocycleTriple& f);

/// F(x, y) = s(x)*s(y) − s(x*y) for the coordinate section s(x) = (x, 0).
/// Throws NotStandardForm unless the T-block, the maps and the vanishing
/// of every product with a V-coordinate match the standard form.
CocycleTriple extract_cocycle(const CentralExtension& e);

struct EquivalenceWitness {
  LinearMap mu;
  /// φ(x+v) = x + μ(x) + v as an (n+m)×(n+m) matrix.
  Matrix phi;
  /// is_homomorphism(φ, E1, E2) plus the two commuting triangles.
  ViolationReport report;
};

/// Solves for μ with φ(x+v) = x + μ(x) + v an isomorphism of extensions;
/// this shape is forced by φι₁ = ι₂ and π₂φ = π₁. Throws MismatchedBase
/// unless both extensions share T and V.
std::optional<EquivalenceWitness> are_equivalent(const CentralExtension& e1, const CentralExtension& e2);

}  // namespace triaco
