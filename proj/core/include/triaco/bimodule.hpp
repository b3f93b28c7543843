#pragma once

// BiHom-modules over a trialgebra and the semidirect product T ⊕ V.
//
// A module does not own its algebra; every function takes the pair (T, V).

#include <array>
#include <cstddef>

#include "triaco/algebra.hpp"

namespace triaco {

struct TriBimodule {
  std::size_t dim = 0;
  std::size_t algebra_dim = 0;
  /// lact[op](i, j, k): coefficient of v_k in e_i * v_j (n×m×m).
  std::array<Tensor3, 3> lact;
  /// ract[op](i, j, k): coefficient of v_k in v_i * e_j (m×n×m).
  std::array<Tensor3, 3> ract;
  Matrix alphaV;
  Matrix betaV;

  Vector left_action(Op op, const Vector& x, const Vector& v) const { return lact[index(op)].contract(x, v); }
  Vector right_action(Op op, const Vector& v, const Vector& x) const { return ract[index(op)].contract(v, x); }

  /// True when all six action tensors vanish.
  bool is_central() const;

  void validate_shape() const;
  /// validate_shape plus agreement with the algebra's dimension.
  void validate_shape(const Trialgebra& t) const;

  friend bool operator==(const TriBimodule&, const TriBimodule&) = default;
};

/// αVβV = βVαV, the 12 equivariance identities
///   αV(x*v) = α(x)*αV(v),  αV(v*x) = αV(v)*α(x)  (and β),
/// and the 33 mixed identities obtained from (2)..(12) by putting a module
/// element in slot 1, 2 or 3.
ViolationReport check_module_axioms(const Trialgebra& t, const TriBimodule& v);

/// Zero actions. Throws NonCommutingStructureMaps unless αVβV = βVαV.
TriBimodule trivial_module(const Trialgebra& t, std::size_t m, const Matrix& alphaV, const Matrix& betaV);

/// T acting on itself by its own products.
TriBimodule adjoint_module(const Trialgebra& t);

/// φαV = αWφ and φβV = βWφ on basis vectors.
ViolationReport is_module_morphism(const LinearMap& phi, const TriBimodule& v, const TriBimodule& w);

/// T ⊕ V with (x+u)*(y+v) = x*y + x*v + u*y, maps α⊕αV and β⊕βV. The
/// first n coordinates are T, the last m are V. Throws InvalidModule if V
/// fails its checker.
Trialgebra semidirect_product(const Trialgebra& t, const TriBimodule& v);

/// Same construction without validating V.
Trialgebra semidirect_product_unchecked(const Trialgebra& t, const TriBimodule& v);

}  // namespace triaco
