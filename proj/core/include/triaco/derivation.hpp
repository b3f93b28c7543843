#pragma once

// Generalized αβ-derivations: triples (D, D', D'') commuting with α and β and
// satisfying D''(a*b) = D(a)*αβ(b) + αβ(a)*D'(b) for each product.
//
// Unknowns are stacked as vec(D), vec(D'), vec(D''), each row-major, so the
// solution space lives in Q^{3n²}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "triaco/algebra.hpp"

namespace triaco {

struct DerivationTriple {
  Matrix d;
  Matrix dp;
  Matrix dpp;

  Vector to_vector() const;
  static DerivationTriple from_vector(std::size_t n, const Vector& v);

  friend bool operator==(const DerivationTriple&, const DerivationTriple&) = default;
};

ViolationReport check_derivation(const Trialgebra& t, const DerivationTriple& triple);

/// The full linear system (rows: commutations then Leibniz identities).
Matrix derivation_constraints(const Trialgebra& t);

struct SolutionFamily {
  Subspace space;
  /// Free parameters, named d_{rc}, d'_{rc}, d''_{rc} (1-based).
  std::vector<std::string> parameters;
  /// One basis vector per parameter: that parameter 1, the others 0.
  std::vector<Vector> basis;

  /// The three matrices with entries written in the parameters.
  std::string pretty() const;
};

/// Eliminates D'' first, then D', then D, so free parameters fall on D
/// where possible.
SolutionFamily solve_derivations(const Trialgebra& t);

struct CompanionSolution {
  /// Some (D', D'') completing D, if any exists.
  std::optional<DerivationTriple> particular;
  /// (vec D', vec D'') solving the homogeneous system, in Q^{2n²}.
  Subspace homogeneous;
};

/// All (D', D'') for a fixed D. Throws DNotCommuting unless D commutes with
/// α and β.
CompanionSolution solve_companions(const Trialgebra& t, const Matrix& d);

}  // namespace triaco
