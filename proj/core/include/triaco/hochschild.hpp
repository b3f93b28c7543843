#pragma once

// The tree-indexed cochain complex C^n(T, V) and its coboundary δ_BHT, with
// the two specializations: plain BiHom-associative cochains (δ_BHA) and the
// classical trialgebra complex (all structure maps the identity).
//
// Coordinates. A multi-index (x1, ..., xn) over a space of dimension N is
// encoded base N with x1 most significant. A plain n-cochain stores
// f(x1..xn)_k at multi·m + k; a tree cochain stores f(ψ; x1..xn)_k at
// (tree·N^n + multi)·m + k, trees in enumerate_trees(n) order.

#include <cstddef>
#include <string>
#include <vector>

#include "triaco/algebra.hpp"
#include "triaco/bimodule.hpp"
#include "triaco/coho2.hpp"
#include "triaco/trees.hpp"

namespace triaco {

inline constexpr std::size_t kDefaultMaxDegree = 4;

struct HochschildOptions {
  /// δ^n and H^n are refused for n above this (DegreeTooHigh).
  std::size_t max_degree = kDefaultMaxDegree;
  TreeConvention convention = kCalibratedConvention;
};

/// N^n.
std::size_t power_of(std::size_t base, std::size_t n);

struct PlainCochain {
  std::size_t degree = 0;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  Vector values;

  static PlainCochain zero(std::size_t degree, std::size_t input_dim, std::size_t output_dim);

  Scalar& at(const std::vector<std::size_t>& args, std::size_t k);
  const Scalar& at(const std::vector<std::size_t>& args, std::size_t k) const;

  friend bool operator==(const PlainCochain&, const PlainCochain&) = default;
};

/// Multilinear evaluation of f on arbitrary coordinate vectors.
Vector evaluate(const PlainCochain& f, const std::vector<Vector>& args);

struct TreeCochain {
  std::size_t degree = 0;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  Vector values;

  static TreeCochain zero(std::size_t degree, std::size_t input_dim, std::size_t output_dim);

  /// Entries per tree: input_dim^degree · output_dim.
  std::size_t block_size() const { return power_of(input_dim, degree) * output_dim; }

  Scalar& at(std::size_t tree, const std::vector<std::size_t>& args, std::size_t k);
  const Scalar& at(std::size_t tree, const std::vector<std::size_t>& args, std::size_t k) const;

  /// The coefficient array of one tree as a plain cochain.
  PlainCochain component(std::size_t tree) const;

  friend bool operator==(const TreeCochain&, const TreeCochain&) = default;
};

/// |𝒯_n| · dimT^n · dimV.
std::size_t cochain_ambient_dim(std::size_t n, std::size_t t_dim, std::size_t v_dim);

/// Plain n-cochains T^⊗n → V with αV∘f = f∘α^⊗n and βV∘f = f∘β^⊗n.
Subspace equivariant_block(const Trialgebra& t, const TriBimodule& v, std::size_t n);

/// C^n(T, V): the equivariant block repeated for every tree of 𝒯_n.
Subspace cochain_space(const Trialgebra& t, const TriBimodule& v, std::size_t n);

bool is_equivariant(const Trialgebra& t, const TriBimodule& v, const TreeCochain& f);
bool is_equivariant(const Trialgebra& t, const TriBimodule& v, const PlainCochain& f);

/// δ^n_BHT on the ambient tree-indexed arrays (rows: degree n+1 entries,
/// columns: degree n entries). Throws DegreeTooHigh above opts.max_degree.
SparseMatrix coboundary_matrix(const Trialgebra& t, const TriBimodule& v, std::size_t n,
                               const HochschildOptions& opts = {});

/// δ_BHT f. Throws NotEquivariant if f ∉ C^n and EquivarianceBroken if the
/// result is not in C^{n+1}.
TreeCochain delta_bht(const Trialgebra& t, const TriBimodule& v, const TreeCochain& f,
                      const HochschildOptions& opts = {});

/// δ_BHT when α, β, αV, βV are all the identity (NotClassical otherwise).
TreeCochain delta_trias(const Trialgebra& t, const TriBimodule& v, const TreeCochain& f,
                        const HochschildOptions& opts = {});

/// The plain coboundary with self coefficients, evaluated directly:
///   α^{n-1}(x1) f(x2..) + Σ (-1)^i f(αx1.., xi xi+1, βxi+2..) + (-1)^{n+1} f(x1..xn) β^{n-1}(xn+1).
/// Requires ⊣ = ⊢ = ⊥ (NotCollapsed).
PlainCochain delta_bha_self(const Trialgebra& a, const PlainCochain& f);

/// Bimodule coefficients via the semidirect product: extend g to
/// g~(x+u, ...) = (0, g(x, ...)) on T ⊕ M, apply delta_bha_self there and
/// restrict to T inputs and M outputs. A and M must both be collapsed.
PlainCochain delta_bha(const Trialgebra& a, const TriBimodule& m, const PlainCochain& g);

/// delta_bha on every unit cochain (columns), without the equivariance check.
Matrix bha_coboundary_matrix(const Trialgebra& a, const TriBimodule& m, std::size_t n);

struct CohomologyRow {
  std::size_t degree = 0;
  std::size_t cochain_dim = 0;
  /// rank of δ^n restricted to C^n.
  std::size_t coboundary_rank = 0;
  std::size_t cohomology_dim = 0;
};

/// Rank of δ^n on C^n.
std::size_t coboundary_rank(const Trialgebra& t, const TriBimodule& v, std::size_t n,
                            const HochschildOptions& opts = {});

/// dim ker(δ^n|C^n) − rank(δ^{n-1}|C^{n-1}), with C^0 = 0.
std::size_t cohomology_dim(const Trialgebra& t, const TriBimodule& v, std::size_t n,
                           const HochschildOptions& opts = {});

/// Rows for degrees 1..max_n.
std::vector<CohomologyRow> cohomology_table(const Trialgebra& t, const TriBimodule& v, std::size_t max_n,
                                            const HochschildOptions& opts = {});

/// Columns: degree, dim C^n, rank δ^n, dim H^n.
std::string to_tsv(const std::vector<CohomologyRow>& rows);

/// Degree-2 tree cochain whose tree t carries f[degree_two_op(t)].
TreeCochain triple_to_cochain(const CocycleTriple& f, const TreeConvention& convention = kCalibratedConvention);
CocycleTriple cochain_to_triple(const TreeCochain& f, const TreeConvention& convention = kCalibratedConvention);

/// ker(δ²|C²) translated to CocycleTriple coordinates.
Subspace tree_two_cocycles(const Trialgebra& t, const TriBimodule& v, const TreeConvention& convention);

}  // namespace triaco
