#pragma once

// Planar rooted trees indexing the trialgebra cochain complexes.
//
// A tree of degree n has n+1 leaves, numbered 0..n from left to right, and
// every internal vertex has at least two children. Trees serialize as
//   tree := "*" | "(" tree tree+ ")"
// with no whitespace.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "triaco/tensor.hpp"

namespace triaco {

class PlanarTree {
 public:
  /// A single leaf.
  PlanarTree() = default;

  static PlanarTree leaf() { return {}; }

  bool is_leaf() const noexcept { return children_.empty(); }
  const std::vector<PlanarTree>& children() const noexcept { return children_; }
  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t degree() const noexcept { return leaves_ - 1; }

  std::string serialize() const;
  static PlanarTree parse(std::string_view text);

  friend bool operator==(const PlanarTree& a, const PlanarTree& b);

 private:
  friend PlanarTree graft(std::vector<PlanarTree> parts);

  std::vector<PlanarTree> children_;
  std::size_t leaves_ = 1;
};

/// Joins parts[0..k] left to right under a new root. Throws TooFewParts for
/// fewer than two parts. degree(result) = Σ degree(parts) + k.
PlanarTree graft(std::vector<PlanarTree> parts);

/// The unique parts whose grafting is ψ (the root's children).
/// Throws LeafHasNoDecomposition for a leaf.
std::vector<PlanarTree> decompose(const PlanarTree& tree);

/// Removes leaf i and contracts any vertex left with a single child.
PlanarTree delete_leaf(const PlanarTree& tree, std::size_t i);

/// All trees of degree n, sorted by serialization ('(' sorts before '*').
/// The returned list is cached and lives for the whole program.
const std::vector<PlanarTree>& enumerate_trees(std::size_t n);

/// Position of `tree` within enumerate_trees(tree.degree()).
std::size_t tree_index(const PlanarTree& tree);

/// Orientation convention for the interior operation labels and the
/// correspondence between the three degree-2 trees and the three products.
///
/// `leftmost_child` is the label of a leaf that is the leftmost child of its
/// parent; a rightmost child gets the other one of {Left, Right}, and any
/// other child is Middle. `degree_two[t]` is the product attached to
/// enumerate_trees(2)[t].
struct TreeConvention {
  Op leftmost_child = Op::Left;
  std::array<Op, 3> degree_two{Op::Right, Op::Left, Op::Middle};

  friend bool operator==(const TreeConvention&, const TreeConvention&) = default;
};

/// The convention under which the degree-2 trivial-coefficient cocycles of
/// the tree complex are exactly the eleven cocycle identities:
///   ((**)*) ↔ ⊢,  (*(**)) ↔ ⊣,  (***) ↔ ⊥,
/// and a leftmost child is left-oriented (⊣). tests/ re-derives it by
/// searching all 12 candidates.
inline constexpr TreeConvention kCalibratedConvention{};

/// The 2 orientation choices × 6 bijections, calibrated one included.
std::vector<TreeConvention> candidate_conventions();

std::string to_string(const TreeConvention& c);

/// The operation label ∘_i of a tree ψ of degree ≥ 1, for 0 ≤ i ≤ degree(ψ).
/// Positions 0 and degree(ψ) follow the grafting case tables; interior
/// positions use leaf orientation under `convention`.
Op op_label(const PlanarTree& tree, std::size_t i,
            const TreeConvention& convention = kCalibratedConvention);

/// Product attached to enumerate_trees(2)[t], and its inverse.
Op degree_two_op(std::size_t t, const TreeConvention& convention = kCalibratedConvention);
std::size_t degree_two_tree(Op op, const TreeConvention& convention = kCalibratedConvention);

}  // namespace triaco
