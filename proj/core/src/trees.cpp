#include "triaco/trees.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "triaco/error.hpp"

namespace triaco {

bool operator==(const PlanarTree& a, const PlanarTree& b) {
  return a.leaves_ == b.leaves_ && a.children_ == b.children_;
}

std::string PlanarTree::serialize() const {
  if (is_leaf()) return "*";
  std::string s = "(";
  for (const auto& c : children_) s += c.serialize();
  s += ')';
  return s;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlanarTree parse() {
    PlanarTree t = tree();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters after tree");
    return t;
  }

 private:
  PlanarTree tree() {
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of tree");
    if (text_[pos_] == '*') {
      ++pos_;
      return PlanarTree::leaf();
    }
    if (text_[pos_] != '(') throw ParseError(pos_, "expected '*' or '('");
    const std::size_t open = pos_++;
    std::vector<PlanarTree> parts;
    while (pos_ < text_.size() && text_[pos_] != ')') parts.push_back(tree());
    if (pos_ >= text_.size()) throw ParseError(pos_, "unclosed '('");
    if (parts.size() < 2) throw ParseError(open, "internal vertex needs at least two children");
    ++pos_;
    return graft(std::move(parts));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlanarTree PlanarTree::parse(std::string_view text) { return TreeParser(text).parse(); }

PlanarTree graft(std::vector<PlanarTree> parts) {
  if (parts.size() < 2) throw Error(Errc::TooFewParts, "grafting needs at least two trees");
  PlanarTree t;
  t.leaves_ = 0;
  for (const auto& p : parts) t.leaves_ += p.leaf_count();
  t.children_ = std::move(parts);
  return t;
}

std::vector<PlanarTree> decompose(const PlanarTree& tree) {
  if (tree.is_leaf()) throw Error(Errc::LeafHasNoDecomposition, "a single leaf is not a grafting");
  return tree.children();
}

namespace {

constexpr std::size_t kDone = static_cast<std::size_t>(-1);

// Returns nullopt when the subtree was exactly the removed leaf.
std::optional<PlanarTree> remove_leaf(const PlanarTree& t, std::size_t& remaining) {
  if (t.is_leaf()) {
    if (remaining == kDone) return t;
    if (remaining == 0) {
      remaining = kDone;
      return std::nullopt;
    }
    --remaining;
    return t;
  }
  std::vector<PlanarTree> kept;
  for (const auto& c : t.children()) {
    if (auto r = remove_leaf(c, remaining)) kept.push_back(std::move(*r));
  }
  if (kept.size() == 1) return std::move(kept.front());
  return graft(std::move(kept));
}

}  // namespace

PlanarTree delete_leaf(const PlanarTree& tree, std::size_t i) {
  if (tree.is_leaf()) throw Error(Errc::CannotDeleteFromSingleLeaf, "cannot delete the only leaf");
  if (i > tree.degree())
    throw Error(Errc::IndexOutOfRange, "leaf " + std::to_string(i) + " of a tree with " +
                                           std::to_string(tree.leaf_count()) + " leaves");
  std::size_t remaining = i;
  return *remove_leaf(tree, remaining);
}

namespace {

void trees_with_leaves(std::size_t leaves, std::map<std::size_t, std::vector<PlanarTree>>& memo);

// Every ordered way to fill `sizes` (leaf counts per part) with trees.
void fill_parts(const std::vector<std::size_t>& sizes, std::size_t at, std::vector<PlanarTree>& current,
                std::map<std::size_t, std::vector<PlanarTree>>& memo, std::vector<PlanarTree>& out) {
  if (at == sizes.size()) {
    out.push_back(graft(current));
    return;
  }
  trees_with_leaves(sizes[at], memo);
  for (const auto& t : memo.at(sizes[at])) {
    current.push_back(t);
    fill_parts(sizes, at + 1, current, memo, out);
    current.pop_back();
  }
}

void compositions(std::size_t total, std::vector<std::size_t>& parts,
                  std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    if (parts.size() >= 2) out.push_back(parts);
    return;
  }
  for (std::size_t first = 1; first <= total; ++first) {
    parts.push_back(first);
    compositions(total - first, parts, out);
    parts.pop_back();
  }
}

void trees_with_leaves(std::size_t leaves, std::map<std::size_t, std::vector<PlanarTree>>& memo) {
  if (memo.contains(leaves)) return;
  std::vector<PlanarTree> out;
  if (leaves == 1) {
    out.push_back(PlanarTree::leaf());
  } else {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> scratch;
    compositions(leaves, scratch, comps);
    for (const auto& sizes : comps) {
      std::vector<PlanarTree> current;
      fill_parts(sizes, 0, current, memo, out);
    }
  }
  std::vector<std::pair<std::string, PlanarTree>> keyed;
  keyed.reserve(out.size());
  for (auto& t : out) keyed.emplace_back(t.serialize(), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PlanarTree> sorted;
  sorted.reserve(keyed.size());
  for (auto& [s, t] : keyed) sorted.push_back(std::move(t));
  memo.emplace(leaves, std::move(sorted));
}

struct TreeCache {
  std::mutex mutex;
  std::map<std::size_t, std::vector<PlanarTree>> by_leaves;
  std::map<std::size_t, std::unordered_map<std::string, std::size_t>> index;
};

TreeCache& cache() {
  static TreeCache c;
  return c;
}

}  // namespace

const std::vector<PlanarTree>& enumerate_trees(std::size_t n) {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  trees_with_leaves(n + 1, c.by_leaves);
  return c.by_leaves.at(n + 1);
}

std::size_t tree_index(const PlanarTree& tree) {
  const auto& list = enumerate_trees(tree.degree());
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  auto& idx = c.index[tree.degree()];
  if (idx.empty()) {
    for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(list[i].serialize(), i);
  }
  return idx.at(tree.serialize());
}

std::vector<TreeConvention> candidate_conventions() {
  std::vector<TreeConvention> out;
  for (Op orient : {Op::Left, Op::Right}) {
    std::array<Op, 3> perm{Op::Left, Op::Right, Op::Middle};
    do {
      out.push_back({orient, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::string to_string(const TreeConvention& c) {
  const auto& t2 = enumerate_trees(2);
  std::string s = "leftmost-child=" + std::string(op_name(c.leftmost_child));
  for (std::size_t t = 0; t < 3; ++t) s += " " + t2[t].serialize() + "=" + std::string(op_name(c.degree_two[t]));
  return s;
}

namespace {

// Parent vertex of leaf i, and the leaf's position among its siblings.
struct LeafSite {
  std::size_t position = 0;
  std::size_t siblings = 0;
};

bool locate_leaf(const PlanarTree& t, std::size_t& remaining, LeafSite& site) {
  for (std::size_t c = 0; c < t.children().size(); ++c) {
    const auto& child = t.children()[c];
    if (child.is_leaf()) {
      if (remaining == 0) {
        site = {c, t.children().size()};
        return true;
      }
      --remaining;
    } else if (locate_leaf(child, remaining, site)) {
      return true;
    }
  }
  return false;
}

Op other_side(Op op) { return op == Op::Left ? Op::Right : Op::Left; }

}  // namespace

Op op_label(const PlanarTree& tree, std::size_t i, const TreeConvention& convention) {
  if (tree.is_leaf()) throw Error(Errc::CannotDeleteFromSingleLeaf, "operation labels need degree >= 1");
  const std::size_t n1 = tree.degree();
  if (i > n1) throw Error(Errc::IndexOutOfRange, "label position " + std::to_string(i));

  const auto& parts = tree.children();
  const std::size_t k = parts.size() - 1;
  if (i == 0) {
    if (parts.front().degree() > 0) return Op::Right;
    return k == 1 ? Op::Left : Op::Middle;
  }
  if (i == n1) {
    if (parts.back().degree() > 0) return Op::Left;
    return k == 1 ? Op::Right : Op::Middle;
  }
  std::size_t remaining = i;
  LeafSite site;
  locate_leaf(tree, remaining, site);
  if (site.position == 0) return convention.leftmost_child;
  if (site.position + 1 == site.siblings) return other_side(convention.leftmost_child);
  return Op::Middle;
}

Op degree_two_op(std::size_t t, const TreeConvention& convention) {
  if (t >= 3) throw Error(Errc::IndexOutOfRange, "there are three degree-2 trees");
  return convention.degree_two[t];
}

std::size_t degree_two_tree(Op op, const TreeConvention& convention) {
  for (std::size_t t = 0; t < 3; ++t)
    if (convention.degree_two[t] == op) return t;
  throw Error(Errc::IndexOutOfRange, "convention is not a bijection");
}

}  // namespace triaco
