#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"

using namespace triaco;
using triaco::corpus::Rng;

namespace {

PlanarTree tree(const char* s) { return PlanarTree::parse(s); }

bool no_unary_vertices(const PlanarTree& t) {
  if (t.is_leaf()) return true;
  if (t.children().size() < 2) return false;
  for (const auto& c : t.children())
    if (!no_unary_vertices(c)) return false;
  return true;
}

PlanarTree random_tree(Rng& rng, std::size_t max_degree) {
  const auto& pool = enumerate_trees(rng.index(max_degree + 1));
  return pool[rng.index(pool.size())];
}

}  // namespace

TEST(Enumerate, DegreeZeroAndTwo) {
  ASSERT_EQ(enumerate_trees(0).size(), 1u);
  EXPECT_TRUE(enumerate_trees(0)[0].is_leaf());
  std::vector<std::string> names;
  for (const auto& t : enumerate_trees(2)) names.push_back(t.serialize());
  EXPECT_EQ(names, (std::vector<std::string>{"((**)*)", "(*(**))", "(***)"}));
}

TEST(Enumerate, CountsMatchRecurrence) {
  const std::vector<std::size_t> expected{1, 1, 3, 11, 45, 197, 903};
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(corpus::tree_count_oracle(n), expected[n]);
    EXPECT_EQ(enumerate_trees(n).size(), corpus::tree_count_oracle(n)) << "degree " << n;
  }
}

TEST(Enumerate, NoUnaryVerticesAndDistinct) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(n)) {
      EXPECT_TRUE(no_unary_vertices(t));
      EXPECT_EQ(t.degree(), n);
      seen.insert(t.serialize());
    }
    EXPECT_EQ(seen.size(), enumerate_trees(n).size());
  }
}

TEST(Graft, Examples) {
  const PlanarTree l = PlanarTree::leaf();
  EXPECT_EQ(graft({l, l}).serialize(), "(**)");
  EXPECT_EQ(graft({l, l}).degree(), 1u);
  EXPECT_EQ(graft({l, l, l}).serialize(), "(***)");
  EXPECT_EQ(graft({l, l, l}).degree(), 2u);
  EXPECT_EQ(graft({tree("(**)"), l}).serialize(), "((**)*)");
  EXPECT_EQ(graft({tree("(**)"), l}).degree(), 2u);
  try {
    graft({l});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooFewParts);
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(tree("(**)")), (std::vector<PlanarTree>{PlanarTree::leaf(), PlanarTree::leaf()}));
  EXPECT_EQ(decompose(tree("((**)*)")), (std::vector<PlanarTree>{tree("(**)"), PlanarTree::leaf()}));
  try {
    decompose(PlanarTree::leaf());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LeafHasNoDecomposition);
  }
}

TEST(Decompose, RoundTripRandom) {
  Rng rng(11);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<PlanarTree> parts;
    const std::size_t k = 2 + rng.index(3);
    for (std::size_t i = 0; i < k; ++i) parts.push_back(random_tree(rng, 2));
    const PlanarTree t = graft(parts);
    EXPECT_EQ(decompose(t), parts);
    EXPECT_EQ(graft(decompose(t)), t);
    std::size_t degree = k - 1;
    for (const auto& p : parts) degree += p.degree();
    EXPECT_EQ(t.degree(), degree);
  }
}

TEST(DeleteLeaf, Examples) {
  EXPECT_TRUE(delete_leaf(tree("(**)"), 0).is_leaf());
  EXPECT_EQ(delete_leaf(tree("((**)*)"), 1).serialize(), "(**)");
  EXPECT_EQ(delete_leaf(tree("(***)"), 1).serialize(), "(**)");
  EXPECT_EQ(delete_leaf(tree("((**)*)"), 0).serialize(), "(**)");
  EXPECT_EQ(delete_leaf(tree("((**)(**))"), 2).serialize(), "((**)*)");
}

TEST(DeleteLeaf, DropsDegreeByOne) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n))
      for (std::size_t i = 0; i <= n; ++i) {
        const PlanarTree d = delete_leaf(t, i);
        EXPECT_EQ(d.degree(), n - 1);
        EXPECT_TRUE(no_unary_vertices(d));
      }
}

TEST(DeleteLeaf, Errors) {
  try {
    delete_leaf(PlanarTree::leaf(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CannotDeleteFromSingleLeaf);
  }
  try {
    delete_leaf(tree("(**)"), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(OpLabel, Examples) {
  EXPECT_EQ(op_label(tree("(**)"), 0), Op::Left);
  EXPECT_EQ(op_label(tree("((**)*)"), 0), Op::Right);
  EXPECT_EQ(op_label(tree("(***)"), 0), Op::Middle);
  EXPECT_EQ(op_label(tree("(***)"), 1), Op::Middle);
}

TEST(OpLabel, TotalOnAllPositions) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n))
      for (std::size_t i = 0; i <= n; ++i) EXPECT_NO_THROW(op_label(t, i));
}

TEST(OpLabel, EndCasesExclusive) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const auto& parts = t.children();
      const std::size_t k = parts.size() - 1;
      const Op first = parts.front().degree() > 0 ? Op::Right : (k == 1 ? Op::Left : Op::Middle);
      const Op last = parts.back().degree() > 0 ? Op::Left : (k == 1 ? Op::Right : Op::Middle);
      EXPECT_EQ(op_label(t, 0), first);
      EXPECT_EQ(op_label(t, n), last);
    }
}

TEST(Serialize, Examples) {
  EXPECT_EQ(PlanarTree::leaf().serialize(), "*");
  EXPECT_EQ(graft({PlanarTree::leaf(), PlanarTree::leaf(), PlanarTree::leaf()}).serialize(), "(***)");
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) EXPECT_EQ(PlanarTree::parse(t.serialize()), t);
}

TEST(Serialize, ParseErrors) {
  for (const char* bad : {"", "(*", "(*)", "**", "(*x)", ")"}) {
    EXPECT_THROW(PlanarTree::parse(bad), ParseError) << bad;
  }
}

TEST(Index, MatchesEnumerationOrder) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto& ts = enumerate_trees(n);
    for (std::size_t i = 0; i < ts.size(); ++i) EXPECT_EQ(tree_index(ts[i]), i);
  }
}

TEST(Conventions, TwelveDistinctCandidates) {
  const auto cs = candidate_conventions();
  EXPECT_EQ(cs.size(), 12u);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) EXPECT_FALSE(cs[i] == cs[j]);
  EXPECT_EQ(std::count(cs.begin(), cs.end(), kCalibratedConvention), 1);
  for (std::size_t t = 0; t < 3; ++t) EXPECT_EQ(degree_two_tree(degree_two_op(t)), t);
}
