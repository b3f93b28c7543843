#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace triaco;
using corpus::Rng;

namespace {

TriBimodule triv1(const Trialgebra& t) { return trivial_module(t, 1, Matrix{{1}}, Matrix{{1}}); }

SparseMatrix columns_of(const Subspace& s) { return SparseMatrix::from_dense(s.basis()).transpose(); }

TreeCochain random_cochain(Rng& rng, const Trialgebra& t, const TriBimodule& v, std::size_t n) {
  TreeCochain f = TreeCochain::zero(n, t.dim, v.dim);
  f.values = rng.element(cochain_space(t, v, n));
  return f;
}

bool collapsed(const Trialgebra& t) { return t.left == t.right && t.left == t.middle; }

}  // namespace

TEST(CochainSpace, Examples) {
  const Trialgebra a = Trialgebra::abelian(1);
  EXPECT_EQ(cochain_space(a, triv1(a), 2).dim(), 3u);
  const Trialgebra a2 = corpus::abelian_with(Matrix{{2}}, Matrix{{1}});
  EXPECT_EQ(cochain_space(a2, triv1(a2), 1).dim(), 0u);
  EXPECT_EQ(cochain_ambient_dim(3, 2, 1), 88u);
}

TEST(CochainSpace, BlockRepeatedPerTree) {
  for (const auto& [name, t, v] : corpus::complex_corpus())
    for (std::size_t n = 1; n <= 3; ++n)
      EXPECT_EQ(cochain_space(t, v, n).dim(), enumerate_trees(n).size() * equivariant_block(t, v, n).dim()) << name;
}

TEST(DeltaBht, ZeroAndAbelianTrivial) {
  const Trialgebra d = corpus::dual_numbers();
  for (std::size_t n = 1; n <= 2; ++n) {
    const TreeCochain out = delta_bht(d, adjoint_module(d), TreeCochain::zero(n, 2, 2));
    EXPECT_TRUE(is_zero(out.values));
    EXPECT_EQ(out.degree, n + 1);
  }
  const Trialgebra a = Trialgebra::abelian(2);
  EXPECT_EQ(coboundary_matrix(a, triv1(a), 1).nonzeros(), 0u);
}

TEST(DeltaBht, SquaresToZero) {
  for (const auto& [name, t, v] : corpus::complex_corpus())
    for (std::size_t n = 1; n <= 2; ++n) {
      const SparseMatrix composite = coboundary_matrix(t, v, n + 1) * coboundary_matrix(t, v, n) * columns_of(cochain_space(t, v, n));
      EXPECT_EQ(composite.nonzeros(), 0u) << name << " n=" << n;
    }
}

TEST(DeltaBht, PreservesEquivariance) {
  Rng rng(51);
  for (const auto& [name, t, v] : corpus::complex_corpus())
    for (std::size_t n = 1; n <= 2; ++n) {
      const TreeCochain out = delta_bht(t, v, random_cochain(rng, t, v, n));
      EXPECT_TRUE(is_equivariant(t, v, out)) << name;
      EXPECT_TRUE(cochain_space(t, v, n + 1).contains(out.values)) << name;
    }
}

TEST(DeltaBht, RejectsNonEquivariant) {
  const Trialgebra t = corpus::abelian_with(Matrix{{2}}, Matrix{{1}});
  TreeCochain f = TreeCochain::zero(1, 1, 1);
  f.values[0] = 1;
  try {
    delta_bht(t, triv1(t), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotEquivariant);
  }
}

TEST(DeltaBht, DegreeGuard) {
  const Trialgebra a = Trialgebra::abelian(1);
  try {
    coboundary_matrix(a, triv1(a), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeTooHigh);
  }
  HochschildOptions opts;
  opts.max_degree = 5;
  EXPECT_EQ(coboundary_matrix(a, triv1(a), 5, opts).cols(), 197u);
}

TEST(DeltaTrias, MatchesBhtOnClassicalInstances) {
  Rng rng(52);
  std::vector<corpus::Pair> classical;
  for (const auto& [name, t] : corpus::algebra_corpus())
    if (t.alpha.is_identity() && t.beta.is_identity() && t.dim <= 2) {
      classical.push_back({name + "/adjoint", t, adjoint_module(t)});
      classical.push_back({name + "/triv1", t, triv1(t)});
    }
  int cases = 0;
  for (int rep = 0; rep < 2; ++rep)
    for (const auto& [name, t, v] : classical)
      for (std::size_t n = 1; n <= 2; ++n) {
        const TreeCochain f = random_cochain(rng, t, v, n);
        EXPECT_EQ(delta_trias(t, v, f).values, delta_bht(t, v, f).values) << name << " n=" << n;
        ++cases;
      }
  EXPECT_GE(cases, 20);
  const Trialgebra d = corpus::dual_numbers();
  EXPECT_TRUE(is_zero(delta_trias(d, triv1(d), TreeCochain::zero(1, 2, 1)).values));
}

TEST(DeltaTrias, RejectsTwistedMaps) {
  const Trialgebra t = corpus::abelian_with(Matrix{{2}}, Matrix{{1}});
  try {
    delta_trias(t, trivial_module(t, 1, Matrix{{2}}, Matrix{{1}}), TreeCochain::zero(1, 1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotClassical);
  }
}

TEST(DeltaBha, ZeroAndSelfFormula) {
  const Trialgebra d = corpus::dual_numbers();
  const TriBimodule ad = adjoint_module(d);
  Rng rng(53);
  for (std::size_t n = 1; n <= 2; ++n) {
    EXPECT_TRUE(is_zero(delta_bha(d, ad, PlainCochain::zero(n, 2, 2)).values));
    for (int rep = 0; rep < 5; ++rep) {
      PlainCochain g = PlainCochain::zero(n, 2, 2);
      g.values = rng.vector(g.values.size());
      EXPECT_EQ(delta_bha(d, ad, g), delta_bha_self(d, g)) << "n=" << n;
    }
  }
}

TEST(DeltaBha, SquaresToZeroOnDualNumbers) {
  const Trialgebra d = corpus::dual_numbers();
  const TriBimodule ad = adjoint_module(d);
  for (std::size_t n = 1; n <= 2; ++n)
    EXPECT_TRUE((bha_coboundary_matrix(d, ad, n + 1) * bha_coboundary_matrix(d, ad, n)).is_zero());
}

TEST(DeltaBha, TreeConstantCochainsCollapse) {
  Rng rng(54);
  for (const auto& [name, t] : corpus::algebra_corpus()) {
    if (!collapsed(t) || t.dim > 2) continue;
    for (const TriBimodule& v : {adjoint_module(t), triv1(t)})
      for (std::size_t n = 1; n <= 2; ++n) {
        PlainCochain g = PlainCochain::zero(n, t.dim, v.dim);
        g.values = rng.element(equivariant_block(t, v, n));
        TreeCochain f = TreeCochain::zero(n, t.dim, v.dim);
        const std::size_t block = f.block_size();
        for (std::size_t tr = 0; tr < enumerate_trees(n).size(); ++tr)
          std::copy(g.values.begin(), g.values.end(), f.values.begin() + static_cast<std::ptrdiff_t>(tr * block));
        const TreeCochain df = delta_bht(t, v, f);
        const PlainCochain dg = delta_bha(t, v, g);
        for (std::size_t tr = 0; tr < enumerate_trees(n + 1).size(); ++tr)
          EXPECT_EQ(df.component(tr), dg) << name << " n=" << n << " tree " << tr;
      }
  }
}

TEST(DeltaBha, RejectsUncollapsed) {
  const Trialgebra c = corpus::algebra_c();
  try {
    delta_bha_self(c, PlainCochain::zero(1, 2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCollapsed);
  }
}

TEST(Calibration, ExactlyOneConventionMatchesCocycleSpace) {
  const auto pairs = corpus::central_corpus();
  std::vector<TreeConvention> matching;
  for (const auto& c : candidate_conventions()) {
    bool all = true;
    for (const auto& [name, t, v] : pairs)
      if (tree_two_cocycles(t, v, c) != cocycle_space(t, v)) {
        all = false;
        break;
      }
    if (all) matching.push_back(c);
  }
  ASSERT_EQ(matching.size(), 1u);
  EXPECT_EQ(matching.front(), kCalibratedConvention);
}

TEST(Calibration, SecondCohomologyAgrees) {
  for (const auto& [name, t, v] : corpus::central_corpus())
    EXPECT_EQ(cohomology_dim(t, v, 2), second_cohomology(t, v).dim) << name;
}

TEST(Cohomology, AbelianTrivialValues) {
  const Trialgebra a = Trialgebra::abelian(1);
  EXPECT_EQ(cohomology_dim(a, triv1(a), 2), 3u);
  const auto rows = cohomology_table(a, triv1(a), 3);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.coboundary_rank, 0u);
    EXPECT_EQ(r.cohomology_dim, r.cochain_dim);
  }
  EXPECT_EQ(to_tsv(rows).substr(0, 32), "degree\tdim_C\trank_delta\tdim_H\n1\t");
}

TEST(Cohomology, RankFormula) {
  for (const auto& [name, t, v] : corpus::complex_corpus()) {
    const auto rows = cohomology_table(t, v, 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t prev = i == 0 ? 0 : rows[i - 1].coboundary_rank;
      EXPECT_EQ(rows[i].cohomology_dim + rows[i].coboundary_rank + prev, rows[i].cochain_dim) << name;
    }
  }
}

TEST(Translation, TripleRoundTrip) {
  Rng rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    const CocycleTriple f = CocycleTriple::from_vector(2, 1, rng.vector(12));
    EXPECT_EQ(cochain_to_triple(triple_to_cochain(f)), f);
  }
}
