#include <gtest/gtest.h>

#include "corpus.hpp"

using namespace triaco;
using corpus::Rng;

namespace {

Trialgebra corrupted_dual() {
  Trialgebra t = corpus::dual_numbers();
  t.middle(0, 0, 1) = 1;
  return t;
}

}  // namespace

TEST(CheckAxioms, AbelianWithCommutingMaps) {
  Rng rng(21);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto [a, b] = corpus::commuting_maps(rng, n);
    EXPECT_TRUE(check_axioms(corpus::abelian_with(a, b)).ok());
  }
}

TEST(CheckAxioms, DualNumbersPass) { EXPECT_TRUE(check_axioms(corpus::dual_numbers()).ok()); }

TEST(CheckAxioms, CorruptedMiddleEntry) {
  const ViolationReport r = check_axioms(corrupted_dual());
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(r.cites_axiom(7));
  EXPECT_TRUE(r.cites_axiom(11));
  EXPECT_FALSE(r.cites_axiom(12));
  for (const auto& v : r.rows) EXPECT_EQ(v.witness, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(CheckAxioms, NonCommutingMaps) {
  const Trialgebra t = corpus::abelian_with(Matrix{{1, 1}, {0, 1}}, Matrix{{1, 0}, {1, 1}});
  const ViolationReport r = check_axioms(t);
  EXPECT_TRUE(r.cites_axiom(1));
  EXPECT_TRUE(r.cites_rule("commute(alpha,beta)"));
}

TEST(CheckAxioms, AgreesWithOracleOnRandomInstances) {
  Rng rng(22);
  int passing = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng.index(2);
    Trialgebra t = Trialgebra::abelian(n);
    for (Op op : kAllOps) t.product(op) = rng.tensor(n, n, n, 0, 1);
    if (rng.coin()) {
      const auto [a, b] = corpus::commuting_maps(rng, n);
      t = corpus::twist(t, a, b);
    }
    const bool ok = check_axioms(t).ok();
    passing += ok;
    EXPECT_EQ(ok, corpus::axioms_hold_oracle(t));
  }
  EXPECT_GT(passing, 0);
}

TEST(CheckAxioms, CollapseMatchesAssociativity) {
  Rng rng(23);
  int associative = 0;
  for (int rep = 0; rep < 150; ++rep) {
    const std::size_t n = 1 + rng.index(3);
    const Tensor3 p = rng.tensor(n, n, n, 0, 1);
    const bool assoc = corpus::associative_oracle(p);
    associative += assoc;
    EXPECT_EQ(check_axioms(from_associative(p, Matrix::identity(n), Matrix::identity(n))).ok(), assoc);
  }
  EXPECT_GT(associative, 0);
}

TEST(CheckMultiplicative, Examples) {
  EXPECT_TRUE(check_multiplicative(corpus::dual_numbers()).ok());
  EXPECT_TRUE(check_multiplicative(corpus::abelian_with(Matrix{{1, 2}, {3, 4}}, Matrix{{0, 1}, {1, 0}})).ok());
  Trialgebra d = corpus::dual_numbers();
  d.alpha = Matrix{{1, 0}, {0, 2}};
  EXPECT_TRUE(check_multiplicative(d).ok());
  d.alpha = Matrix{{2, 0}, {0, 1}};
  EXPECT_FALSE(check_multiplicative(d).ok());
}

TEST(CheckMultiplicative, AgreesWithOracle) {
  Rng rng(24);
  for (int rep = 0; rep < 100; ++rep) {
    Trialgebra t = corpus::dual_numbers();
    t.alpha = rng.matrix(2, 2, -1, 2);
    t.beta = rng.coin() ? Matrix::identity(2) : rng.matrix(2, 2, -1, 2);
    EXPECT_EQ(check_multiplicative(t).ok(), corpus::multiplicative_oracle(t));
  }
}

TEST(Corpus, EveryAlgebraIsMultiplicativeTrialgebra) {
  for (const auto& [name, t] : corpus::algebra_corpus()) {
    EXPECT_TRUE(is_multiplicative_trialgebra(t)) << name;
    EXPECT_TRUE(corpus::axioms_hold_oracle(t)) << name;
    EXPECT_TRUE(corpus::multiplicative_oracle(t)) << name;
  }
}

TEST(Homomorphism, Examples) {
  const Trialgebra d = corpus::dual_numbers();
  EXPECT_TRUE(is_homomorphism(LinearMap::identity(2), d, d).ok());
  EXPECT_TRUE(is_homomorphism(LinearMap::zero(2, 1), d, corpus::unit_field()).ok());
  EXPECT_TRUE(is_homomorphism(LinearMap(Matrix{{1, 0}, {0, 2}}), d, d).ok());
  const ViolationReport bad = is_homomorphism(LinearMap(Matrix{{2, 0}, {0, 1}}), d, d);
  EXPECT_TRUE(bad.cites_rule("homomorphism(left)"));
}

TEST(Center, Examples) {
  EXPECT_EQ(center(Trialgebra::abelian(2)), Subspace::full(2));
  EXPECT_TRUE(center(corpus::dual_numbers()).is_zero());
  EXPECT_EQ(center(corpus::abelian_extension(1, 1, 1, 1, 1)), Subspace::span(2, {Vector{0, 1}}));
}

TEST(Center, ElementsAnnihilateAndAreStable) {
  for (const auto& [name, t] : corpus::algebra_corpus()) {
    const Subspace z = center(t);
    for (const auto& v : z.basis_vectors()) {
      for (std::size_t i = 0; i < t.dim; ++i)
        for (Op op : kAllOps) {
          EXPECT_TRUE(is_zero(t.multiply(op, v, unit_vector(t.dim, i)))) << name;
          EXPECT_TRUE(is_zero(t.multiply(op, unit_vector(t.dim, i), v))) << name;
        }
      EXPECT_TRUE(z.contains(t.alpha.apply(v))) << name;
      EXPECT_TRUE(z.contains(t.beta.apply(v))) << name;
    }
    EXPECT_TRUE(is_ideal(t, z)) << name;
  }
}

TEST(Center, StabilityCutsAnnihilator) {
  // e2 annihilates everything but α moves it onto e1, which does not.
  Trialgebra t = Trialgebra::abelian(2);
  t.left(0, 0, 0) = 1;
  t.alpha = Matrix{{0, 0}, {1, 0}};
  t.beta = Matrix(2, 2);
  EXPECT_TRUE(center(t).contains(Vector{0, 1}));
  t.alpha = Matrix{{0, 1}, {0, 0}};
  EXPECT_TRUE(center(t).is_zero());
}

TEST(Ideal, Examples) {
  const Trialgebra d = corpus::dual_numbers();
  EXPECT_TRUE(is_ideal(d, Subspace(2)));
  EXPECT_TRUE(is_ideal(d, Subspace::full(2)));
  EXPECT_TRUE(is_ideal(d, Subspace::span(2, {Vector{0, 1}})));
  EXPECT_FALSE(is_ideal(d, Subspace::span(2, {Vector{1, 0}})));
}

TEST(FromAssociative, Examples) {
  const Trialgebra d = corpus::dual_numbers();
  EXPECT_EQ(from_associative(d.left, Matrix::identity(2), Matrix::identity(2)), d);
  EXPECT_EQ(from_associative(Tensor3(3, 3, 3), Matrix::identity(3), Matrix::identity(3)), Trialgebra::abelian(3));
  EXPECT_TRUE(check_axioms(corpus::unit_field()).ok());
}

TEST(Shape, Mismatch) {
  Trialgebra t = corpus::dual_numbers();
  t.alpha = Matrix::identity(3);
  try {
    check_axioms(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ShapeMismatch);
  }
}
