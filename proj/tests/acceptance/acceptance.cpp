// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"

using namespace triaco;
using corpus::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) first_failure = what;
    pass = pass && cond;
  }
};

TriBimodule triv1(const Trialgebra& t) { return trivial_module(t, 1, Matrix{{1}}, Matrix{{1}}); }

SparseMatrix columns_of(const Subspace& s) { return SparseMatrix::from_dense(s.basis()).transpose(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) m(i / cols, i % cols) = v[i];
  return m;
}

void tree_counts(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 0; n <= 5; ++n)
    o.require(enumerate_trees(n).size() == corpus::tree_count_oracle(n), "count mismatch at degree " + std::to_string(n));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 1.0, "enumeration too slow");
  o.detail << "degrees 0..5, " << secs << " s";
}

void delta_squared(Outcome& o) {
  int cases = 0;
  for (const auto& [name, t, v] : corpus::complex_corpus())
    for (std::size_t n = 1; n <= 2; ++n) {
      const SparseMatrix composite = coboundary_matrix(t, v, n + 1) * coboundary_matrix(t, v, n) * columns_of(cochain_space(t, v, n));
      o.require(composite.nonzeros() == 0, name + " degree " + std::to_string(n));
      ++cases;
    }
  o.require(cases >= 40, "too few cases");
  o.detail << cases << " compositions";
}

void calibration(Outcome& o) {
  const auto pairs = corpus::central_corpus();
  std::size_t matching = 0;
  for (const auto& c : candidate_conventions()) {
    bool all = true;
    for (const auto& [name, t, v] : pairs) all = all && tree_two_cocycles(t, v, c) == cocycle_space(t, v);
    if (all) {
      ++matching;
      o.require(c == kCalibratedConvention, "calibrated convention differs");
    }
  }
  o.require(matching == 1, "matching conventions: " + std::to_string(matching));
  for (const auto& [name, t, v] : pairs)
    o.require(cohomology_dim(t, v, 2) == second_cohomology(t, v).dim, "H2 differs on " + name);
  o.detail << pairs.size() << " pairs, convention " << to_string(kCalibratedConvention);
}

void extension_iff_cocycle(Outcome& o) {
  Rng rng(1001);
  const auto pairs = corpus::central_corpus();
  int cocycles = 0, others = 0;
  for (int rep = 0; rep < 80; ++rep) {
    const auto& [name, t, v] = pairs[rng.index(pairs.size())];
    CocycleTriple f = CocycleTriple::zero(t.dim, v.dim);
    if (rep % 2 == 0) {
      f = CocycleTriple::from_vector(t.dim, v.dim, rng.element(cocycle_space(t, v)));
    } else {
      TreeCochain c = TreeCochain::zero(2, t.dim, v.dim);
      c.values = rng.element(cochain_space(t, v, 2));
      f = cochain_to_triple(c);
    }
    const bool cocycle = is_two_cocycle(t, v, f).ok();
    const bool algebra = check_axioms(central_extension(t, v, f).total).ok();
    o.require(cocycle == algebra, name + " rep " + std::to_string(rep));
    (cocycle ? cocycles : others)++;
  }
  o.require(others > 0, "no non-cocycles sampled");
  o.detail << cocycles << " cocycles, " << others << " non-cocycles";
}

void extension_equivalence(Outcome& o) {
  Rng rng(1002);
  const auto pairs = corpus::central_corpus();
  int witnesses = 0, refusals = 0;
  for (int round = 0; round < 4; ++round)
    for (const auto& [name, t, v] : pairs) {
      const Subspace z = cocycle_space(t, v);
      const Subspace b = coboundary_space(t, v);
      const CocycleTriple f = CocycleTriple::from_vector(t.dim, v.dim, rng.element(z));
      const Vector mu_flat = rng.element(intertwiner_space(t, v));
      const LinearMap mu(unflatten(mu_flat, v.dim, t.dim));
      const CocycleTriple g = f + coboundary_of(t, v, mu);
      const auto w = are_equivalent(central_extension(t, v, f), central_extension(t, v, g));
      o.require(w && w->report.ok() && coboundary_of(t, v, w->mu) == g - f, "witness failed on " + name);
      ++witnesses;

      const Quotient h = second_cohomology(t, v);
      if (h.dim == 0) continue;
      Vector shift = h.representatives[rng.index(h.dim)];
      const Vector extra = rng.element(b);
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] += extra[i];
      const CocycleTriple g2 = f + CocycleTriple::from_vector(t.dim, v.dim, shift);
      o.require(!are_equivalent(central_extension(t, v, f), central_extension(t, v, g2)), "false witness on " + name);
      ++refusals;
    }
  o.require(witnesses >= 20 && refusals >= 10, "too few cases");
  o.detail << witnesses << " witnesses, " << refusals << " refusals";
}

void abelian_h2(Outcome& o) {
  const Trialgebra a = Trialgebra::abelian(1);
  const std::size_t direct = second_cohomology(a, triv1(a)).dim;
  const std::size_t complex = cohomology_dim(a, triv1(a), 2);
  o.require(direct == 3 && complex == 3, "got " + std::to_string(direct) + " and " + std::to_string(complex));
  o.detail << "dim 3 both ways";
}

void deformation_bridge(Outcome& o) {
  Rng rng(1003);
  int cases = 0, cocycles = 0;
  for (const auto& [name, t] : corpus::algebra_corpus()) {
    if (t.dim > 2) continue;
    const TriBimodule ad = adjoint_module(t);
    const Subspace c2 = cochain_space(t, ad, 2);
    const Subspace z2 = tree_two_cocycles(t, ad, kCalibratedConvention);
    for (int rep = 0; rep < 6; ++rep) {
      TreeCochain c = TreeCochain::zero(2, t.dim, t.dim);
      c.values = rng.element(rep % 2 == 0 ? z2 : c2);
      TruncatedDeformation d = TruncatedDeformation::trivial(t, 1);
      d.terms[1] = cochain_to_triple(c).f;
      bool order_one_clean = true;
      for (const auto& row : verify_deformation(d).rows) order_one_clean = order_one_clean && row.order != 1;
      const bool cocycle = is_infinitesimal_cocycle(d);
      o.require(order_one_clean == cocycle, name + " rep " + std::to_string(rep));
      cocycles += cocycle;
      ++cases;
    }
  }
  for (const auto& [name, t] : corpus::algebra_corpus()) {
    const LinearMap phi(rng.invertible(t.dim));
    const Trialgebra pushed = pushforward(t, phi);
    o.require(check_axioms(pushed).ok() && is_multiplicative_trialgebra(pushed), "pushforward broke " + name);
    o.require(pullback(pushed, phi) == t, "pullback round trip failed on " + name);
    o.require(check_axioms(pullback(t, phi)).ok(), "pullback broke " + name);
  }
  o.require(cases >= 50, "too few cases");
  o.detail << cases << " bridge cases (" << cocycles << " cocycles), transport on corpus";
}

void derivations(Outcome& o) {
  Rng rng(1004);
  int checked = 0;
  for (const auto& [name, t] : corpus::algebra_corpus()) {
    const SolutionFamily fam = solve_derivations(t);
    o.require(fam.space == corpus::derivation_space_oracle(t), "family differs on " + name);
    for (const auto& v : fam.basis) o.require(check_derivation(t, DerivationTriple::from_vector(t.dim, v)).ok(), "unsound basis on " + name);
    const DerivationTriple tr = DerivationTriple::from_vector(t.dim, rng.element(fam.space));
    const CompanionSolution s = solve_companions(t, tr.d);
    o.require(s.particular && check_derivation(t, *s.particular).ok() && s.particular->d == tr.d, "companions failed on " + name);
    ++checked;
  }
  const Trialgebra d = corpus::dual_numbers();
  std::vector<Vector> diagonal;
  for (std::size_t i = 0; i < 4; ++i) {
    Vector v = zero_vector(12);
    v[i] = v[4 + i] = v[8 + i] = 1;
    diagonal.push_back(v);
  }
  o.require(solve_derivations(d).space.intersect(Subspace::span(12, diagonal)).dim() == 1, "dual-number slice");
  for (std::size_t n = 1; n <= 3; ++n) {
    const CompanionSolution s = solve_companions(Trialgebra::abelian(n), Matrix(n, n));
    o.require(s.particular && s.homogeneous.dim() == 2 * n * n, "abelian companions n=" + std::to_string(n));
  }
  o.detail << checked << " algebras";
}

void semidirect(Outcome& o) {
  Rng rng(1005);
  int valid = 0, corrupted = 0;
  auto judge = [&](const Trialgebra& t, const TriBimodule& v, const std::string& name) {
    const bool module_ok = check_module_axioms(t, v).ok();
    o.require(module_ok == is_multiplicative_trialgebra(semidirect_product_unchecked(t, v)), name);
    (module_ok ? valid : corrupted)++;
  };
  for (const auto& [name, t, v] : corpus::complex_corpus()) judge(t, v, name);
  for (const auto& [name, t] : corpus::algebra_corpus())
    for (int rep = 0; rep < 3; ++rep) {
      TriBimodule v = adjoint_module(t);
      const std::size_t op = rng.index(3);
      Tensor3& target = rng.coin() ? v.lact[op] : v.ract[op];
      target.data()[rng.index(target.data().size())] += rng.nonzero();
      judge(t, v, name + " corrupted");
    }
  o.require(valid >= 20 && corrupted >= 20, "too few cases");
  o.detail << valid << " modules, " << corrupted << " non-modules";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"tree enumeration counts", tree_counts},
      {"tree coboundary squares to zero", delta_squared},
      {"unique calibrated tree convention", calibration},
      {"extension is a trialgebra iff cocycle", extension_iff_cocycle},
      {"extension equivalence witnesses", extension_equivalence},
      {"abelian second cohomology", abelian_h2},
      {"deformation bridge and transport", deformation_bridge},
      {"generalized derivations", derivations},
      {"semidirect product iff module", semidirect},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << i + 1 << ' ' << criteria[i].first << " (" << o.detail.str() << ")";
    if (!o.pass) std::cout << " first failure: " << o.first_failure;
    std::cout << '\n';
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
