#include <gtest/gtest.h>

#include "support.hpp"
#include "tauhh/bimodule.hpp"
#include "tauhh/errors.hpp"
#include "tauhh/hochschild.hpp"
#include "tauhh/resolution.hpp"

namespace tauhh {
namespace {

std::vector<std::string> test_files() {
  return {"no_go_further.quiver", "lambda_q2.quiver", "tau_not_derived.quiver",
          "tau_not_derived_prime.quiver", "aba.quiver", "one_loop_rsq.quiver",
          "kronecker.quiver", "two_cycle_rsq.quiver"};
}

void expect_complexes(const FDAlgebra& a, const Bimodule& x, std::size_t top) {
  BarComplex bar(a, x);
  for (std::size_t n = 1; n < top; ++n) {
    SparseMatrix d1 = bar.cochain_differential(n), d2 = bar.cochain_differential(n + 1);
    EXPECT_TRUE(multiply(d2, d1).is_zero()) << "cochains, degree " << n;
    SparseMatrix c1 = bar.chain_differential(n), c2 = bar.chain_differential(n + 1);
    EXPECT_TRUE(multiply(c1, c2).is_zero()) << "chains, degree " << n;
  }
}

TEST(Hochschild, DifferentialsSquareToZero) {
  for (const auto& f : test_files()) {
    SCOPED_TRACE(f);
    FDAlgebra a = test::load_algebra(f);
    Bimodule x = regular_bimodule(a);
    expect_complexes(a, x, 4);
    expect_complexes(a, dual_bimodule(x), 4);
  }
  PresentationFile f = load_presentation(test::data_path("two_cycle_bimodule.quiver"));
  FDAlgebra a = build_algebra(f.presentation);
  expect_complexes(a, *f.bimodule, 5);
}

TEST(Hochschild, LambdaQ) {
  FDAlgebra a = test::load_algebra("lambda_q2.quiver");
  HochschildDims d = hh_dims(a, regular_bimodule(a), 6);
  EXPECT_EQ(d.cohomology, (std::vector<std::size_t>{2, 2, 1, 0, 0, 0, 0}));
  DegreeZeroChecks c = hh0_crosschecks(a, d);
  EXPECT_EQ(c.center, 2u);
  EXPECT_EQ(c.trace_space, d.homology[0]);
}

TEST(Hochschild, NoGoFurtherHomologyVanishes) {
  FDAlgebra a = test::load_algebra("no_go_further.quiver");
  HochschildDims d = hh_dims(a, regular_bimodule(a), 6);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(d.homology[n], 0u) << n;
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(d.cohomology[n], 0u) << n;
}

TEST(Hochschild, SemisimpleAlgebra) {
  FDAlgebra a = test::algebra_from("vertex x\nvertex y\nvertex z\n");
  HochschildDims d = hh_dims(a, regular_bimodule(a), 3);
  EXPECT_EQ(d.cohomology, (std::vector<std::size_t>{3, 0, 0, 0}));
  EXPECT_EQ(d.homology, (std::vector<std::size_t>{3, 0, 0, 0}));
}

TEST(Hochschild, DegreeZeroCrosschecks) {
  for (const auto& f : test_files()) {
    SCOPED_TRACE(f);
    FDAlgebra a = test::load_algebra(f);
    HochschildDims d = hh_dims(a, regular_bimodule(a), 1);
    DegreeZeroChecks c = hh0_crosschecks(a, d);
    EXPECT_EQ(c.center, d.cohomology[0]);
    EXPECT_EQ(c.trace_space, d.homology[0]);
    HochschildDims wrong = d;
    ++wrong.cohomology[0];
    EXPECT_THROW(hh0_crosschecks(a, wrong), InternalError);
  }
}

TEST(Hochschild, TauNotDerivedDegreeZero) {
  // Hand count: the vertices plus one class for all the nonzero 2-cycles
  // (resp. 3-cycles), which commutators identify.
  for (const char* f : {"tau_not_derived.quiver", "tau_not_derived_prime.quiver"}) {
    FDAlgebra a = test::load_algebra(f);
    HochschildDims d = hh_dims(a, regular_bimodule(a), 0);
    EXPECT_EQ(d.cohomology[0], 3u) << f;
    EXPECT_EQ(d.homology[0], 4u) << f;
    EXPECT_EQ(trace_space_dim(a), 4u) << f;
  }
}

TEST(Hochschild, FiniteGlobalDimensionVanishing) {
  std::vector<FDAlgebra> algebras;
  for (const char* f : {"no_go_further.quiver", "kronecker.quiver"}) {
    algebras.push_back(test::load_algebra(f));
  }
  std::mt19937_64 rng(test::seed() + 40);
  for (int t = 0; t < 30 && algebras.size() < 10; ++t) {
    auto a = test::random_monomial_algebra(rng, 3, 4, Field(), 3);
    if (a && a->dim() <= 14 && global_dimension(*a, 5).exact) algebras.push_back(std::move(*a));
  }
  for (const FDAlgebra& a : algebras) {
    GlobalDimension g = global_dimension(a, 5);
    ASSERT_TRUE(g.exact);
    Bimodule x = regular_bimodule(a);
    std::size_t top = std::min<std::size_t>(g.value + 2, 5);
    for (const Bimodule& coeff : {x, dual_bimodule(x)}) {
      HochschildDims d = hh_dims(a, coeff, top);
      for (std::size_t n = g.value + 1; n <= top; ++n) {
        EXPECT_EQ(d.cohomology[n], 0u);
        EXPECT_EQ(d.homology[n], 0u);
      }
    }
  }
}

TEST(Hochschild, HomologyIsDualToCohomologyWithDualCoefficients) {
  for (const auto& f : test_files()) {
    SCOPED_TRACE(f);
    FDAlgebra a = test::load_algebra(f);
    Bimodule x = regular_bimodule(a);
    HochschildDims direct = hh_dims(a, x, 3);
    HochschildDims dual = hh_dims(a, dual_bimodule(x), 3);
    EXPECT_EQ(direct.homology, dual.cohomology);
    EXPECT_EQ(direct.cohomology, dual.homology);
  }
  PresentationFile f = load_presentation(test::data_path("two_cycle_bimodule.quiver"));
  FDAlgebra a = build_algebra(f.presentation);
  EXPECT_EQ(hh_dims(a, *f.bimodule, 4).homology,
            hh_dims(a, dual_bimodule(*f.bimodule), 4).cohomology);
}

TEST(Hochschild, AlternatingSumsOfTruncations) {
  for (const auto& f : test_files()) {
    SCOPED_TRACE(f);
    FDAlgebra a = test::load_algebra(f);
    Bimodule x = regular_bimodule(a);
    const std::size_t top = 3;
    HochschildDims d = hh_dims(a, x, top);
    BarComplex bar(a, x);
    long long cells = 0, homs = 0, chains = 0, hom_chains = 0;
    for (std::size_t i = 0; i <= top; ++i) {
      long long sign = i % 2 ? -1 : 1;
      cells += sign * static_cast<long long>(bar.cochain_dim(i));
      homs += sign * static_cast<long long>(d.cohomology[i]);
      chains += sign * static_cast<long long>(bar.chain_dim(i));
      hom_chains += sign * static_cast<long long>(d.homology[i]);
    }
    long long edge = static_cast<long long>(rank(bar.cochain_differential(top + 1)));
    long long chain_edge = static_cast<long long>(rank(bar.chain_differential(top + 1)));
    long long sign = top % 2 ? -1 : 1;
    EXPECT_EQ(homs, cells - sign * edge);
    EXPECT_EQ(hom_chains, chains - sign * chain_edge);
  }
}

TEST(Hochschild, RankStrategiesAgree) {
  for (const char* f : {"lambda_q2.quiver", "tau_not_derived.quiver", "aba.quiver"}) {
    FDAlgebra a = test::load_algebra(f);
    Bimodule x = regular_bimodule(a);
    HochschildDims one = hh_dims(a, x, 3, kDefaultCellCap, RankStrategy::FractionFree);
    HochschildDims two = hh_dims(a, x, 3, kDefaultCellCap, RankStrategy::PlainFraction);
    EXPECT_EQ(one.cohomology, two.cohomology) << f;
    EXPECT_EQ(one.homology, two.homology) << f;
  }
}

TEST(Hochschild, CellCapIsEnforced) {
  FDAlgebra a = test::load_algebra("lambda_q2.quiver");
  try {
    hh_dims(a, regular_bimodule(a), 6, 50);
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("degree 4"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace tauhh
