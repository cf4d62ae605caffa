#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tauhh/classify.hpp"
#include "tauhh/resolution.hpp"
#include "tauhh/rsq.hpp"

namespace tauhh {
namespace {

bool has_note(const ClassificationReport& r, const std::string& fragment) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(fragment) != std::string::npos; });
}

TEST(Classify, LocalAlgebraIsProved) {
  FDAlgebra a = test::load_algebra("lambda_q2.quiver");
  for (std::size_t n = 1; n <= 8; ++n) {
    ExtTorTable t = ext_tor_table(a, n);
    ClassificationReport r = classify(a, t);
    EXPECT_TRUE(r.local);
    EXPECT_EQ(r.plus, Verdict::Proved);
    EXPECT_EQ(r.coplus, Verdict::Proved);
    EXPECT_NE(t.at(n, 0, 0), 0u);
    EXPECT_EQ(r.plus_witnesses, (std::vector<VertexPair>{{0, 0}}));
    EXPECT_EQ(r.coplus_witnesses, (std::vector<VertexPair>{{0, 0}}));
  }
}

TEST(Classify, FiniteGlobalDimensionIsDisproved) {
  FDAlgebra a = test::load_algebra("no_go_further.quiver");
  ClassificationReport r = classify(a, ext_tor_table(a, 8));
  EXPECT_TRUE(r.global_dimension.exact);
  EXPECT_EQ(r.global_dimension.value, 2u);
  EXPECT_EQ(r.plus, Verdict::Disproved);
  EXPECT_EQ(r.coplus, Verdict::Disproved);
  EXPECT_TRUE(r.plus_witnesses.empty());
  EXPECT_STREQ(verdict_name(r.plus), "finite");
}

TEST(Classify, AbaHasEvidenceAtEveryBound) {
  FDAlgebra a = test::load_algebra("aba.quiver");
  for (std::size_t n = 1; n <= 8; ++n) {
    ClassificationReport r = classify(a, ext_tor_table(a, n));
    EXPECT_FALSE(r.global_dimension.exact) << n;
    EXPECT_EQ(r.plus, Verdict::Evidence) << n;
    EXPECT_EQ(r.coplus, Verdict::Evidence) << n;
    EXPECT_TRUE(r.all_peirce_nonzero);
    EXPECT_TRUE(has_note(r, "every yΛx and xΛy is nonzero")) << n;
    EXPECT_TRUE(has_note(r, "evidence up to N only")) << n;
  }
}

TEST(Classify, LoopWithMonomialRelations) {
  FDAlgebra a = test::algebra_from("vertex x\nvertex y\narrow l x x\narrow a x y\n"
                                   "relation l*l\nrelation a*l\n");
  ClassificationReport r = classify(a, ext_tor_table(a, 5));
  EXPECT_TRUE(r.has_loop);
  EXPECT_FALSE(r.all_peirce_nonzero);
  EXPECT_EQ(r.plus, Verdict::Proved);
  EXPECT_TRUE(has_note(r, "the quiver has a loop"));
}

TEST(Classify, ExactInfinitudeExamples) {
  Quiver loop;
  loop.add_vertex("u");
  loop.add_arrow("b", 0, 0);
  EXPECT_TRUE(rsq_exact_infinitude(loop, 0, 0));
  FDAlgebra k = test::load_algebra("kronecker.quiver");
  for (std::size_t y = 0; y < 2; ++y) {
    for (std::size_t x = 0; x < 2; ++x) EXPECT_FALSE(rsq_exact_infinitude(k.quiver(), y, x));
  }
  FDAlgebra c = test::load_algebra("two_cycle_rsq.quiver");
  EXPECT_TRUE(rsq_exact_infinitude(c.quiver(), 0, 1));
  EXPECT_TRUE(rsq_exact_infinitude(c.quiver(), 1, 0));
}

TEST(Classify, RsqBoundedEvidenceMatchesExactDecision) {
  std::mt19937_64 rng(test::seed() + 70);
  for (int t = 0; t < 30; ++t) {
    Quiver q = test::random_quiver(rng, 4, 6);
    FDAlgebra a = build_algebra(rsq_presentation(q, Field()));
    ASSERT_TRUE(is_radical_square_zero(a));
    bool plus_seen = false, coplus_seen = false;
    Verdict plus = Verdict::NoEvidence, coplus = Verdict::NoEvidence;
    for (std::size_t n = q.num_vertices() + 1; n <= 8; ++n) {
      ClassificationReport r = classify(a, ext_tor_table(a, n));
      if (r.global_dimension.exact) {
        EXPECT_TRUE(r.plus_witnesses.empty());
        EXPECT_TRUE(r.coplus_witnesses.empty());
        continue;
      }
      plus = r.plus;
      coplus = r.coplus;
      EXPECT_TRUE(r.plus == Verdict::Proved || r.plus == Verdict::Disproved);
      for (const auto& [y, x] : r.plus_witnesses) EXPECT_TRUE(rsq_exact_infinitude(q, x, y));
      for (const auto& [y, x] : r.coplus_witnesses) EXPECT_TRUE(rsq_exact_infinitude(q, y, x));
      plus_seen = plus_seen || !r.plus_witnesses.empty();
      coplus_seen = coplus_seen || !r.coplus_witnesses.empty();
    }
    // Periodic cycles can hide a witness in a single degree, never in a
    // window longer than the quiver.
    EXPECT_EQ(plus_seen, plus == Verdict::Proved);
    EXPECT_EQ(coplus_seen, coplus == Verdict::Proved);
  }
}

TEST(Classify, CrownEvidenceIsPeriodic) {
  FDAlgebra a = test::load_algebra("tau_not_derived_prime.quiver");
  Quiver q = a.quiver();
  FDAlgebra r = build_algebra(rsq_presentation(q, Field()));
  ClassificationReport four = classify(r, ext_tor_table(r, 4));
  EXPECT_EQ(four.plus, Verdict::Proved);
  EXPECT_TRUE(four.plus_witnesses.empty());
  EXPECT_FALSE(four.coplus_witnesses.empty());
  ClassificationReport five = classify(r, ext_tor_table(r, 5));
  EXPECT_FALSE(five.plus_witnesses.empty());
}

TEST(Classify, RadicalSquareZeroDetection) {
  EXPECT_TRUE(is_radical_square_zero(test::load_algebra("one_loop_rsq.quiver")));
  EXPECT_TRUE(is_radical_square_zero(test::load_algebra("kronecker.quiver")));
  EXPECT_FALSE(is_radical_square_zero(test::load_algebra("aba.quiver")));
  EXPECT_FALSE(is_radical_square_zero(test::load_algebra("lambda_q2.quiver")));
}

}  // namespace
}  // namespace tauhh
