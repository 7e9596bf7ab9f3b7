#include <gtest/gtest.h>

#include "fano/ruled.hpp"

using namespace fano;

namespace {

using RC = RuledClass<Rational>;

}  // namespace

TEST(RuledPair, QuadricSurface) { EXPECT_EQ(ruled_pair(0, RC{0, 1, 3}, RC{0, 1, 3}), Rational(6)); }

TEST(RuledPair, SecondHirzebruch) { EXPECT_EQ(ruled_pair(2, RC{2, 1, 4}, RC{2, 1, 2}), Rational(4)); }

TEST(RuledPair, NegativeSectionAndFibre) {
  for (int n = 0; n < 10; ++n) {
    RC s{n, 1, 0}, f{n, 0, 1};
    EXPECT_EQ(ruled_pair(s, s), Rational(-n));
    EXPECT_EQ(ruled_pair(s, f), Rational(1));
    EXPECT_EQ(ruled_pair(f, f), Rational(0));
  }
}

TEST(RuledPair, ParametricOnF8) {
  const std::vector<std::string> m{"m"};
  MultiPoly mm = MultiPoly::variable(m, 0);
  RuledClass<MultiPoly> A{8, mm, mm.scaled(Cyclotomic(2)) + MultiPoly::constant(m, Cyclotomic(6))};
  RuledClass<MultiPoly> s{8, MultiPoly::constant(m, Cyclotomic(1)), MultiPoly(m)};
  EXPECT_EQ(ruled_pair(A, s), MultiPoly::parse("6-6*m", m));
}

TEST(RuledPair, MixedSurfacesThrow) {
  EXPECT_THROW(ruled_pair(2, RC{2, 1, 0}, RC{3, 1, 0}), DimensionMismatch);
}

TEST(RuledSections, CountsOnHirzebruch) {
  EXPECT_EQ(ruled_section_count(0, 1, 1), 4);
  EXPECT_EQ(ruled_section_count(1, 1, 1), 3);
  EXPECT_EQ(ruled_section_count(2, 0, 3), 4);
  EXPECT_EQ(ruled_section_count(2, 1, 1), 2);
  EXPECT_EQ(ruled_section_count(3, -1, 5), 0);
}

TEST(Chain, BaseState) {
  ChainState st = chain_base(0, 0, 2, -1);
  EXPECT_EQ(st.n, 2);
  EXPECT_EQ(st.curves[0], (ChainCurve{2, 0, 0}));
  EXPECT_EQ(st.curves[1], (ChainCurve{-2, -1, 2}));
  EXPECT_EQ(chain_invariant_failure(st), "");
}

TEST(Chain, StepFromSecondHirzebruch) {
  ChainState st = chain_base(0, 0, 2, -1);
  ChainState plus = chain_step(st, 0);
  ChainState minus = chain_step(st, 1);
  EXPECT_EQ(plus.n, 2);
  EXPECT_EQ(minus.n, 4);
  EXPECT_EQ(chain_invariant_failure(plus), "");
  EXPECT_EQ(chain_invariant_failure(minus), "");
  EXPECT_EQ(plus.depth, 2);
  EXPECT_THROW(chain_step(st, 2), InvariantViolation);
}

TEST(Chain, ReplayIsDeterministic) {
  ChainState a = chain_base(0, 0, 2, -1), b = a;
  const std::vector<std::size_t> path{1, 0, 0, 1, 1, 0, 1};
  for (auto i : path) a = chain_step(a, i);
  for (auto i : path) b = chain_step(b, i);
  EXPECT_EQ(a, b);
}

TEST(Chain, ExplorationToDepthTen) {
  // Ten choices after the first blow-up.
  auto ex = explore_chain(chain_base(0, 0, 2, -1), 11);
  EXPECT_EQ(ex.paths, 1024u);
  EXPECT_EQ(ex.violations, 0u) << ex.firstViolation;
  EXPECT_GT(ex.maxN, 0);
}

TEST(Chain, InvariantFailuresAreNamed) {
  ChainState st = chain_base(0, 0, 2, -1);
  st.curves[1].selfOnPartner = -1;
  EXPECT_NE(chain_invariant_failure(st).find("sign rule"), std::string::npos);
  ChainState flat = chain_base(1, 0, 1, -1);
  EXPECT_EQ(chain_invariant_failure(flat), "n > 0");
}
