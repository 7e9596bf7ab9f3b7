#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_clean(const props::Result& r) {
  EXPECT_GE(r.cases, props::kCases) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.firstFailure;
}

}  // namespace

TEST(Properties, FieldAxioms) { expect_clean(props::field_axioms()); }
TEST(Properties, SubstitutionComposition) { expect_clean(props::substitution_composition()); }
TEST(Properties, ResultantAgainstGcd) { expect_clean(props::resultant_vs_gcd()); }
TEST(Properties, RankNullity) { expect_clean(props::rank_nullity()); }
TEST(Properties, RoundTrips) { expect_clean(props::round_trips()); }
TEST(Properties, TensorSymmetry) { expect_clean(props::tensor_symmetry()); }
TEST(Properties, ProjectionFormula) { expect_clean(props::projection_formula()); }
TEST(Properties, EigenspaceInvariance) { expect_clean(props::eigenspace_invariance()); }
TEST(Properties, ChainStepLaw) { expect_clean(props::chain_step_law()); }
