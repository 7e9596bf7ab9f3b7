#include <gtest/gtest.h>

#include <map>

#include "fano/grouprep.hpp"

using namespace fano;

namespace {

const Cyclotomic w = Cyclotomic::omega();

// Quaternion generators over Q(w) and the order-3 element (-1+I+J+IJ)/2.
std::vector<CycMatrix> sl23_generators() {
  CycMatrix I{{0, -1}, {1, 0}};
  CycMatrix J{{w, w * w}, {w * w, -w}};
  CycMatrix C = Cyclotomic(Rational(1, 2)) * (Cyclotomic(-1) * CycMatrix::identity(2) + I + J + I * J);
  return {I, J, C};
}

std::vector<CycMatrix> a4_generators() {
  CycMatrix d1{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  CycMatrix d2{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  CycMatrix cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  return {d1, d2, cyc};
}

// Trace of M on degree-k monomials, from the eigenvalue-free definition:
// sum over monomials m of the coefficient of m in m(M^T x).
Cyclotomic brute_force_sym_trace(const CycMatrix& M, unsigned k) {
  const std::size_t d = M.rows();
  std::vector<std::string> vars = numbered_variables("y", d);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < d; ++i) {
    MultiPoly lin(vars);
    for (std::size_t j = 0; j < d; ++j) lin += MultiPoly::variable(vars, j).scaled(M(j, i));
    images.push_back(lin);
  }
  Cyclotomic tr(0);
  for (const auto& e : monomial_basis(d, k)) {
    MultiPoly img = MultiPoly::constant(vars, Cyclotomic(1));
    for (std::size_t i = 0; i < d; ++i) img = img * images[i].pow(e[i]);
    tr += img.coefficient(e);
  }
  return tr;
}

}  // namespace

TEST(MatrixGroup, IdentityOnly) {
  auto G = MatrixGroup::enumerate({CycMatrix::identity(3)});
  EXPECT_EQ(G.order(), 1u);
  EXPECT_TRUE(G.is_closed());
}

TEST(MatrixGroup, AlternatingGroupOfOrderTwelve) {
  auto G = MatrixGroup::enumerate(a4_generators());
  EXPECT_EQ(G.order(), 12u);
  EXPECT_TRUE(G.is_closed());
}

TEST(MatrixGroup, BinaryTetrahedral) {
  auto gens = sl23_generators();
  EXPECT_EQ(gens[1] * gens[1], Cyclotomic(-1) * CycMatrix::identity(2));
  EXPECT_EQ(element_order(gens[2]), 3u);
  auto G = MatrixGroup::enumerate(gens);
  EXPECT_EQ(G.order(), 24u);
  EXPECT_TRUE(G.is_closed());
  std::map<unsigned, int> orders;
  for (const auto& g : G.elements()) ++orders[element_order(g)];
  EXPECT_EQ(orders, (std::map<unsigned, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}));
}

TEST(MatrixGroup, CapExceededThrows) {
  CycMatrix big{{2, 0}, {0, 1}};
  EXPECT_THROW(MatrixGroup::enumerate({big}, "", 50), InvariantViolation);
  EXPECT_THROW(MatrixGroup::enumerate(sl23_generators(), "", 10), InvariantViolation);
}

TEST(MatrixGroup, SingularGeneratorThrows) {
  EXPECT_THROW(MatrixGroup::enumerate({CycMatrix{{1, 1}, {1, 1}}}), InvariantViolation);
}

TEST(Characters, AbelianisationOfA4) {
  auto G = MatrixGroup::enumerate(a4_generators());
  auto chars = linear_characters(G);
  ASSERT_EQ(chars.size(), 3u);
  std::set<std::string> values;
  for (const auto& c : chars) values.insert(c.values[2].to_string());
  EXPECT_EQ(values, (std::set<std::string>{"1", "w", "-1-w"}));
}

TEST(Characters, SemiInvariants) {
  auto G = MatrixGroup::enumerate(a4_generators());
  const std::vector<std::string> v{"x", "y", "z"};
  auto inv = semi_invariant_character(MultiPoly::parse("x^2+y^2+z^2", v), G);
  ASSERT_TRUE(inv);
  EXPECT_TRUE(inv->is_trivial());
  auto semi = semi_invariant_character(MultiPoly::parse("x^2+w*y^2+w^2*z^2", v), G);
  ASSERT_TRUE(semi);
  EXPECT_FALSE(semi->is_trivial());
  EXPECT_FALSE(semi_invariant_character(MultiPoly::parse("x", v), G));
  EXPECT_THROW(make_character(G, {-1, 1, 1}), InvariantViolation);
}

TEST(Eigenspaces, TrivialRepresentation) {
  auto G = MatrixGroup::enumerate(a4_generators());
  Representation one{{CycMatrix::identity(1), CycMatrix::identity(1), CycMatrix::identity(1)}};
  EXPECT_EQ(character_eigenspace_dim(G, one, make_character(G, {1, 1, 1})), 1u);
}

TEST(Eigenspaces, W2HasNoLine) {
  auto G = MatrixGroup::enumerate(sl23_generators());
  Representation W{sl23_generators()};
  for (const auto& chi : linear_characters(G)) EXPECT_EQ(character_eigenspace_dim(G, W, chi), 0u);
}

TEST(Eigenspaces, TwoLinesInW2TimesSym3) {
  auto G = MatrixGroup::enumerate(sl23_generators());
  Representation W{sl23_generators()};
  Representation S3 = sym_power_rep(W, 3);
  Representation T = tensor_rep(W, S3);
  EXPECT_EQ(S3.dim(), 4u);
  EXPECT_EQ(T.dim(), 8u);
  std::size_t total = 0;
  for (const auto& chi : linear_characters(G)) total += character_eigenspace_dim(G, T, chi);
  EXPECT_EQ(total, 2u);
}

TEST(Eigenspaces, InconsistentRepresentationThrows) {
  auto G = MatrixGroup::enumerate(a4_generators());
  Representation bad{{CycMatrix::identity(1), CycMatrix::identity(1), CycMatrix{{-1}}}};
  EXPECT_THROW(character_eigenspace_dim(G, bad, make_character(G, {1, 1, 1})), InvariantViolation);
}

TEST(SymmetricPowers, TraceMatchesMonomialAction) {
  const auto G = MatrixGroup::enumerate(sl23_generators());
  for (const auto& g : G.elements())
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(sym_power_matrix(g, k).trace(), brute_force_sym_trace(g, k));
}

TEST(SymmetricPowers, IsHomomorphism) {
  auto gens = sl23_generators();
  for (const auto& a : gens)
    for (const auto& b : gens) EXPECT_EQ(sym_power_matrix(a * b, 3), sym_power_matrix(a, 3) * sym_power_matrix(b, 3));
}

TEST(Orbits, MinimalOrbitLengths) {
  EXPECT_EQ(min_orbit_length_on_P1(12, {1, 2, 3}), 4u);
  EXPECT_EQ(min_orbit_length_on_P1(2, {1, 2}), 1u);
  EXPECT_EQ(min_orbit_length_on_P1(24, {1, 2, 3, 4}), 6u);
  EXPECT_THROW(min_orbit_length_on_P1(10, {1, 3}), InvariantViolation);
}
