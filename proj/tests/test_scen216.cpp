#include <gtest/gtest.h>

#include <map>

#include "fano/scen216.hpp"

using namespace fano;

namespace {

std::shared_ptr<const Scenario216> scenario() {
  static auto sc = Scenario216::load();
  return sc;
}

const std::map<std::string, CheckReport>& reports() {
  static const auto r = [] {
    std::map<std::string, CheckReport> out;
    for (const auto& c : scenario216_checks(scenario())) out.emplace(c.id, run_check("2-16", c));
    return out;
  }();
  return r;
}

// Restriction to the plane x0 = x1 = x2 = 0, in coordinates u3, u4, u5.
MultiPoly on_first_plane(const MultiPoly& p) {
  const std::vector<std::string> u{"u3", "u4", "u5"};
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(MultiPoly::constant(u, Cyclotomic(0)));
  for (std::size_t i = 0; i < 3; ++i) images.push_back(MultiPoly::variable(u, i));
  return p.compose(images);
}

}  // namespace

TEST(Scenario216, GroupOrder) { EXPECT_EQ(scenario()->group().order(), 12u); }

TEST(Scenario216, CharacterGrouping) {
  const auto& sc = *scenario();
  std::map<std::string, std::string> expected;
  for (const auto& [chi, names] : sc.asset().at("characterGroups").items())
    for (const auto& n : names) expected[n.get<std::string>()] = chi;
  ASSERT_EQ(expected.size(), 14u);
  std::map<std::string, std::string> byValue;
  for (const auto& [chi, vals] : sc.asset().at("characters").items()) {
    std::vector<Cyclotomic> v;
    for (const auto& x : vals) v.push_back(cyclotomic_of(x));
    byValue[LinearCharacter{v}.to_string()] = chi;
  }
  for (const auto& [name, chi] : expected) {
    auto got = semi_invariant_character(sc.form(name), sc.group());
    ASSERT_TRUE(got) << name;
    EXPECT_EQ(byValue.at(got->to_string()), chi) << name;
  }
}

TEST(Scenario216, TauSwapsTheBlocks) {
  const auto& sc = *scenario();
  EXPECT_EQ(substitute_linear(sc.f(), sc.tau()), sc.f());
  EXPECT_EQ(substitute_linear(sc.form("f11"), sc.tau()), sc.parse("x3^2+x4^2+x5^2"));
}

TEST(Scenario216, RestrictionToFirstPlane) {
  const auto& sc = *scenario();
  const std::vector<std::string> u{"u3", "u4", "u5"};
  EXPECT_TRUE(on_first_plane(sc.f()).is_zero());
  EXPECT_EQ(on_first_plane(sc.g()), MultiPoly::parse("u3^2+w*u4^2+w^2*u5^2", u));
}

TEST(Scenario216, PencilRelationsVanish) {
  const auto& sc = *scenario();
  std::vector<std::string> names;
  for (const auto& [n, p] : sc.forms()) names.push_back(n);
  std::vector<std::string> vars = sc.variables();
  vars.insert(vars.end(), names.begin(), names.end());
  for (const auto& rel : strings_of(sc.asset().at("pencilRelations"))) {
    MultiPoly r = MultiPoly::parse(rel, vars);
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < sc.variables().size(); ++i) images.push_back(MultiPoly::variable(sc.variables(), i));
    for (const auto& n : names) images.push_back(sc.form(n));
    EXPECT_TRUE(r.compose(images).is_zero()) << rel;
  }
}

TEST(Scenario216, PerturbedRelationDoesNotVanish) {
  const auto& sc = *scenario();
  MultiPoly r = sc.form("f14") + sc.form("f11").scaled(Cyclotomic(2)) - sc.form("f12").scaled(Cyclotomic(2)) - sc.form("f13");
  EXPECT_FALSE(r.is_zero());
}

TEST(Scenario216, FourConicsInDisjointPlanes) {
  const auto& sc = *scenario();
  ASSERT_EQ(sc.conic_names().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      EXPECT_TRUE(planes_disjoint(sc.conic(sc.conic_names()[i]).plane, sc.conic(sc.conic_names()[j]).plane));
}

TEST(Scenario216, IncidenceSamples) {
  const auto& sc = *scenario();
  const auto& rows = sc.asset().at("incidence").at("rows");
  auto cols = strings_of(sc.asset().at("incidence").at("columns"));
  auto cells = detail216::incidence_cells(sc, 0);
  auto at = [&](const std::string& conic, const std::string& form) {
    std::size_t r = static_cast<std::size_t>(std::find(sc.conic_names().begin(), sc.conic_names().end(), conic) -
                                             sc.conic_names().begin());
    std::size_t c = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), form) - cols.begin());
    return cells.at(r).at(c);
  };
  EXPECT_EQ(at("C1", "f31"), "Cusp");
  EXPECT_EQ(at("C2", "f11"), "No");
  EXPECT_EQ(at("C1", "f23"), "Yes");
  EXPECT_EQ(at("C1", "f31"), rows.at("C1").at(2).get<std::string>());
}

TEST(Scenario216, DiscriminantQuarticsAreSmooth) {
  const auto& sc = *scenario();
  for (const auto& [key, d] : sc.asset().at("discriminants").items()) {
    MultiPoly q = MultiPoly::parse(d.at("quartic").get<std::string>(), {"x0", "x1", "x2"});
    EXPECT_TRUE(plane_curve_smoothness(q).smooth) << key;
  }
}

TEST(Scenario216, EveryCheckSucceeds) {
  for (const auto& [id, r] : reports()) EXPECT_NE(r.status, Status::Fail) << id << ": " << r.computed;
}

TEST(Scenario216, ExpectedStatuses) {
  const auto& r = reports();
  for (const char* id : {"group-order", "characters", "tau-symmetry", "invariant-conics", "plane-disjointness",
                         "pencil-relations", "discriminant-1", "discriminant-3", "incidence-table",
                         "incidence-second-point", "chain-X", "chain-Z", "chain-C", "h0-ladder", "net-containment",
                         "net-multiplicity", "sl23-summands", "orbit-min-length"}) {
    ASSERT_TRUE(r.count(id)) << id;
    EXPECT_EQ(r.at(id).status, Status::Pass) << id;
  }
  EXPECT_EQ(r.at("v4-smoothness").status, Status::EvidenceOnly);
  EXPECT_EQ(r.at("typo-f-j1-x3").status, Status::FlaggedDiscrepancy);
  EXPECT_EQ(r.at("typo-net-Mprime3-duplicate").status, Status::FlaggedDiscrepancy);
}

TEST(Scenario216, ParametricDegreeOnBlowup) {
  // Conic, then Z, then the transform of Z, each rational with H-degree 2 and
  // disjoint from the earlier exceptional divisors.
  auto V4 = complete_intersection({5}, {{2}, {2}}, {"H"});
  auto X = blowup_curve(V4, {"C", 0, {Rational(2)}}, "E");
  auto V = blowup_curve(X, {"Z", 0, {Rational(2), Rational(0)}}, "F");
  auto Y = blowup_curve(V, {"Zt", 0, {Rational(2), Rational(0), Rational(0)}}, "R");
  const std::vector<std::string> p{"m", "mt"};
  DivClass D = Y.parse_class("2*H-E-m*F-mt*R", p);
  DivClass aK = Y.anticanonical();
  EXPECT_EQ(Y.triple(aK, aK, D).with_variables(p), MultiPoly::parse("14-6*(m+mt)", p));
}
