#include <gtest/gtest.h>

#include <map>

#include "fano/scen317.hpp"

using namespace fano;

namespace {

std::shared_ptr<const Scenario317> scenario() {
  static auto sc = Scenario317::load();
  return sc;
}

std::map<std::string, CheckReport> run_all(int depth = 10, int grid = 20) {
  std::map<std::string, CheckReport> out;
  for (const auto& c : scenario317_checks(scenario(), {depth, grid})) out.emplace(c.id, run_check("3-17", c));
  return out;
}

const std::map<std::string, CheckReport>& reports() {
  static const auto r = run_all();
  return r;
}

// Integral of 36 - 18x^2 + 4x^3 from 0 to t, over 36.
Rational oracle_partial(const Rational& t) {
  return (Rational(36) * t - Rational(6) * pow(t, 3) + pow(t, 4)) / Rational(36);
}

Rational cube_of(const ChowThreefold& r, const DivClass& d) { return r.triple_value(d, d, d); }

}  // namespace

TEST(Scenario317, AnticanonicalCube) {
  const auto& X = scenario()->base();
  EXPECT_EQ(cube_of(X, X.anticanonical()), Rational(36));
  EXPECT_EQ(X.parse_class("2*H1+3*HL-E1"), X.anticanonical());
}

TEST(Scenario317, ExceptionalCubeFromVolume) {
  const auto& up = scenario()->blowup();
  DivClass E = up.named("E");
  EXPECT_EQ(-cube_of(up, E), Rational(4));
  auto v = volume_polynomial(scenario()->certificate("E"), 0);
  EXPECT_EQ(v.coefficient({3}), Cyclotomic(4));
}

TEST(Scenario317, VolumePolynomialsOfE) {
  auto cert = scenario()->certificate("E");
  const auto& x = ray_variable();
  EXPECT_EQ(volume_polynomial(cert, 0), MultiPoly::parse("36-18*x^2+4*x^3", x));
  EXPECT_EQ(volume_polynomial(cert, 1), MultiPoly::parse("6*x^2-36*x+52", x));
  EXPECT_EQ(volume_polynomial(cert, 2), MultiPoly::parse("4*(3-x)^3", x));
}

TEST(Scenario317, SValuesAndBetas) {
  auto R = scenario()->certificate("R");
  auto E = scenario()->certificate("E");
  EXPECT_EQ(volume_polynomial(R, 0), MultiPoly::parse("12*x^2-48*x+36", ray_variable()));
  EXPECT_EQ(s_value(R), Rational(4, 9));
  EXPECT_EQ(beta(R, Rational(1)).beta, Rational(5, 9));
  EXPECT_EQ(s_value(E), Rational(11, 9));
  EXPECT_EQ(beta(E, Rational(2)).beta, Rational(7, 9));
  EXPECT_GE(Rational(3) - Rational(2) * s_value(E), Rational(5, 9));
}

TEST(Scenario317, PartialIntegralsOfE) {
  auto E = scenario()->certificate("E");
  EXPECT_EQ(s_partial(E, Rational(1)), Rational(31, 36));
  EXPECT_EQ(s_partial(E, Rational(0)), Rational(0));
  Rational t(4, 9);
  EXPECT_EQ(s_partial(E, t), oracle_partial(t));
  EXPECT_LT(s_partial(E, t), Rational(5, 9));
  for (int k = 0; k <= 36; ++k) EXPECT_EQ(s_partial(E, Rational(k, 36)), oracle_partial(Rational(k, 36)));
  EXPECT_THROW(s_partial(E, Rational(4)), InvariantViolation);
}

TEST(Scenario317, PrintedLastIntervalIsRejected) {
  const auto& printed = scenario()->asset().at("certificates").at("E").at("printedLastInterval");
  auto cert = scenario()->certificate("E", &printed);
  EXPECT_FALSE(certificate_failure(cert).empty());
}

TEST(Scenario317, RescaledCertificate) {
  auto R = scenario()->certificate("R");
  EXPECT_EQ(s_value(rescaled(R, Rational(2))), Rational(8, 9));
}

TEST(Scenario317, EveryCheckSucceeds) {
  for (const auto& [id, r] : reports()) EXPECT_NE(r.status, Status::Fail) << id << ": " << r.computed;
}

TEST(Scenario317, ExpectedStatuses) {
  const auto& r = reports();
  for (const char* id : {"anticanonical-cube", "class-identity", "beta-R", "volume-E", "beta-E", "beta-Rprime",
                         "beta-family-E-R", "beta-family-Ehat-Rprime", "log-discrepancies", "s-partial-E",
                         "chain-depth-10", "certificate-R-rescale"}) {
    ASSERT_TRUE(r.count(id)) << id;
    EXPECT_EQ(r.at(id).status, Status::Pass) << id;
  }
  EXPECT_EQ(r.at("nef-evidence-E").status, Status::EvidenceOnly);
  for (const char* id : {"typo-s-partial-E", "typo-nef-part-sign", "typo-E2-transform", "typo-Ehat-Rprime-multiplier"})
    EXPECT_EQ(r.at(id).status, Status::FlaggedDiscrepancy) << id;
}

TEST(Scenario317, ChainDepthIsConfigurable) {
  auto checks = scenario317_checks(scenario(), {4, 20});
  auto sel = select_checks(checks, "chain-*");
  ASSERT_EQ(sel.size(), 1u);
  EXPECT_EQ(sel[0]->id, "chain-depth-4");
  EXPECT_EQ(run_check("3-17", *sel[0]).status, Status::Pass);
}

TEST(Scenario317, GlobSelection) {
  auto checks = scenario317_checks(scenario());
  auto sel = select_checks(checks, "beta-*");
  std::vector<std::string> ids;
  for (const auto* c : sel) ids.push_back(c->id);
  EXPECT_EQ(ids, (std::vector<std::string>{"beta-E", "beta-R", "beta-Rprime", "beta-family-E-R",
                                           "beta-family-Ehat-Rprime"}));
}
