#include <gtest/gtest.h>

#include "fano/exactnum.hpp"

using fano::Cyclotomic;
using fano::Rational;

namespace {

const Cyclotomic w = Cyclotomic::omega();

}  // namespace

TEST(Rational, NormalisesOnConstruction) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), fano::DivisionByZero);
  EXPECT_THROW(Rational(0).inv(), fano::DivisionByZero);
  EXPECT_THROW(Rational(1) / Rational(0), fano::DivisionByZero);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-25444/59049"), Rational(-25444, 59049));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/"), fano::ParseError);
  EXPECT_THROW(Rational::parse("abc"), fano::ParseError);
}

TEST(Rational, ArbitraryPrecision) {
  Rational big = fano::pow(Rational(3), 200);
  EXPECT_EQ(big / fano::pow(Rational(3), 199), Rational(3));
}

TEST(Cyclotomic, OmegaSquared) { EXPECT_EQ(w * w, Cyclotomic(-1, -1)); }

TEST(Cyclotomic, OnePlusOmegaTimesMinusOmega) { EXPECT_EQ((Cyclotomic(1) + w) * (-w), Cyclotomic(1)); }

TEST(Cyclotomic, SquareOfTwoOmegaPlusOne) {
  Cyclotomic s = Cyclotomic(2) * w + Cyclotomic(1);
  EXPECT_EQ(s * s, Cyclotomic(-3));
}

TEST(Cyclotomic, OmegaIsPrimitiveCubeRoot) {
  EXPECT_EQ(fano::pow(w, 3), Cyclotomic(1));
  EXPECT_NE(w, Cyclotomic(1));
  EXPECT_EQ(Cyclotomic(1) + w + w * w, Cyclotomic(0));
  EXPECT_EQ(Cyclotomic::omega2(), w * w);
}

TEST(Cyclotomic, Inverse) {
  EXPECT_EQ(w.inv(), Cyclotomic(-1, -1));
  EXPECT_THROW(Cyclotomic(0).inv(), fano::DivisionByZero);
  Cyclotomic z(Rational(3, 5), Rational(-7, 2));
  EXPECT_EQ(z * z.inv(), Cyclotomic(1));
}

TEST(Cyclotomic, ConjugationAndNorm) {
  EXPECT_EQ(w.conj(), w * w);
  Cyclotomic z(2, 5);
  EXPECT_EQ(z * z.conj(), Cyclotomic(z.norm()));
  EXPECT_EQ(z.norm(), Rational(4 - 10 + 25));
}

TEST(Cyclotomic, PrintAndParse) {
  EXPECT_EQ(Cyclotomic::parse("-1-w"), w * w);
  EXPECT_EQ(Cyclotomic::parse("w^2"), w * w);
  EXPECT_EQ(Cyclotomic::parse("3/4*w"), Cyclotomic(Rational(0), Rational(3, 4)));
  Cyclotomic z(Rational(-2, 3), Rational(5, 7));
  EXPECT_EQ(Cyclotomic::parse(z.to_string()), z);
  EXPECT_THROW(Cyclotomic::parse("w+"), fano::ParseError);
  EXPECT_THROW(Cyclotomic::parse("1/0"), fano::DivisionByZero);
}
