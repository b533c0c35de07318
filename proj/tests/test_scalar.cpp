#include "lef/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using lef::FieldCtx;
using lef::Scalar;

TEST(FieldCtx, ValidatesPrimality) {
  EXPECT_NO_THROW(FieldCtx::prime_field(2));
  EXPECT_NO_THROW(FieldCtx::prime_field(101));
  EXPECT_NO_THROW(FieldCtx::prime_field(2147483647));  // largest prime < 2^31
  EXPECT_THROW(FieldCtx::prime_field(1), lef::InvalidParameter);
  EXPECT_THROW(FieldCtx::prime_field(4), lef::InvalidParameter);
  EXPECT_THROW(FieldCtx::prime_field(1u << 31), lef::InvalidParameter);
}

TEST(Scalar, RationalNormalization) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(Scalar::parse("2/4", q).to_string(), "1/2");
  EXPECT_EQ(Scalar::parse("-4/6", q).to_string(), "-2/3");
  EXPECT_EQ(Scalar::parse("7/1", q).to_string(), "7");
  EXPECT_EQ(Scalar::from_integer(-5, q).to_string(), "-5");
  EXPECT_EQ(Scalar::parse("0/9", q), Scalar::zero(q));
}

TEST(Scalar, PrimeFieldReduction) {
  const FieldCtx f7 = FieldCtx::prime_field(7);
  EXPECT_EQ(Scalar::from_integer(-1, f7).residue(), 6);
  EXPECT_EQ(Scalar::from_integer(15, f7).residue(), 1);
  EXPECT_EQ(Scalar::from_integer(6, f7).to_string(), "6 mod 7");
  EXPECT_EQ(Scalar::from_integer(6, f7).to_short_string(), "6");
}

TEST(Scalar, ParseFractionInPrimeField) {
  const FieldCtx f7 = FieldCtx::prime_field(7);
  // 1/2 = 1 * 2^{-1} = 4 mod 7
  EXPECT_EQ(Scalar::parse("1/2", f7).residue(), 4);
  EXPECT_THROW(Scalar::parse("1/7", f7), lef::DivisionByZero);
}

TEST(Scalar, ParseRejectsMalformedText) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_THROW(Scalar::parse("abc", q), lef::InvalidParameter);
  EXPECT_THROW(Scalar::parse("", q), lef::InvalidParameter);
  EXPECT_THROW(Scalar::parse("1/2/3", q), lef::InvalidParameter);
  EXPECT_THROW(Scalar::parse("1.5", q), lef::InvalidParameter);
  EXPECT_THROW(Scalar::parse("1/0", q), lef::DivisionByZero);
}

TEST(Scalar, DivisionByZeroThrows) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_THROW(Scalar::zero(q).inverse(), lef::DivisionByZero);
  EXPECT_THROW(Scalar::one(q) / Scalar::zero(q), lef::DivisionByZero);
  const FieldCtx f5 = FieldCtx::prime_field(5);
  EXPECT_THROW(Scalar::zero(f5).inverse(), lef::DivisionByZero);
}

TEST(Scalar, MixedContextThrows) {
  const Scalar a = Scalar::one(FieldCtx::rationals());
  const Scalar b = Scalar::one(FieldCtx::prime_field(5));
  EXPECT_THROW(a + b, lef::ContextMismatch);
  EXPECT_THROW(a == b, lef::ContextMismatch);
  EXPECT_THROW(b.rational(), lef::ContextMismatch);
  EXPECT_THROW(a.residue(), lef::ContextMismatch);
}

TEST(Scalar, ZeroToTheZeroIsOne) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_TRUE(Scalar::zero(q).pow(0).is_one());
  EXPECT_TRUE(Scalar::zero(q).pow(3).is_zero());
  const FieldCtx f3 = FieldCtx::prime_field(3);
  EXPECT_TRUE(Scalar::zero(f3).pow(0).is_one());
}

TEST(Scalar, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(7101);
  for (const FieldCtx& ctx :
       {FieldCtx::rationals(), FieldCtx::prime_field(101)}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar a = leftest::random_scalar(rng, ctx);
      const Scalar b = leftest::random_scalar(rng, ctx);
      const Scalar c = leftest::random_nonzero(rng, ctx);
      EXPECT_EQ((a + b) - b, a);
      EXPECT_EQ(a * c / c, a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((c * c.inverse()).is_one());
      EXPECT_EQ(-(-a), a);
      EXPECT_EQ(c.pow(5), c * c * c * c * c);
    }
  }
}

TEST(Scalar, ParseRoundTripsToString) {
  std::mt19937 rng(7102);
  for (const FieldCtx& ctx : {FieldCtx::rationals(), FieldCtx::prime_field(13)}) {
    for (int i = 0; i < 100; ++i) {
      const Scalar a = leftest::random_scalar(rng, ctx);
      EXPECT_EQ(Scalar::parse(a.to_short_string(), ctx), a);
    }
  }
}
