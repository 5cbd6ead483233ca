// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "montx/modarith.hpp"

namespace montx {
namespace {

const std::vector<long> kSmallPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};

mpz_class p25519() { return (mpz_class(1) << 255) - 19; }

TEST(Modulus, RejectsEvenOrTiny) {
  EXPECT_THROW(Modulus::prime(10), InvalidInput);
  EXPECT_THROW(Modulus::prime(1), InvalidInput);
  EXPECT_NO_THROW(Modulus::composite(15));
}

TEST(Modulus, ByteLength) {
  EXPECT_EQ(Modulus::prime(p25519()).byte_length(), 32u);
  EXPECT_EQ(Modulus::prime(11).byte_length(), 1u);
  EXPECT_EQ(Modulus::prime(257).byte_length(), 2u);
}

TEST(Element, ReducesNegativeAndLarge) {
  const Modulus m = Modulus::prime(11);
  EXPECT_EQ(m.element(-1).value(), 10);
  EXPECT_EQ(m.element(23).value(), 1);
}

TEST(Element, MismatchedModuliThrow) {
  const Modulus a = Modulus::prime(11);
  const Modulus b = Modulus::prime(13);
  OpCount ctr;
  EXPECT_THROW(add(a.one(), b.one(), ctr), ModulusMismatch);
  EXPECT_THROW(mul(a.one(), b.one(), ctr), ModulusMismatch);
}

TEST(Arithmetic, SmallExamples) {
  const Modulus m = Modulus::prime(11);
  OpCount ctr;
  EXPECT_EQ(add(m.element(7), m.element(8), ctr).value(), 4);
  EXPECT_EQ(add(m.element(10), m.element(1), ctr).value(), 0);
  EXPECT_EQ(mul(m.element(3), m.element(4), ctr).value(), 1);
  EXPECT_EQ(sqr(m.element(5), ctr).value(), 3);
  EXPECT_EQ(cmul(m.element(2), m.element(6), ctr).value(), 1);
  EXPECT_EQ(sub(m.element(3), m.element(5), ctr).value(), 9);
  for (long x = 0; x < 11; ++x) EXPECT_EQ(add(m.zero(), m.element(x), ctr).value(), x);
}

TEST(Arithmetic, EachCallBumpsExactlyOneField) {
  const Modulus m = Modulus::prime(13);
  const Element a = m.element(5);
  const Element b = m.element(9);
  struct Case {
    std::function<void(OpCount&)> op;
    std::uint64_t OpCount::*field;
  };
  const std::vector<Case> cases{
      {[&](OpCount& c) { add(a, b, c); }, &OpCount::add},
      {[&](OpCount& c) { sub(a, b, c); }, &OpCount::sub},
      {[&](OpCount& c) { mul(a, b, c); }, &OpCount::mul},
      {[&](OpCount& c) { sqr(a, c); }, &OpCount::sqr},
      {[&](OpCount& c) { cmul(a, b, c); }, &OpCount::cmul},
  };
  for (const Case& cs : cases) {
    OpCount ctr;
    cs.op(ctr);
    EXPECT_EQ(ctr.field_ops(), 1u);
    EXPECT_EQ(ctr.*cs.field, 1u);
  }
}

TEST(Arithmetic, TraceRecordsOrder) {
  const Modulus m = Modulus::prime(13);
  std::vector<OpKind> trace;
  OpCount ctr;
  ctr.trace = &trace;
  Element x = mul(m.element(2), m.element(3), ctr);
  x = sqr(x, ctr);
  x = add(x, x, ctr);
  EXPECT_EQ(trace, (std::vector<OpKind>{OpKind::Mul, OpKind::Sqr, OpKind::Add}));
}

TEST(Arithmetic, RingLawsExhaustive) {
  for (long q : kSmallPrimes) {
    const Modulus m = Modulus::prime(q);
    for (long i = 0; i < q; ++i) {
      for (long j = 0; j < q; ++j) {
        const Element a = m.element(i);
        const Element b = m.element(j);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b).value(), (i * j) % q);
        ASSERT_EQ((a + b).value(), (i + j) % q);
        // Associativity and distributivity against a third element c = i + j + 1.
        const Element c = m.element(i + j + 1);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

TEST(Pow, Examples) {
  const Modulus m = Modulus::prime(11);
  EXPECT_EQ(pow(m.element(3), 0).value(), 1);
  EXPECT_EQ(pow(m.element(3), 9).value(), 4);
  // Repeated multiplication agrees.
  Element acc = m.one();
  for (int i = 0; i < 9; ++i) acc = acc * m.element(3);
  EXPECT_EQ(acc.value(), 4);
  for (long a = 1; a < 11; ++a) EXPECT_TRUE(pow(m.element(a), 10).is_one());
}

TEST(Pow, CostSchedule) {
  const Modulus m = Modulus::prime(p25519());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const mpz_class e = mpz_class(rng()) * rng() + 1;
    OpCount ctr;
    pow(m.element(7), e, ctr);
    const std::size_t l = bit_length(e);
    const std::size_t pop = mpz_popcount(e.get_mpz_t());
    EXPECT_EQ(ctr.sqr, l - 1);
    EXPECT_EQ(ctr.mul, pop - 1);
    EXPECT_EQ(ctr.add + ctr.sub + ctr.cmul, 0u);
  }
}

TEST(Inv, Examples) {
  const Modulus m = Modulus::prime(11);
  EXPECT_EQ(inv(m.element(3)).value(), 4);
  EXPECT_EQ(inv(m.one()).value(), 1);
  EXPECT_THROW(inv(m.zero()), DivisionByZero);
  EXPECT_THROW(inv(Modulus::composite(15).element(2)), NotAField);
}

TEST(Inv, ExhaustiveAndRandom) {
  for (long q : kSmallPrimes) {
    const Modulus m = Modulus::prime(q);
    for (long a = 1; a < q; ++a) ASSERT_TRUE((inv(m.element(a)) * m.element(a)).is_one());
  }
  const Modulus big = Modulus::prime(p25519());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Element a = big.element(mpz_class(rng()) * rng() + 1);
    EXPECT_TRUE((inv(a) * a).is_one());
  }
}

TEST(InvertOrGcd, ExposesFactor) {
  const Modulus n = Modulus::composite(91);
  const InverseOrFactor r = invert_or_gcd(n.element(14));
  EXPECT_FALSE(r.inverse.has_value());
  EXPECT_EQ(r.gcd, 7);
  const InverseOrFactor ok = invert_or_gcd(n.element(3));
  ASSERT_TRUE(ok.inverse.has_value());
  EXPECT_TRUE((*ok.inverse * n.element(3)).is_one());
}

TEST(Legendre, AgreesWithSquareTable) {
  for (long q : kSmallPrimes) {
    const Modulus m = Modulus::prime(q);
    std::set<long> squares;
    for (long y = 1; y < q; ++y) squares.insert(y * y % q);
    EXPECT_EQ(legendre(m.zero()), 0);
    for (long a = 1; a < q; ++a) {
      ASSERT_EQ(legendre(m.element(a)), squares.count(a) ? 1 : -1) << "q=" << q << " a=" << a;
    }
  }
  const Modulus m11 = Modulus::prime(11);
  EXPECT_EQ(legendre(m11.element(4)), 1);
}

TEST(Sqrt, CanonicalEvenRoot) {
  const Modulus m = Modulus::prime(11);
  EXPECT_EQ(sqrt(m.zero())->value(), 0);
  EXPECT_EQ(sqrt(m.element(4))->value(), 2);
  EXPECT_FALSE(sqrt(m.element(2)).has_value());
}

TEST(Sqrt, ExhaustiveIncludingTonelliShanksBranch) {
  // 17, 41 are 1 mod 8: exercise Tonelli-Shanks beyond the (q+1)/4 shortcut.
  for (long q : kSmallPrimes) {
    const Modulus m = Modulus::prime(q);
    for (long a = 0; a < q; ++a) {
      const auto r = sqrt(m.element(a));
      if (legendre(m.element(a)) == -1) {
        ASSERT_FALSE(r.has_value());
        continue;
      }
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r * *r, m.element(a));
      EXPECT_TRUE(mpz_even_p(r->value().get_mpz_t()));
    }
  }
  const Modulus big = Modulus::prime(p25519());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Element a = big.element(mpz_class(rng()) * rng());
    const Element s = a * a;
    const auto r = sqrt(s);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, s);
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(0, 5), 5);
  EXPECT_EQ(gcd(12, 18), 6);
}

TEST(Primality, Basic) {
  EXPECT_TRUE(is_probable_prime(p25519()));
  EXPECT_FALSE(is_probable_prime(91));
  EXPECT_TRUE(is_probable_prime(97));
}

TEST(Encoding, OneOver25519) {
  const Modulus m = Modulus::prime(p25519());
  std::vector<std::uint8_t> expect(32, 0);
  expect[0] = 1;
  EXPECT_EQ(encode(m.one()), expect);
}

TEST(Encoding, AllOnesDecodesReduced) {
  const Modulus m = Modulus::prime(p25519());
  const std::vector<std::uint8_t> ff(32, 0xff);
  const mpz_class expect = ((mpz_class(1) << 256) - 1) % p25519();
  EXPECT_EQ(decode(ff, m).value(), expect);
}

TEST(Encoding, WrongLengthThrows) {
  const Modulus m = Modulus::prime(p25519());
  EXPECT_THROW(decode(std::vector<std::uint8_t>(31, 0), m), EncodingError);
  EXPECT_THROW(decode(std::vector<std::uint8_t>(33, 0), m), EncodingError);
}

TEST(Encoding, RoundTrip) {
  for (long q : kSmallPrimes) {
    const Modulus m = Modulus::prime(q);
    for (long a = 0; a < q; ++a) ASSERT_EQ(decode(encode(m.element(a)), m), m.element(a));
  }
  const Modulus big = Modulus::prime(p25519());
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Element a = big.element(mpz_class(rng()) * rng() * rng() * rng());
    EXPECT_EQ(decode(encode(a), big), a);
  }
}

TEST(Hex, LowercaseMemoryOrder) {
  const Modulus m = Modulus::prime(p25519());
  const std::string h = to_hex(encode(m.element(9)));
  EXPECT_EQ(h.substr(0, 4), "0900");
  EXPECT_EQ(h.size(), 64u);
  EXPECT_EQ(from_hex(h), encode(m.element(9)));
  EXPECT_EQ(to_hex(std::vector<std::uint8_t>{0xab, 0x01}), "ab01");
  EXPECT_THROW(from_hex("abc"), EncodingError);
  EXPECT_THROW(from_hex("zz"), EncodingError);
}

TEST(ParseInteger, DecimalAndHex) {
  EXPECT_EQ(parse_integer("486662"), 486662);
  EXPECT_EQ(parse_integer("0x10"), 16);
  EXPECT_EQ(parse_integer(" 42 "), 42);
  EXPECT_THROW(parse_integer("12a"), InvalidInput);
}

}  // namespace
}  // namespace montx
