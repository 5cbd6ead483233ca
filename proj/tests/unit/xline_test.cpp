// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "montx/xline.hpp"
#include "oracle.hpp"
#include "sweep.hpp"

namespace montx {
namespace {

using testing::checked_xadd;
using testing::checked_xadd_normalized;
using testing::checked_xdbl;
using testing::for_each_sweep_curve;
using testing::proj_eq;

MontgomeryCurve f13_curve() {
  const Modulus m = Modulus::prime(13);
  return {m.element(6), m.one()};
}

TEST(XZPoint, XOf) {
  const MontgomeryCurve E = f13_curve();
  const Modulus& m = E.modulus();
  const XZPoint o = x_of(E, AffinePoint::infinity());
  EXPECT_TRUE(o.X.is_one() && o.Z.is_zero());
  const XZPoint t = x_of(E, E.T());
  EXPECT_TRUE(t.X.is_zero() && t.Z.is_one());
  for (const AffinePoint& P : oracle::enumerate_points(oracle::of(E))) {
    if (P.is_infinity() || !(P.x() == m.element(5))) continue;
    const XZPoint x = x_of(E, P);
    EXPECT_EQ(x.X, m.element(5));
    EXPECT_TRUE(x.Z.is_one());
  }
}

TEST(XZPoint, ProjectiveEquality) {
  const Modulus m = Modulus::prime(13);
  EXPECT_TRUE(xz_equal({m.element(2), m.element(4)}, {m.element(1), m.element(2)}));
  EXPECT_TRUE(xz_equal({m.element(1), m.zero()}, {m.element(5), m.zero()}));
  EXPECT_FALSE(xz_equal({m.zero(), m.one()}, {m.one(), m.zero()}));
  EXPECT_THROW(xz_equal({m.zero(), m.zero()}, {m.one(), m.zero()}), InvalidInput);
}

TEST(Xadd, EqualSummandsGiveSentinel) {
  const MontgomeryCurve E = f13_curve();
  OpCount ctr;
  for (const AffinePoint& P : oracle::enumerate_points(oracle::of(E))) {
    if (P.is_infinity()) continue;
    const XZPoint x = x_of(E, P);
    EXPECT_TRUE(checked_xadd(x, x, XZPoint::infinity(E.modulus()), ctr).is_sentinel());
    EXPECT_TRUE(checked_xadd_normalized(x, x, E.modulus().zero(), ctr).Z.is_zero());
  }
}

TEST(Xadd, AddingInfinityIsIdentity) {
  const MontgomeryCurve E = f13_curve();
  OpCount ctr;
  for (const AffinePoint& P : oracle::enumerate_points(oracle::of(E))) {
    if (P.is_infinity() || P.y().is_zero()) continue;
    const XZPoint x = x_of(E, P);
    EXPECT_TRUE(proj_eq(checked_xadd(x, XZPoint::infinity(E.modulus()), x, ctr), x));
  }
}

TEST(Xadd, MatchesOracleExhaustive) {
  for_each_sweep_curve([](const MontgomeryCurve& E) {
    const oracle::Mont c = oracle::of(E);
    const auto pts = oracle::enumerate_points(c);
    OpCount ctr;
    for (const AffinePoint& P : pts) {
      for (const AffinePoint& Q : pts) {
        const AffinePoint D = oracle::add(c, P, oracle::negate(Q));
        if (D.is_infinity() || D.x().is_zero()) continue;  // P - Q in {O, T}
        const XZPoint expect = x_of(E, oracle::add(c, P, Q));
        const XZPoint xd = x_of(E, D);
        ASSERT_TRUE(proj_eq(checked_xadd(x_of(E, P), x_of(E, Q), xd, ctr), expect));
        ASSERT_TRUE(proj_eq(checked_xadd_normalized(x_of(E, P), x_of(E, Q), xd.X, ctr), expect));
      }
    }
  });
}

TEST(Xdbl, SpecialInputs) {
  const MontgomeryCurve E = f13_curve();
  const Modulus& m = E.modulus();
  OpCount ctr;
  const XZPoint d = checked_xdbl(XZPoint::T(m), E, ctr);
  EXPECT_TRUE(d.Z.is_zero());
  EXPECT_FALSE(d.X.is_zero());
  EXPECT_TRUE(checked_xdbl(XZPoint::infinity(m), E, ctr).Z.is_zero());
  // x = 1 has order 4 on the curve or its twist, so [2] lands on T.
  EXPECT_TRUE(proj_eq(checked_xdbl(XZPoint::affine(m.one()), E, ctr), XZPoint::T(m)));
}

TEST(Xdbl, MatchesOracleExhaustive) {
  for_each_sweep_curve([](const MontgomeryCurve& E) {
    const oracle::Mont c = oracle::of(E);
    OpCount ctr;
    for (const AffinePoint& P : oracle::enumerate_points(c)) {
      if (P.is_infinity() || P.x().is_zero()) continue;
      ASSERT_TRUE(proj_eq(checked_xdbl(x_of(E, P), E, ctr), x_of(E, oracle::add(c, P, P))));
    }
  });
}

TEST(Xline, TwistAgnostic) {
  // The same A with the twisted B: identities hold on twist points too.
  for_each_sweep_curve([](const MontgomeryCurve& E) {
    const MontgomeryCurve Et = E.twist();
    const oracle::Mont ct = oracle::of(Et);
    const auto pts = oracle::enumerate_points(ct);
    OpCount ctr;
    for (const AffinePoint& P : pts) {
      if (P.is_infinity() || P.x().is_zero()) continue;
      ASSERT_TRUE(proj_eq(checked_xdbl(x_of(Et, P), E, ctr), x_of(Et, oracle::add(ct, P, P))));
      for (const AffinePoint& Q : pts) {
        const AffinePoint D = oracle::add(ct, P, oracle::negate(Q));
        if (D.is_infinity() || D.x().is_zero()) continue;
        ASSERT_TRUE(proj_eq(checked_xadd(x_of(Et, P), x_of(Et, Q), x_of(Et, D), ctr),
                            x_of(Et, oracle::add(ct, P, Q))));
      }
    }
  }, 13);
}

TEST(Xdbl, SymmetricUnderCoordinateSwap) {
  const MontgomeryCurve E = f13_curve();
  const Modulus& m = E.modulus();
  OpCount ctr;
  for (long X = 0; X < 13; ++X) {
    for (long Z = 0; Z < 13; ++Z) {
      const XZPoint a = checked_xdbl({m.element(X), m.element(Z)}, E, ctr);
      const XZPoint b = checked_xdbl({m.element(Z), m.element(X)}, E, ctr);
      ASSERT_EQ(a.X, b.X);
      ASSERT_EQ(a.Z, b.Z);
    }
  }
}

TEST(Xline, ScalingInvariance) {
  const Modulus m = Modulus::prime((mpz_class(1) << 255) - 19);
  const MontgomeryCurve E(m.element(486662), m.one());
  std::mt19937_64 rng(17);
  auto rnd = [&] { return m.element(mpz_class(rng()) * rng() * rng() * rng()); };
  OpCount ctr;
  for (int t = 0; t < 200; ++t) {
    const XZPoint p{rnd(), rnd()}, q{rnd(), rnd()}, d{rnd(), rnd()};
    const Element l = rnd();
    if (l.is_zero()) continue;
    const XZPoint base = checked_xadd(p, q, d, ctr);
    EXPECT_TRUE(proj_eq(checked_xadd({l * p.X, l * p.Z}, q, d, ctr), base));
    EXPECT_TRUE(proj_eq(checked_xadd(p, {l * q.X, l * q.Z}, d, ctr), base));
    EXPECT_TRUE(proj_eq(checked_xadd(p, q, {l * d.X, l * d.Z}, ctr), base));
    EXPECT_TRUE(proj_eq(checked_xdbl({l * p.X, l * p.Z}, E, ctr), checked_xdbl(p, E, ctr)));
  }
}

TEST(XaddExtended, DispatchCases) {
  for_each_sweep_curve([](const MontgomeryCurve& E) {
    const oracle::Mont c = oracle::of(E);
    const auto pts = oracle::enumerate_points(c);
    OpCount ctr;
    for (const AffinePoint& P : pts) {
      for (const AffinePoint& Q : pts) {
        const AffinePoint D = oracle::add(c, P, oracle::negate(Q));
        const XZPoint got = xadd_extended(x_of(E, P), x_of(E, Q), x_of(E, D), E, ctr);
        ASSERT_TRUE(proj_eq(got, x_of(E, oracle::add(c, P, Q))));
      }
    }
  }, 13);
}

TEST(XaddExtended, GenericDiffFallsThrough) {
  const MontgomeryCurve E = f13_curve();
  const Modulus& m = E.modulus();
  OpCount a, b;
  const XZPoint p{m.element(3), m.element(5)}, q{m.element(7), m.element(2)}, d{m.element(4), m.element(9)};
  const XZPoint r1 = xadd_extended(p, q, d, E, a);
  const XZPoint r2 = xadd(p, q, d, b);
  EXPECT_EQ(r1.X, r2.X);
  EXPECT_EQ(r1.Z, r2.Z);
  EXPECT_EQ(a, b);
}

TEST(TranslateByT, Examples) {
  const MontgomeryCurve E = f13_curve();
  const Modulus& m = E.modulus();
  EXPECT_TRUE(proj_eq(translate_by_T(XZPoint::infinity(m)), XZPoint::T(m)));
  const oracle::Mont c = oracle::of(E);
  for (const AffinePoint& P : oracle::enumerate_points(c)) {
    ASSERT_TRUE(proj_eq(translate_by_T(x_of(E, P)), x_of(E, oracle::add(c, P, E.T()))));
  }
}

TEST(Costs, PerCallSignatures) {
  const MontgomeryCurve E = f13_curve();
  const Modulus& m = E.modulus();
  OpCount ctr;
  const XZPoint p{m.element(3), m.element(5)}, q{m.element(7), m.element(2)}, d{m.element(4), m.element(9)};
  OpCount before = ctr;
  xadd(p, q, d, ctr);
  EXPECT_EQ(to_string(ctr - before), "4M + 2S + 0C + 3a + 3s");
  before = ctr;
  xadd_normalized(p, q, d.X, ctr);
  EXPECT_EQ(to_string(ctr - before), "3M + 2S + 0C + 3a + 3s");
  before = ctr;
  std::vector<OpKind> trace;
  ctr.trace = &trace;
  xdbl(p, E, ctr);
  ctr.trace = nullptr;
  EXPECT_EQ(to_string(ctr - before), "2M + 2S + 1C + 2a + 2s");
  EXPECT_EQ(trace, (std::vector<OpKind>{OpKind::Add, OpKind::Sqr, OpKind::Sub, OpKind::Sqr, OpKind::Mul, OpKind::Sub,
                                        OpKind::CMul, OpKind::Add, OpKind::Mul}));
  EXPECT_EQ(ctr.xadd, 2u);
  EXPECT_EQ(ctr.xdbl, 1u);
}

TEST(GenericWeierstrass, AgreesWithMontgomeryFormulas) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (long q : {13L, 101L, 1009L}) {
    const Modulus m = Modulus::prime(q);
    for (int t = 0; t < 3600; ++t) {
      const Element A = m.element(static_cast<long>(rng() % q));
      if (A * A == m.element(4)) continue;
      const MontgomeryCurve E(A, m.one());
      const GeneralWeierstrassCurve W{A, m.one(), m.zero()};
      auto rnd = [&] { return m.element(static_cast<long>(rng() % q)); };
      const XZPoint p{rnd(), rnd()}, r{rnd(), rnd()}, d{rnd(), rnd()};
      OpCount c1, c2, c3;
      ASSERT_TRUE(proj_eq(generic_weierstrass_xadd(p, r, d, W, c1), xadd(p, r, d, c2)));
      ASSERT_TRUE(proj_eq(two_torsion_weierstrass_xadd(p, r, d, W, c3), xadd(p, r, d, c2)));
      ASSERT_TRUE(proj_eq(generic_weierstrass_xdbl(p, W, c1), xdbl(p, E, c2)));
      ++checked;
    }
  }
  EXPECT_GE(checked, 10000);
}

TEST(GenericWeierstrass, TwoTorsionSpecialisationCost) {
  const Modulus m = Modulus::prime(101);
  const GeneralWeierstrassCurve W{m.element(7), m.element(3), m.zero()};
  OpCount ctr;
  two_torsion_weierstrass_xadd({m.element(2), m.element(3)}, {m.element(5), m.element(7)},
                               {m.element(11), m.element(13)}, W, ctr);
  EXPECT_EQ(to_string(ctr), "6M + 2S + 1C + 0a + 2s");
}

TEST(GenericWeierstrass, ShortDoublingMatchesAffine) {
  const Modulus m = Modulus::prime(13);
  for (long a = 0; a < 13; ++a) {
    for (long b = 0; b < 13; ++b) {
      const GeneralWeierstrassCurve W{m.zero(), m.element(a), m.element(b)};
      if (!W.is_nonsingular()) continue;
      for (long x = 0; x < 13; ++x) {
        const Element X = m.element(x);
        const auto y = sqrt(X * X * X + m.element(a) * X + m.element(b));
        if (!y || y->is_zero()) continue;
        const AffinePoint P(X, *y);
        const AffinePoint D = oracle::weierstrass_add(W.f1, W.f0, P, P);
        OpCount ctr;
        const XZPoint got = generic_weierstrass_xdbl(XZPoint::affine(X), W, ctr);
        if (D.is_infinity()) {
          ASSERT_TRUE(got.Z.is_zero());
        } else {
          ASSERT_TRUE(proj_eq(got, XZPoint::affine(D.x())));
        }
      }
    }
  }
}

}  // namespace
}  // namespace montx
