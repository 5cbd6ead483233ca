// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/xline.hpp"

namespace montx {

XZPoint x_of(const MontgomeryCurve& E, const AffinePoint& P) {
  if (P.is_infinity()) return XZPoint::infinity(E.modulus());
  return XZPoint::affine(P.x());
}

bool xz_equal(const XZPoint& p, const XZPoint& q) {
  if (p.is_sentinel() || q.is_sentinel()) throw InvalidInput("(0:0) is not a projective point");
  return p.X * q.Z == q.X * p.Z;
}

XZPoint xadd(const XZPoint& p, const XZPoint& q, const XZPoint& diff, OpCount& ctr) {
  ++ctr.xadd;
  Element v0 = add(p.X, p.Z, ctr);
  Element v1 = sub(q.X, q.Z, ctr);
  v1 = mul(v1, v0, ctr);
  v0 = sub(p.X, p.Z, ctr);
  Element v2 = add(q.X, q.Z, ctr);
  v2 = mul(v2, v0, ctr);
  Element v3 = add(v1, v2, ctr);
  v3 = sqr(v3, ctr);
  Element v4 = sub(v1, v2, ctr);
  v4 = sqr(v4, ctr);
  return {mul(diff.Z, v3, ctr), mul(diff.X, v4, ctr)};
}

XZPoint xadd_normalized(const XZPoint& p, const XZPoint& q, const Element& diff_x, OpCount& ctr) {
  ++ctr.xadd;
  Element v0 = add(p.X, p.Z, ctr);
  Element v1 = sub(q.X, q.Z, ctr);
  v1 = mul(v1, v0, ctr);
  v0 = sub(p.X, p.Z, ctr);
  Element v2 = add(q.X, q.Z, ctr);
  v2 = mul(v2, v0, ctr);
  Element v3 = add(v1, v2, ctr);
  v3 = sqr(v3, ctr);
  Element v4 = sub(v1, v2, ctr);
  v4 = sqr(v4, ctr);
  return {std::move(v3), mul(diff_x, v4, ctr)};
}

XZPoint xdbl(const XZPoint& p, const Element& a24, OpCount& ctr) {
  ++ctr.xdbl;
  Element v1 = add(p.X, p.Z, ctr);
  v1 = sqr(v1, ctr);
  Element v2 = sub(p.X, p.Z, ctr);
  v2 = sqr(v2, ctr);
  Element x2 = mul(v1, v2, ctr);
  v1 = sub(v1, v2, ctr);
  Element v3 = cmul(a24, v1, ctr);
  v3 = add(v3, v2, ctr);
  return {std::move(x2), mul(v1, v3, ctr)};
}

XZPoint xadd_extended(const XZPoint& p, const XZPoint& q, const XZPoint& diff, const MontgomeryCurve& E,
                      OpCount& ctr) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  // P - Q = O: Q = P.
  if (diff.is_infinity()) return xdbl(p, E, ctr);
  // P - Q = T: P + Q = [2]Q + T.
  if (diff.is_T()) return translate_by_T(xdbl(q, E, ctr));
  return xadd(p, q, diff, ctr);
}

XZPoint generic_weierstrass_xadd(const XZPoint& p, const XZPoint& q, const XZPoint& diff,
                                 const GeneralWeierstrassCurve& W, OpCount& ctr) {
  ++ctr.xadd;
  const Element four_f0 = W.f0 + W.f0 + W.f0 + W.f0;
  const Element xx = mul(p.X, q.X, ctr);
  const Element zz = mul(p.Z, q.Z, ctr);
  Element t = sub(xx, cmul(W.f1, zz, ctr), ctr);
  t = sqr(t, ctr);
  const Element zx = mul(p.Z, q.X, ctr);
  const Element xz = mul(p.X, q.Z, ctr);
  Element s = add(zx, xz, ctr);
  s = add(s, cmul(W.f2, zz, ctr), ctr);
  s = mul(s, zz, ctr);
  s = cmul(four_f0, s, ctr);
  Element x_sum = mul(diff.Z, sub(t, s, ctr), ctr);
  Element d = sqr(sub(zx, xz, ctr), ctr);
  return {std::move(x_sum), mul(diff.X, d, ctr)};
}

XZPoint generic_weierstrass_xdbl(const XZPoint& p, const GeneralWeierstrassCurve& W, OpCount& ctr) {
  ++ctr.xdbl;
  const Element four_f0 = W.f0 + W.f0 + W.f0 + W.f0;
  const Element x2 = sqr(p.X, ctr);
  const Element z2 = sqr(p.Z, ctr);
  const Element xz = mul(p.X, p.Z, ctr);

  // X' = (X^2 - f1 Z^2)^2 - 4 f0 (2XZ + f2 Z^2) Z^2
  Element t = sqr(sub(x2, cmul(W.f1, z2, ctr), ctr), ctr);
  Element s = add(add(xz, xz, ctr), cmul(W.f2, z2, ctr), ctr);
  s = cmul(four_f0, mul(s, z2, ctr), ctr);
  Element x_out = sub(t, s, ctr);

  // Z' = 4Z (X^3 + f2 X^2 Z + f1 X Z^2 + f0 Z^3)
  Element c = mul(x2, p.X, ctr);
  c = add(c, cmul(W.f2, mul(x2, p.Z, ctr), ctr), ctr);
  c = add(c, cmul(W.f1, mul(xz, p.Z, ctr), ctr), ctr);
  c = add(c, cmul(W.f0, mul(z2, p.Z, ctr), ctr), ctr);
  c = mul(c, p.Z, ctr);
  c = add(c, c, ctr);
  c = add(c, c, ctr);
  return {std::move(x_out), std::move(c)};
}

XZPoint two_torsion_weierstrass_xadd(const XZPoint& p, const XZPoint& q, const XZPoint& diff,
                                     const GeneralWeierstrassCurve& W, OpCount& ctr) {
  ++ctr.xadd;
  const Element xx = mul(p.X, q.X, ctr);
  const Element zz = mul(p.Z, q.Z, ctr);
  const Element t = sqr(sub(xx, cmul(W.f1, zz, ctr), ctr), ctr);
  const Element d = sqr(sub(mul(p.Z, q.X, ctr), mul(p.X, q.Z, ctr), ctr), ctr);
  return {mul(diff.Z, t, ctr), mul(diff.X, d, ctr)};
}

}  // namespace montx
