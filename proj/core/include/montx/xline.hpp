// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Projective x-line arithmetic on Montgomery curves: differential addition
// (xadd) and doubling (xdbl) with exact operation counts.
//
// An XZPoint (X : Z) represents x(P) = X/Z. x(O) = (1 : 0), x(T) = (0 : 1).
// (0, 0) is not a projective point; it is what xadd produces when the
// difference is x(O), and it is passed through untouched. ECM relies on
// such degenerate outputs.
//
// B never appears here. A appears only through the cached (A + 2)/4 in xdbl.

#ifndef MONTX_XLINE_HPP
#define MONTX_XLINE_HPP

#include "montx/curve.hpp"
#include "montx/modarith.hpp"

namespace montx {

struct XZPoint {
  Element X;
  Element Z;

  /// (0, 0): the non-point sentinel.
  bool is_sentinel() const { return X.is_zero() && Z.is_zero(); }
  /// Z = 0 with X != 0, i.e. x(O).
  bool is_infinity() const { return Z.is_zero() && !X.is_zero(); }
  /// X = 0 with Z != 0, i.e. x(T).
  bool is_T() const { return X.is_zero() && !Z.is_zero(); }

  static XZPoint infinity(const Modulus& m) { return {m.one(), m.zero()}; }
  static XZPoint T(const Modulus& m) { return {m.zero(), m.one()}; }
  static XZPoint affine(const Element& x) { return {x, x.modulus().one()}; }
};

/// (x_P : 1), or (1 : 0) for O.
XZPoint x_of(const MontgomeryCurve& E, const AffinePoint& P);

/// Projective equality X_p Z_q = X_q Z_p. Throws InvalidInput on (0, 0).
bool xz_equal(const XZPoint& p, const XZPoint& q);

/// Differential addition: x(P + Q) from x(P), x(Q) and x(P - Q).
/// Returns (0, 0) when P - Q = O. Cost 4M + 2S + 3a + 3s.
XZPoint xadd(const XZPoint& p, const XZPoint& q, const XZPoint& diff, OpCount& ctr);

/// xadd with the difference given as the affine x-coordinate (Z = 1).
/// Cost 3M + 2S + 3a + 3s.
XZPoint xadd_normalized(const XZPoint& p, const XZPoint& q, const Element& diff_x, OpCount& ctr);

/// Pseudo-doubling x(P) -> x([2]P). For P in {O, T} the output has Z = 0.
/// Cost 2M + 2S + 1C + 3a + 1s.
XZPoint xdbl(const XZPoint& p, const Element& a24, OpCount& ctr);
inline XZPoint xdbl(const XZPoint& p, const MontgomeryCurve& E, OpCount& ctr) { return xdbl(p, E.a24(), ctr); }

/// x(P + T) = (Z : X). Free.
inline XZPoint translate_by_T(const XZPoint& p) { return {p.Z, p.X}; }

/// xadd made total over the degenerate inputs that differential chains
/// produce: a summand equal to x(O), and differences x(O) or x(T).
/// Variable-time. Never use with secret scalars.
XZPoint xadd_extended(const XZPoint& p, const XZPoint& q, const XZPoint& diff, const MontgomeryCurve& E,
                      OpCount& ctr);

/// x-only formulas on y^2 = x^3 + f2 x^2 + f1 x + f0. Instrumented, not
/// optimized; with (f2, f1, f0) = (A, 1, 0) they agree projectively with
/// xadd/xdbl on E_(A,1).
XZPoint generic_weierstrass_xadd(const XZPoint& p, const XZPoint& q, const XZPoint& diff,
                                 const GeneralWeierstrassCurve& W, OpCount& ctr);
XZPoint generic_weierstrass_xdbl(const XZPoint& p, const GeneralWeierstrassCurve& W, OpCount& ctr);

/// Same as generic_weierstrass_xadd specialised to f0 = 0:
/// (Z_d (X_P X_Q - f1 Z_P Z_Q)^2 : X_d (Z_P X_Q - X_P Z_Q)^2).
XZPoint two_torsion_weierstrass_xadd(const XZPoint& p, const XZPoint& q, const XZPoint& diff,
                                     const GeneralWeierstrassCurve& W, OpCount& ctr);

}  // namespace montx

#endif  // MONTX_XLINE_HPP
