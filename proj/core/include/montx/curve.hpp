// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Montgomery curves B*y^2 = x*(x^2 + A*x + 1): parameters, the affine group
// law, 4-torsion classification, Suyama curves, and the maps to short
// Weierstrass and twisted Edwards models.
//
// Everything here is variable-time reference code built on uncounted
// arithmetic. The x-line layer (xline.hpp) is the fast path.

#ifndef MONTX_CURVE_HPP
#define MONTX_CURVE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "montx/modarith.hpp"

namespace montx {

/// A point of E(F_q) in affine form, or the point at infinity O.
class AffinePoint {
 public:
  static AffinePoint infinity() { return AffinePoint(); }
  AffinePoint(Element x, Element y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const { return !xy_.has_value(); }
  /// Throws InvalidInput for O.
  const Element& x() const;
  const Element& y() const;

  friend bool operator==(const AffinePoint& l, const AffinePoint& r) { return l.xy_ == r.xy_; }

 private:
  AffinePoint() = default;
  std::optional<std::pair<Element, Element>> xy_;
};

class MontgomeryCurve {
 public:
  /// Throws SingularCurve when B = 0 or A^2 = 4.
  MontgomeryCurve(Element A, Element B);

  const Element& A() const { return A_; }
  const Element& B() const { return B_; }
  /// (A + 2)/4, the only curve constant x-only doubling needs.
  const Element& a24() const { return a24_; }
  const Element& two_A() const { return two_A_; }
  const Element& two_B() const { return two_B_; }
  const Modulus& modulus() const { return A_.modulus(); }

  /// 256 (A^2 - 3)^3 / (A^2 - 4). Prime moduli only.
  Element j_invariant() const;

  /// x^3 + A x^2 + x.
  Element rhs(const Element& x) const;

  bool on_curve(const AffinePoint& P) const;

  /// Chord-and-tangent addition; throws InvalidInput for off-curve inputs.
  AffinePoint add(const AffinePoint& P, const AffinePoint& Q) const;
  AffinePoint neg(const AffinePoint& P) const;

  /// The distinguished 2-torsion point (0, 0).
  AffinePoint T() const { return {modulus().zero(), modulus().zero()}; }

  /// Same A, B replaced by B times the least quadratic nonsquare.
  MontgomeryCurve twist() const;

  friend bool operator==(const MontgomeryCurve& l, const MontgomeryCurve& r) {
    return l.A_ == r.A_ && l.B_ == r.B_;
  }

 private:
  Element A_;
  Element B_;
  Element a24_;
  Element two_A_;
  Element two_B_;
};

/// [k]P by left-to-right double-and-add over the affine group law.
AffinePoint scalar_mul_naive(const MontgomeryCurve& E, const mpz_class& k, const AffinePoint& P);

/// Least quadratic nonsquare modulo a prime.
Element least_nonsquare(const Modulus& m);

// ---------------------------------------------------------------------------
// Torsion

enum class TorsionStructure { Z4xZ2, Z4, Z2xZ2 };

const char* to_string(TorsionStructure s);

/// Which 4-torsion subgroup the curve and its quadratic twist are guaranteed
/// to contain, read off from the squareness of B(A+2), B(A-2) and A^2-4.
struct TorsionReport {
  bool b_square = false;
  bool a_plus_2_square = false;   // B(A+2)
  bool a_minus_2_square = false;  // B(A-2)
  bool full_two_torsion = false;  // A^2 - 4
  TorsionStructure curve = TorsionStructure::Z4;
  TorsionStructure twist = TorsionStructure::Z4;
};

TorsionReport classify_torsion(const MontgomeryCurve& E);

/// #E(F_q) by character sum; q must be at most 2^20.
mpz_class group_order_naive(const MontgomeryCurve& E);

// ---------------------------------------------------------------------------
// Suyama

/// A = -(3a^4 + 6a^2 - 1)/4a^3, B = (a^2 - 1)^2/4ab^2. The point (a, b) then
/// has order 3. Throws InvalidInput unless ab(a^2 - 1)(9a^2 - 1) != 0.
std::pair<MontgomeryCurve, AffinePoint> suyama(const Element& a, const Element& b);

// ---------------------------------------------------------------------------
// Weierstrass models

/// y^2 = x^3 + f2 x^2 + f1 x + f0.
struct GeneralWeierstrassCurve {
  Element f2;
  Element f1;
  Element f0;

  bool on_curve(const AffinePoint& P) const;
  bool is_nonsingular() const;
  AffinePoint add(const AffinePoint& P, const AffinePoint& Q) const;
};

/// E_(A,B) in short form v^2 = u^3 + a u + b, with the isomorphism
/// (x, y) -> (B(x + A/3), B^2 y) and its inverse.
struct WeierstrassModel {
  GeneralWeierstrassCurve curve;  // f2 = 0
  Element A_over_3;
  Element B;

  AffinePoint from_montgomery(const AffinePoint& P) const;
  AffinePoint to_montgomery(const AffinePoint& P) const;
};

/// Throws InvalidInput in characteristic 3.
WeierstrassModel to_weierstrass(const MontgomeryCurve& E);

/// A Montgomery model E_(3 alpha/beta, 1/beta) of a short Weierstrass curve,
/// with alpha the least root of u^3 + a u + b for which 3 alpha^2 + a is a
/// nonzero square beta^2, and the map (u, v) -> ((u - alpha)/beta, v/beta).
struct MontgomeryModel {
  MontgomeryCurve curve;
  Element alpha;
  Element beta;

  AffinePoint from_weierstrass(const AffinePoint& P) const;
};

std::optional<MontgomeryModel> from_weierstrass(const GeneralWeierstrassCurve& W);

/// Roots of a monic cubic x^3 + c2 x^2 + c1 x + c0 over a prime field, in
/// ascending order. Exhaustive scan for q <= 2^20, otherwise distinct-degree
/// splitting with deterministic shifts.
std::vector<Element> cubic_roots(const Element& c2, const Element& c1, const Element& c0);

// ---------------------------------------------------------------------------
// Twisted Edwards models

/// a u^2 + v^2 = 1 + d u^2 v^2.
struct EdwardsCurve {
  Element a;
  Element d;

  bool on_curve(const Element& u, const Element& v) const;
};

struct EdwardsPoint {
  Element u;
  Element v;
  friend bool operator==(const EdwardsPoint&, const EdwardsPoint&) = default;
};

/// a = (A + 2)/B, d = (A - 2)/B.
EdwardsCurve to_edwards(const MontgomeryCurve& E);

/// (x, y) -> (x/y, (x - 1)/(x + 1)); O -> (0, 1) and T -> (0, -1).
/// Returns nullopt for the exceptional points with no affine image
/// (y = 0 other than T, and x = -1).
std::optional<EdwardsPoint> edwards_point_map(const MontgomeryCurve& E, const AffinePoint& P);

/// (u, v) -> ((1 + v)/(1 - v), (1 + v)/((1 - v) u)); (0, 1) -> O and
/// (0, -1) -> T. Returns nullopt for any other input with u = 0 or v = 1.
std::optional<AffinePoint> edwards_point_unmap(const MontgomeryCurve& E, const EdwardsPoint& P);

}  // namespace montx

#endif  // MONTX_CURVE_HPP
