// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Scalar pseudomultiplication on Montgomery curves.
//
//   group_ladder     Montgomery's binary ladder on full affine points.
//   x_ladder         the x-only ladder with branches; returns x([k]P) and
//                    x([k+1]P).
//   uniform_ladder   branch-free ladder driven by conditional swaps. Its
//                    sequence of field operations and swaps depends only on
//                    the scalar length.
//   recover          Okeya-Sakurai y-coordinate recovery.
//   scalar_mul       x_ladder followed by recover.
//   x0               Bernstein's x0 map; accepts any field element.
//
// The uniform ladder is constant-time at the level of its operation trace
// and control flow. The big-integer arithmetic underneath (GMP) is not
// constant-time.

#ifndef MONTX_LADDER_HPP
#define MONTX_LADDER_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "montx/curve.hpp"
#include "montx/xline.hpp"

namespace montx {

/// A nonnegative scalar viewed as a bitstring k_{l-1} ... k_0.
///
/// The length defaults to bitlen(value). A longer, fixed length can be
/// requested for ladders that must not depend on the position of the top
/// set bit.
class Scalar {
 public:
  explicit Scalar(mpz_class value);
  Scalar(mpz_class value, std::size_t length);
  explicit Scalar(unsigned long value) : Scalar(mpz_class(value)) {}

  const mpz_class& value() const { return value_; }
  std::size_t length() const { return length_; }
  bool bit(std::size_t i) const { return mpz_tstbit(value_.get_mpz_t(), i) != 0; }
  bool top_bit_set() const { return length_ > 0 && bit(length_ - 1); }

 private:
  mpz_class value_;
  std::size_t length_;
};

enum class ScalarMode {
  /// k_{l-1} = 1; the ladder starts from (x(P), x([2]P)).
  TopBitSet,
  /// Any l-bit string; the ladder starts from (x(O), x(P)).
  FixedLength,
};

struct LadderOutput {
  XZPoint xk;   // x([k]P)
  XZPoint xk1;  // x([k+1]P)
};

/// Called after each ladder iteration with the bit index i and (R0, R1).
using GroupLadderObserver = std::function<void(std::size_t, const AffinePoint&, const AffinePoint&)>;

/// [k]P via the (R0, R1) ladder state machine. k must have its top bit set.
AffinePoint group_ladder(const MontgomeryCurve& E, const Scalar& k, const AffinePoint& P,
                         const GroupLadderObserver& observer = {});

/// Requires k >= 1 with length = bitlen(k). Uses xadd_normalized when
/// xP.Z = 1. Cost: (l - 1) xadd + l xdbl. For P in {O, T} the Z
/// coordinates of the output are 0.
LadderOutput x_ladder(const MontgomeryCurve& E, const Scalar& k, const XZPoint& xP, OpCount& ctr);

/// Constant-time conditional swap on the fixed-length byte encodings of
/// both coordinates: (x0, x1) when b = 0, (x1, x0) when b = 1.
std::pair<XZPoint, XZPoint> cswap(unsigned b, const XZPoint& x0, const XZPoint& x1);

/// x([k]P) by the uniform ladder. TopBitSet performs l - 1 swapped steps
/// plus a final swap; FixedLength performs l steps from (x(O), x(P)) plus a
/// final swap, so leading zero bits are allowed and k = 0 yields Z = 0.
XZPoint uniform_ladder(const MontgomeryCurve& E, const Scalar& k, const XZPoint& xP, OpCount& ctr,
                       ScalarMode mode = ScalarMode::TopBitSet);

/// Q = (X' : Y' : Z') in projective plane coordinates.
struct ProjectivePoint {
  Element X;
  Element Y;
  Element Z;

  /// O when Z = 0.
  AffinePoint to_affine() const;
};

/// Recovers Q from P, x(Q) and x(P + Q). Needs P not 2-torsion and Q not in
/// {P, -P, O}; otherwise the output is unspecified.
/// Cost 10M + 1S + 2C + 3a + 3s (the constants are 2A and 2B).
ProjectivePoint recover(const MontgomeryCurve& E, const AffinePoint& P, const XZPoint& xQ, const XZPoint& xPQ,
                        OpCount& ctr);

/// [k]P through x_ladder and recover. Throws InvalidInput for 2-torsion P
/// or k = 0. Results O, P and -P, which recover cannot produce, are
/// detected from the ladder output.
AffinePoint scalar_mul(const MontgomeryCurve& E, const Scalar& k, const AffinePoint& P);

/// Runs the uniform ladder on (x : 1) and returns X_k Z_k^(q-2): the affine
/// x-coordinate of [k]P, or 0 when [k]P = O. x may be any field element;
/// the point it lifts to may lie on the curve or on its twist.
Element x0(const MontgomeryCurve& E, const Element& x, const Scalar& k, ScalarMode mode = ScalarMode::FixedLength);

// ---------------------------------------------------------------------------
// Diffie-Hellman

struct DhParams {
  std::string name;
  MontgomeryCurve curve;
  Element base_x;
  /// lcm of the curve and twist cofactors.
  mpz_class cofactor_lcm;
  /// Secret scalar length in bits.
  std::size_t scalar_bits;
  ScalarMode mode = ScalarMode::FixedLength;
};

/// "curve25519" or "curve448"; throws InvalidInput otherwise.
DhParams named_curve(const std::string& name);

struct DhKeypair {
  Scalar secret;
  Element public_x;
};

/// Draws a secret that is a multiple of the cofactor lcm and fits the
/// scalar convention of `params.mode`, then publishes x0(base, secret).
DhKeypair dh_keypair(const DhParams& params, std::mt19937_64& rng);
DhKeypair dh_keypair(const DhParams& params, std::uint64_t seed);

/// Wraps a raw secret value in the scalar convention of `params`.
Scalar dh_scalar(const DhParams& params, const mpz_class& secret);

Element dh_public(const DhParams& params, const Scalar& secret);
Element dh_shared(const DhParams& params, const Scalar& secret, const Element& peer_public);

/// Uniform integer in [0, bound) from a 64-bit engine.
mpz_class random_below(std::mt19937_64& rng, const mpz_class& bound);

}  // namespace montx

#endif  // MONTX_LADDER_HPP
