// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/ladder.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace montx {

Scalar::Scalar(mpz_class value) : value_(std::move(value)), length_(0) {
  if (value_ < 0) throw InvalidInput("negative scalar");
  length_ = bit_length(value_);
}

Scalar::Scalar(mpz_class value, std::size_t length) : value_(std::move(value)), length_(length) {
  if (value_ < 0) throw InvalidInput("negative scalar");
  if (bit_length(value_) > length_) throw InvalidInput("scalar does not fit in " + std::to_string(length) + " bits");
}

namespace {

void require_top_bit(const Scalar& k) {
  if (k.value() < 1 || !k.top_bit_set()) {
    throw InvalidInput("ladder requires k >= 1 with its top bit set");
  }
}

// One differential addition with difference x(P), normalized when possible.
XZPoint ladder_add(const XZPoint& a, const XZPoint& b, const XZPoint& xP, OpCount& ctr) {
  if (xP.Z.is_one()) return xadd_normalized(a, b, xP.X, ctr);
  return xadd(a, b, xP, ctr);
}

}  // namespace

AffinePoint group_ladder(const MontgomeryCurve& E, const Scalar& k, const AffinePoint& P,
                         const GroupLadderObserver& observer) {
  require_top_bit(k);
  if (!E.on_curve(P)) throw InvalidInput("point not on curve");
  AffinePoint R0 = P;
  AffinePoint R1 = E.add(P, P);
  for (std::size_t i = k.length() - 1; i-- > 0;) {
    if (!k.bit(i)) {
      R1 = E.add(R0, R1);
      R0 = E.add(R0, R0);
    } else {
      R0 = E.add(R0, R1);
      R1 = E.add(R1, R1);
    }
    if (observer) observer(i, R0, R1);
  }
  return R0;
}

LadderOutput x_ladder(const MontgomeryCurve& E, const Scalar& k, const XZPoint& xP, OpCount& ctr) {
  require_top_bit(k);
  XZPoint x0 = xP;
  XZPoint x1 = xdbl(xP, E, ctr);
  for (std::size_t i = k.length() - 1; i-- > 0;) {
    if (!k.bit(i)) {
      x1 = ladder_add(x0, x1, xP, ctr);
      x0 = xdbl(x0, E, ctr);
    } else {
      x0 = ladder_add(x0, x1, xP, ctr);
      x1 = xdbl(x1, E, ctr);
    }
  }
  return {std::move(x0), std::move(x1)};
}

std::pair<XZPoint, XZPoint> cswap(unsigned b, const XZPoint& x0, const XZPoint& x1) {
  const Modulus& m = x0.X.modulus();
  const std::size_t n = m.byte_length();
  std::vector<std::uint8_t> s0 = encode(x0.X);
  std::vector<std::uint8_t> s1 = encode(x1.X);
  const std::vector<std::uint8_t> z0 = encode(x0.Z);
  const std::vector<std::uint8_t> z1 = encode(x1.Z);
  s0.insert(s0.end(), z0.begin(), z0.end());
  s1.insert(s1.end(), z1.begin(), z1.end());

  const auto mask = static_cast<std::uint8_t>(0u - (b & 1u));
  for (std::size_t i = 0; i < s0.size(); ++i) {
    const std::uint8_t v = mask & (s0[i] ^ s1[i]);
    s0[i] ^= v;
    s1[i] ^= v;
  }

  auto unpack = [&](const std::vector<std::uint8_t>& s) {
    return XZPoint{decode(std::span(s).first(n), m), decode(std::span(s).subspan(n), m)};
  };
  return {unpack(s0), unpack(s1)};
}

XZPoint uniform_ladder(const MontgomeryCurve& E, const Scalar& k, const XZPoint& xP, OpCount& ctr,
                       ScalarMode mode) {
  auto swap = [&ctr](unsigned b, XZPoint& a, XZPoint& c) {
    ++ctr.cswap;
    ctr.record(OpKind::Swap);
    auto [s0, s1] = cswap(b, a, c);
    a = std::move(s0);
    c = std::move(s1);
  };

  XZPoint t0 = XZPoint::infinity(E.modulus());
  XZPoint t1 = xP;
  std::size_t steps = k.length();
  unsigned prev = 0;
  if (mode == ScalarMode::TopBitSet) {
    require_top_bit(k);
    t0 = xdbl(xP, E, ctr);
    steps = k.length() - 1;
    prev = 1;
  }
  for (std::size_t i = steps; i-- > 0;) {
    const unsigned bit = k.bit(i) ? 1u : 0u;
    swap(prev ^ bit, t0, t1);
    XZPoint sum = ladder_add(t0, t1, xP, ctr);
    t0 = xdbl(t0, E, ctr);
    t1 = std::move(sum);
    prev = bit;
  }
  swap(k.bit(0) ? 1u : 0u, t0, t1);
  return t0;
}

AffinePoint ProjectivePoint::to_affine() const {
  if (Z.is_zero()) return AffinePoint::infinity();
  const Element z_inv = inv(Z);
  return {X * z_inv, Y * z_inv};
}

ProjectivePoint recover(const MontgomeryCurve& E, const AffinePoint& P, const XZPoint& xQ, const XZPoint& xPQ,
                        OpCount& ctr) {
  const Element& xp = P.x();
  Element v1 = mul(xp, xQ.Z, ctr);
  Element v2 = add(xQ.X, v1, ctr);
  Element v3 = sub(xQ.X, v1, ctr);
  v3 = sqr(v3, ctr);
  v3 = mul(v3, xPQ.X, ctr);
  v1 = cmul(E.two_A(), xQ.Z, ctr);
  v2 = add(v2, v1, ctr);
  Element v4 = mul(xp, xQ.X, ctr);
  v4 = add(v4, xQ.Z, ctr);
  v2 = mul(v2, v4, ctr);
  v1 = mul(v1, xQ.Z, ctr);
  v2 = sub(v2, v1, ctr);
  v2 = mul(v2, xPQ.Z, ctr);
  Element y = sub(v2, v3, ctr);
  v1 = cmul(E.two_B(), P.y(), ctr);
  v1 = mul(v1, xQ.Z, ctr);
  v1 = mul(v1, xPQ.Z, ctr);
  Element x = mul(v1, xQ.X, ctr);
  Element z = mul(v1, xQ.Z, ctr);
  return {std::move(x), std::move(y), std::move(z)};
}

AffinePoint scalar_mul(const MontgomeryCurve& E, const Scalar& k, const AffinePoint& P) {
  if (!E.on_curve(P)) throw InvalidInput("point not on curve");
  if (P.is_infinity() || P.y().is_zero()) {
    throw InvalidInput("scalar_mul: P is 2-torsion; [k]P is O or has y = 0");
  }
  OpCount ctr;
  const Scalar kk(k.value());
  const LadderOutput out = x_ladder(E, kk, x_of(E, P), ctr);
  if (out.xk.Z.is_zero()) return AffinePoint::infinity();
  if (xz_equal(out.xk, XZPoint::affine(P.x()))) {
    // [k]P = -P exactly when [k+1]P = O.
    return out.xk1.Z.is_zero() ? E.neg(P) : P;
  }
  return recover(E, P, out.xk, out.xk1, ctr).to_affine();
}

Element x0(const MontgomeryCurve& E, const Element& x, const Scalar& k, ScalarMode mode) {
  OpCount ctr;
  const XZPoint r = uniform_ladder(E, k, XZPoint::affine(x), ctr, mode);
  return mul(r.X, pow(r.Z, E.modulus().value() - 2, ctr), ctr);
}

// ---------------------------------------------------------------------------

DhParams named_curve(const std::string& name) {
  if (name == "curve25519") {
    const mpz_class q = (mpz_class(1) << 255) - 19;
    const Modulus m = Modulus::prime(q);
    return {name, MontgomeryCurve(m.element(486662), m.one()), m.element(9), 8, 255, ScalarMode::FixedLength};
  }
  if (name == "curve448") {
    const mpz_class q = (mpz_class(1) << 448) - (mpz_class(1) << 224) - 1;
    const Modulus m = Modulus::prime(q);
    return {name, MontgomeryCurve(m.element(156326), m.one()), m.element(5), 4, 448, ScalarMode::FixedLength};
  }
  throw InvalidInput("unknown curve '" + name + "' (known: curve25519, curve448)");
}

mpz_class random_below(std::mt19937_64& rng, const mpz_class& bound) {
  if (bound <= 0) throw InvalidInput("random_below: bound must be positive");
  const std::size_t bits = bit_length(bound);
  const std::size_t words = (bits + 63) / 64;
  for (;;) {
    mpz_class v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      v <<= 64;
      const std::uint64_t r = rng();
      v += mpz_class(static_cast<unsigned long>(r >> 32)) << 32;
      v += static_cast<unsigned long>(r & 0xffffffffu);
    }
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    if (v < bound) return v;
  }
}

Scalar dh_scalar(const DhParams& params, const mpz_class& secret) {
  if (params.mode == ScalarMode::FixedLength) return Scalar(secret, params.scalar_bits);
  Scalar k(secret);
  if (k.length() != params.scalar_bits) {
    throw InvalidInput("secret must have exactly " + std::to_string(params.scalar_bits) + " bits");
  }
  return k;
}

DhKeypair dh_keypair(const DhParams& params, std::mt19937_64& rng) {
  const mpz_class& c = params.cofactor_lcm;
  const mpz_class full = mpz_class(1) << params.scalar_bits;
  mpz_class secret;
  if (params.mode == ScalarMode::FixedLength) {
    secret = c * random_below(rng, full / c);
  } else {
    const mpz_class half = mpz_class(1) << (params.scalar_bits - 1);
    const mpz_class lo = (half + c - 1) / c;
    const mpz_class hi = (full - 1) / c;
    secret = c * (lo + random_below(rng, hi - lo + 1));
  }
  Scalar k = dh_scalar(params, secret);
  Element pub = dh_public(params, k);
  return {std::move(k), std::move(pub)};
}

DhKeypair dh_keypair(const DhParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return dh_keypair(params, rng);
}

Element dh_public(const DhParams& params, const Scalar& secret) {
  return x0(params.curve, params.base_x, secret, params.mode);
}

Element dh_shared(const DhParams& params, const Scalar& secret, const Element& peer_public) {
  return x0(params.curve, peer_public, secret, params.mode);
}

}  // namespace montx
