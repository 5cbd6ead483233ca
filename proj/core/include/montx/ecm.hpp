// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Stage 1 of Lenstra's elliptic curve method over Z/NZ, on the Montgomery
// x-line.
//
// Each attempt draws a Suyama curve from a parameter sigma, multiplies a
// starting x-coordinate by L = lcm(1..B1) with PRAC, one prime at a time,
// and tests gcd(Z, N). Z vanishes modulo every prime p | N for which the
// curve order mod p is B1-smooth (up to the prime-power bound).

#ifndef MONTX_ECM_HPP
#define MONTX_ECM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "montx/curve.hpp"
#include "montx/xline.hpp"

namespace montx {

struct EcmConfig {
  mpz_class N;
  unsigned long B1 = 1000;
  unsigned max_curves = 20;
  std::uint64_t seed = 1;
};

struct EcmResult {
  /// 1 < factor < N and factor | N, when present.
  std::optional<mpz_class> factor;
  unsigned curves_tried = 0;
  /// The sigma of the curve that produced the factor.
  std::optional<mpz_class> sigma_of_success;
};

/// Throws InvalidInput when N is even, < 15, prime or a perfect power, or
/// when B1 < 2 or max_curves = 0.
void validate(const EcmConfig& cfg);

/// Ascending prime powers p^e with p^e <= B1 < p^(e+1), one per prime p <= B1.
std::vector<unsigned long> lcm_exponent_schedule(unsigned long B1);

/// A curve attempt over Z/NZ: the curve (A, 1) and the starting x.
struct SuyamaCurve {
  mpz_class sigma;
  MontgomeryCurve curve;
  XZPoint start;
};

/// Either a curve or, when a setup inversion fails, the factor it exposed.
/// gcd is 1 in the first case and a divisor of N (possibly N) otherwise.
struct SuyamaSetup {
  std::optional<SuyamaCurve> curve;
  mpz_class gcd;
};

/// Builds the sigma curve over Z/NZ:
///   u = sigma^2 - 5, v = 4 sigma,
///   (A + 2)/4 = (v - u)^3 (3u + v) / (16 u^3 v),  x = u^3 / v^3.
/// Over a prime field this is the Suyama curve with seed a = u/v, and
/// (x : 1) lies on the same twist as the 3-torsion point, so 12 divides the
/// order of whichever of E, E' it is on.
SuyamaSetup suyama_sigma_curve(const Modulus& N, const mpz_class& sigma);

/// Multiplies x by every prime power in the schedule using prac on each
/// prime, repeated e times.
XZPoint stage1_multiply(const MontgomeryCurve& E, const XZPoint& x, unsigned long B1, OpCount& ctr);

/// Deterministic in cfg.seed. Tries up to cfg.max_curves curves.
EcmResult stage1(const EcmConfig& cfg);

}  // namespace montx

#endif  // MONTX_ECM_HPP
