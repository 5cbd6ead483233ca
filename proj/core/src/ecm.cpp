// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/ecm.hpp"

#include <random>

#include "montx/chains.hpp"
#include "montx/ladder.hpp"

namespace montx {

void validate(const EcmConfig& cfg) {
  const mpz_class& N = cfg.N;
  if (N < 15) throw InvalidInput("N must be at least 15");
  if (mpz_even_p(N.get_mpz_t())) throw InvalidInput("N is even");
  if (is_probable_prime(N)) throw InvalidInput("N is prime");
  if (mpz_perfect_power_p(N.get_mpz_t())) throw InvalidInput("N is a perfect power");
  if (cfg.B1 < 2) throw InvalidInput("B1 must be at least 2");
  if (cfg.max_curves == 0) throw InvalidInput("curve budget must be positive");
}

std::vector<unsigned long> lcm_exponent_schedule(unsigned long B1) {
  if (B1 < 2) throw InvalidInput("B1 must be at least 2");
  std::vector<bool> composite(B1 + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p <= B1; ++p) {
    if (composite[p]) continue;
    for (unsigned long j = p * p; j <= B1; j += p) composite[j] = true;
    unsigned long q = p;
    while (q <= B1 / p) q *= p;
    out.push_back(q);
  }
  return out;
}

SuyamaSetup suyama_sigma_curve(const Modulus& N, const mpz_class& sigma) {
  const Element s = N.element(sigma);
  const Element u = s * s - N.element(5);
  const Element v = N.element(4) * s;
  const Element u3 = u * u * u;
  const Element v3 = v * v * v;
  const Element vmu = v - u;

  InverseOrFactor den = invert_or_gcd(N.element(16) * u3 * v);
  if (!den.inverse) return {std::nullopt, den.gcd};
  InverseOrFactor vinv = invert_or_gcd(v3);
  if (!vinv.inverse) return {std::nullopt, vinv.gcd};

  const Element a24 = vmu * vmu * vmu * (N.element(3) * u + v) * *den.inverse;
  const Element A = N.element(4) * a24 - N.element(2);
  const Element A2m4 = A * A - N.element(4);
  const mpz_class g = gcd(A2m4.value(), N.value());
  if (g != 1) return {std::nullopt, g};

  return {SuyamaCurve{sigma, MontgomeryCurve(A, N.one()), XZPoint::affine(u3 * *vinv.inverse)}, mpz_class(1)};
}

XZPoint stage1_multiply(const MontgomeryCurve& E, const XZPoint& x, unsigned long B1, OpCount& ctr) {
  XZPoint acc = x;
  for (unsigned long q : lcm_exponent_schedule(B1)) {
    // q = p^e; recover p as the smallest divisor.
    unsigned long p = 2;
    while (q % p != 0) ++p;
    for (unsigned long r = q; r > 1; r /= p) acc = prac(E, mpz_class(p), acc, ctr);
  }
  return acc;
}

EcmResult stage1(const EcmConfig& cfg) {
  validate(cfg);
  const Modulus N = Modulus::composite(cfg.N);
  std::mt19937_64 rng(cfg.seed);
  // sigma in [6, N - 1]; sigma in {0, 1, 5} mod p would make the curve degenerate.
  const mpz_class span = cfg.N - 6;

  EcmResult result;
  for (unsigned c = 0; c < cfg.max_curves; ++c) {
    const mpz_class sigma = 6 + random_below(rng, span);
    ++result.curves_tried;

    auto found = [&](const mpz_class& g) {
      if (g > 1 && g < cfg.N) {
        result.factor = g;
        result.sigma_of_success = sigma;
        return true;
      }
      return false;
    };

    if (found(gcd(sigma, cfg.N))) return result;
    const SuyamaSetup setup = suyama_sigma_curve(N, sigma);
    if (!setup.curve) {
      if (found(setup.gcd)) return result;
      continue;
    }
    OpCount ctr;
    const XZPoint out = stage1_multiply(setup.curve->curve, setup.curve->start, cfg.B1, ctr);
    if (found(gcd(out.Z.value(), cfg.N))) return result;
  }
  return result;
}

}  // namespace montx
