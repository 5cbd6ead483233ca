// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Euclidean differential addition chains: the two-dimensional EUCLID
// pseudomultiplication (binary transformations only), the one-dimensional
// PRAC wrapper, and a chain-length statistics harness.
//
// Everything here is variable-time. Use it for public scalars only (ECM,
// verification); secret scalars belong to uniform_ladder.

#ifndef MONTX_CHAINS_HPP
#define MONTX_CHAINS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "montx/curve.hpp"
#include "montx/xline.hpp"

namespace montx {

enum class EuclidStep {
  Swap,
  Fibonacci,    // (s0, s1 - s0)
  ParityEqual,  // (s0, (s1 - s0)/2)
  S1Even,       // (s0, s1/2)
  S0Even,       // (s0/2, s1)
  Halve,        // trailing s1 <- s1/2 after the main loop
  Ladder,       // terminal ladder on the odd residue
};

const char* to_string(EuclidStep s);

/// (s0, s1) with (x0, x1, xd) = (x(R0), x(R1), x(R1 - R0)) for some R0, R1
/// such that [s0]R0 + [s1]R1 = [m]P + [n]Q.
struct EuclidState {
  mpz_class s0;
  mpz_class s1;
  XZPoint x0;
  XZPoint x1;
  XZPoint xd;
};

/// Called after every transformation with the step kind and the new state.
using EuclidObserver = std::function<void(EuclidStep, const EuclidState&)>;

/// x([m]P + [n]Q) from x(P), x(Q) and x(Q - P). m, n >= 0, not both zero.
/// Runs on xadd_extended, so x(O) and x(T) are legal anywhere.
XZPoint euclid(const MontgomeryCurve& E, const mpz_class& m, const mpz_class& n, const XZPoint& xP,
               const XZPoint& xQ, const XZPoint& xQmP, OpCount& ctr, const EuclidObserver& observer = {});

/// floor(k / phi), phi the golden ratio, in exact integer arithmetic.
mpz_class golden_split(const mpz_class& k);

/// x([k]P) for k >= 1: strip factors of two with xdbl, then
/// euclid((r, s - r), (x, x, x(O))) with r = floor(s / phi).
XZPoint prac(const MontgomeryCurve& E, const mpz_class& k, const XZPoint& xP, OpCount& ctr);

// ---------------------------------------------------------------------------
// Statistics

enum class ChainAlgorithm { Ladder, Prac };

const char* to_string(ChainAlgorithm a);

struct ChainStats {
  std::size_t bitlen = 0;
  /// ceil(log2 k): the ratio denominator. Equals bitlen except at powers of two.
  std::size_t log_len = 0;
  std::uint64_t xadd = 0;
  std::uint64_t xdbl = 0;
  std::uint64_t total = 0;
  double ratio = 0.0;
};

/// Runs the chosen algorithm for [k]P and reports its x-line operation
/// counts, including those inside euclid's terminal ladder. k >= 2.
ChainStats chain_stats(const MontgomeryCurve& E, const mpz_class& k, const XZPoint& xP, ChainAlgorithm alg);

struct CampaignRow {
  std::size_t bitlen;
  ChainAlgorithm algorithm;
  std::size_t sample_index;
  mpz_class scalar;
  ChainStats stats;
};

struct RatioSummary {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct CampaignResult {
  std::vector<CampaignRow> rows;
  RatioSummary ladder;
  RatioSummary prac;
};

/// `samples` random odd scalars of exactly `bits` bits drawn from
/// mt19937_64(seed), each measured under both algorithms. bits >= 8.
CampaignResult stats_campaign(const MontgomeryCurve& E, const XZPoint& xP, std::size_t bits, std::size_t samples,
                              std::uint64_t seed);

/// CSV with header bitlen,algorithm,sample_index,scalar_hex,xadd,xdbl,total,ratio
/// followed by a "# ..." summary line.
void write_campaign_csv(std::ostream& out, const CampaignResult& result);

}  // namespace montx

#endif  // MONTX_CHAINS_HPP
