// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/chains.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <random>

#include "montx/ladder.hpp"

namespace montx {

const char* to_string(EuclidStep s) {
  switch (s) {
    case EuclidStep::Swap: return "swap";
    case EuclidStep::Fibonacci: return "fibonacci";
    case EuclidStep::ParityEqual: return "parity-equal";
    case EuclidStep::S1Even: return "s1-even";
    case EuclidStep::S0Even: return "s0-even";
    case EuclidStep::Halve: return "halve";
    case EuclidStep::Ladder: return "ladder";
  }
  return "?";
}

const char* to_string(ChainAlgorithm a) { return a == ChainAlgorithm::Ladder ? "ladder" : "prac"; }

namespace {

bool is_even(const mpz_class& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

// Montgomery's ladder for s >= 2 over the extended operations; x may be x(O)
// or x(T) here.
XZPoint extended_ladder(const MontgomeryCurve& E, const mpz_class& s, const XZPoint& x, OpCount& ctr) {
  const Scalar k(s);
  XZPoint x0 = x;
  XZPoint x1 = xdbl(x, E, ctr);
  for (std::size_t i = k.length() - 1; i-- > 0;) {
    if (!k.bit(i)) {
      x1 = xadd_extended(x1, x0, x, E, ctr);
      x0 = xdbl(x0, E, ctr);
    } else {
      x0 = xadd_extended(x1, x0, x, E, ctr);
      x1 = xdbl(x1, E, ctr);
    }
  }
  return x0;
}

}  // namespace

XZPoint euclid(const MontgomeryCurve& E, const mpz_class& m, const mpz_class& n, const XZPoint& xP,
               const XZPoint& xQ, const XZPoint& xQmP, OpCount& ctr, const EuclidObserver& observer) {
  if (m < 0 || n < 0) throw InvalidInput("euclid: negative multiplier");
  if (m == 0 && n == 0) throw InvalidInput("euclid: m = n = 0");

  EuclidState st{m, n, xP, xQ, xQmP};
  auto notify = [&](EuclidStep step) {
    if (observer) observer(step, st);
  };

  while (st.s0 != 0) {
    if (st.s1 < st.s0) {
      std::swap(st.s0, st.s1);
      std::swap(st.x0, st.x1);
      notify(EuclidStep::Swap);
    }
    if (st.s1 <= 4 * st.s0) {
      XZPoint sum = xadd_extended(st.x1, st.x0, st.xd, E, ctr);
      st.s1 -= st.s0;
      st.xd = std::move(st.x0);
      st.x0 = std::move(sum);
      notify(EuclidStep::Fibonacci);
    } else if (is_even(st.s0) == is_even(st.s1)) {
      XZPoint sum = xadd_extended(st.x1, st.x0, st.xd, E, ctr);
      st.s1 = (st.s1 - st.s0) / 2;
      st.x1 = xdbl(st.x1, E, ctr);
      st.x0 = std::move(sum);
      notify(EuclidStep::ParityEqual);
    } else if (is_even(st.s1)) {
      XZPoint d = xadd_extended(st.x1, st.xd, st.x0, E, ctr);
      st.s1 /= 2;
      st.x1 = xdbl(st.x1, E, ctr);
      st.xd = std::move(d);
      notify(EuclidStep::S1Even);
    } else {
      XZPoint d = xadd_extended(st.x0, st.xd, st.x1, E, ctr);
      st.s0 /= 2;
      st.x0 = xdbl(st.x0, E, ctr);
      st.xd = std::move(d);
      notify(EuclidStep::S0Even);
    }
  }

  while (is_even(st.s1)) {
    st.s1 /= 2;
    st.x1 = xdbl(st.x1, E, ctr);
    notify(EuclidStep::Halve);
  }
  if (st.s1 > 1) {
    st.x1 = extended_ladder(E, st.s1, st.x1, ctr);
    notify(EuclidStep::Ladder);
  }
  return st.x1;
}

mpz_class golden_split(const mpz_class& k) {
  if (k < 0) throw InvalidInput("golden_split: negative input");
  // k / phi = (sqrt(5k^2) - k) / 2, and sqrt(5k^2) is irrational for k > 0,
  // so flooring the integer square root first loses nothing.
  mpz_class t;
  const mpz_class five_k2 = 5 * k * k;
  mpz_sqrt(t.get_mpz_t(), five_k2.get_mpz_t());
  mpz_class r = t - k;
  mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), 1);
  return r;
}

XZPoint prac(const MontgomeryCurve& E, const mpz_class& k, const XZPoint& xP, OpCount& ctr) {
  if (k < 1) throw InvalidInput("prac: k must be >= 1");
  mpz_class s = k;
  XZPoint x = xP;
  while (is_even(s)) {
    s /= 2;
    x = xdbl(x, E, ctr);
  }
  const mpz_class r = golden_split(s);
  return euclid(E, r, s - r, x, x, XZPoint::infinity(E.modulus()), ctr);
}

// ---------------------------------------------------------------------------

ChainStats chain_stats(const MontgomeryCurve& E, const mpz_class& k, const XZPoint& xP, ChainAlgorithm alg) {
  if (k < 2) throw InvalidInput("chain_stats: k must be >= 2");
  OpCount ctr;
  if (alg == ChainAlgorithm::Ladder) {
    x_ladder(E, Scalar(k), xP, ctr);
  } else {
    prac(E, k, xP, ctr);
  }
  ChainStats st;
  st.bitlen = bit_length(k);
  const mpz_class km1 = k - 1;
  st.log_len = bit_length(km1);
  st.xadd = ctr.xadd;
  st.xdbl = ctr.xdbl;
  st.total = st.xadd + st.xdbl;
  st.ratio = static_cast<double>(st.total) / static_cast<double>(st.log_len);
  return st;
}

namespace {

RatioSummary summarize(const std::vector<CampaignRow>& rows, ChainAlgorithm alg) {
  RatioSummary s;
  std::size_t n = 0;
  double sum = 0.0;
  for (const CampaignRow& row : rows) {
    if (row.algorithm != alg) continue;
    const double r = row.stats.ratio;
    s.min = n == 0 ? r : std::min(s.min, r);
    s.max = n == 0 ? r : std::max(s.max, r);
    sum += r;
    ++n;
  }
  if (n > 0) s.mean = sum / static_cast<double>(n);
  return s;
}

}  // namespace

CampaignResult stats_campaign(const MontgomeryCurve& E, const XZPoint& xP, std::size_t bits, std::size_t samples,
                              std::uint64_t seed) {
  if (bits < 8) throw InvalidInput("stats_campaign: bits must be >= 8");
  if (samples < 1) throw InvalidInput("stats_campaign: samples must be >= 1");
  std::mt19937_64 rng(seed);
  const mpz_class top = mpz_class(1) << (bits - 1);

  CampaignResult result;
  result.rows.reserve(2 * samples);
  for (std::size_t i = 0; i < samples; ++i) {
    mpz_class k = top + random_below(rng, top);
    mpz_setbit(k.get_mpz_t(), 0);
    for (ChainAlgorithm alg : {ChainAlgorithm::Ladder, ChainAlgorithm::Prac}) {
      result.rows.push_back({bits, alg, i, k, chain_stats(E, k, xP, alg)});
    }
  }
  result.ladder = summarize(result.rows, ChainAlgorithm::Ladder);
  result.prac = summarize(result.rows, ChainAlgorithm::Prac);
  return result;
}

void write_campaign_csv(std::ostream& out, const CampaignResult& result) {
  char buf[64];
  out << "bitlen,algorithm,sample_index,scalar_hex,xadd,xdbl,total,ratio\n";
  for (const CampaignRow& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%.6f", row.stats.ratio);
    out << row.bitlen << ',' << to_string(row.algorithm) << ',' << row.sample_index << ",0x"
        << row.scalar.get_str(16) << ',' << row.stats.xadd << ',' << row.stats.xdbl << ',' << row.stats.total
        << ',' << buf << '\n';
  }
  std::snprintf(buf, sizeof buf, "%.6f", result.ladder.mean);
  out << "# mean ratio: ladder " << buf;
  std::snprintf(buf, sizeof buf, "%.6f", result.prac.mean);
  out << ", prac " << buf;
  std::snprintf(buf, sizeof buf, "%.6f", result.prac.min);
  out << " (prac min " << buf;
  std::snprintf(buf, sizeof buf, "%.6f", result.prac.max);
  out << ", max " << buf << ")\n";
}

}  // namespace montx
