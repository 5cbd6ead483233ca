// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "montx/chains.hpp"
#include "montx/config.hpp"
#include "montx/curve.hpp"
#include "montx/ecm.hpp"
#include "montx/ladder.hpp"

namespace montx::cli {

namespace {

// Where a command takes its curve from: --curve NAME, --config FILE, or
// explicit --q/--A/--B.
struct CurveSource {
  std::string name;
  std::string config;
  std::string q, A, B;

  void add_to(CLI::App* app, bool explicit_params) {
    auto* c = app->add_option("--curve", name, "named curve: curve25519 or curve448");
    auto* f = app->add_option("--config", config, "curve configuration file");
    c->excludes(f);
    if (explicit_params) {
      auto* oq = app->add_option("--q", q, "field characteristic");
      app->add_option("--A", A, "curve coefficient A")->needs(oq);
      app->add_option("--B", B, "curve coefficient B")->needs(oq);
      oq->excludes(c)->excludes(f);
    }
  }
};

struct ResolvedCurve {
  std::string name;
  MontgomeryCurve curve;
  std::optional<Element> base_x;
  std::optional<mpz_class> cofactor_lcm;
  std::size_t scalar_bits;
};

ResolvedCurve resolve(const CurveSource& src, const std::string& fallback = "") {
  if (!src.config.empty()) {
    CurveConfig cfg = load_curve_config(src.config);
    std::optional<mpz_class> lcm;
    if (cfg.cofactor || cfg.twist_cofactor) {
      lcm = 1;
      for (const auto& c : {cfg.cofactor, cfg.twist_cofactor}) {
        if (c) mpz_lcm(lcm->get_mpz_t(), lcm->get_mpz_t(), c->get_mpz_t());
      }
    }
    const std::size_t bits = cfg.curve.modulus().bit_length();
    return {cfg.name, cfg.curve, cfg.base_x, lcm, bits};
  }
  if (!src.q.empty()) {
    if (src.A.empty() || src.B.empty()) throw InvalidInput("--q needs both --A and --B");
    const mpz_class q = parse_integer(src.q);
    if (q < 3 || !is_probable_prime(q)) throw InvalidInput("q must be an odd prime");
    const Modulus m = Modulus::prime(q);
    MontgomeryCurve E(m.element(parse_integer(src.A)), m.element(parse_integer(src.B)));
    return {"custom", E, std::nullopt, std::nullopt, m.bit_length()};
  }
  const std::string name = src.name.empty() ? fallback : src.name;
  if (name.empty()) throw InvalidInput("no curve given: use --curve, --config or --q/--A/--B");
  DhParams p = named_curve(name);
  return {p.name, p.curve, p.base_x, p.cofactor_lcm, p.scalar_bits};
}

DhParams dh_params(const ResolvedCurve& rc) {
  if (!rc.base_x) throw InvalidInput("curve '" + rc.name + "' has no base_x");
  if (!rc.cofactor_lcm) throw InvalidInput("curve '" + rc.name + "' has no cofactor data");
  return {rc.name, rc.curve, *rc.base_x, *rc.cofactor_lcm, rc.scalar_bits, ScalarMode::FixedLength};
}

std::string hex(const Element& e) { return to_hex(encode(e)); }

Element parse_element_hex(const std::string& text, const Modulus& m) {
  const std::vector<std::uint8_t> bytes = from_hex(text);
  if (bytes.size() != m.byte_length()) {
    throw EncodingError("expected " + std::to_string(m.byte_length()) + " bytes of hex, got " +
                        std::to_string(bytes.size()));
  }
  return decode(bytes, m);
}

std::string read_trimmed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

// ---------------------------------------------------------------------------

void curve_info(const CurveSource& src, std::ostream& out) {
  const ResolvedCurve rc = resolve(src);
  const MontgomeryCurve& E = rc.curve;
  const Modulus& m = E.modulus();
  const TorsionReport t = classify_torsion(E);
  const EdwardsCurve ed = to_edwards(E);

  out << "name: " << rc.name << '\n';
  out << "q: " << m.value().get_str() << '\n';
  out << "A: " << E.A().value().get_str() << '\n';
  out << "B: " << E.B().value().get_str() << '\n';
  out << "j-invariant: " << E.j_invariant().value().get_str() << '\n';
  out << "(A+2)/4: " << E.a24().value().get_str() << '\n';
  out << "B(A+2) square: " << (t.a_plus_2_square ? "yes" : "no") << '\n';
  out << "B(A-2) square: " << (t.a_minus_2_square ? "yes" : "no") << '\n';
  out << "A^2-4 square: " << (t.full_two_torsion ? "yes" : "no") << '\n';
  out << "torsion curve: " << to_string(t.curve) << '\n';
  out << "torsion twist: " << to_string(t.twist) << '\n';
  out << "edwards a: " << ed.a.value().get_str() << '\n';
  out << "edwards d: " << ed.d.value().get_str() << '\n';
  if (m.value() <= (1u << 20)) {
    const mpz_class n = group_order_naive(E);
    out << "order: " << n.get_str() << '\n';
    out << "twist order: " << mpz_class(2 * m.value() + 2 - n).get_str() << '\n';
  }
}

struct DhArgs {
  CurveSource src;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string secret_file;
  std::string peer;
};

Scalar read_secret(const DhParams& p, const std::string& path) {
  if (path.empty()) throw InvalidInput("--secret-file is required");
  const std::vector<std::uint8_t> bytes = from_hex(read_trimmed(path));
  if (bytes.size() != p.curve.modulus().byte_length()) throw EncodingError("secret has the wrong length");
  return dh_scalar(p, decode_integer(bytes));
}

std::string secret_hex(const DhParams& p, const Scalar& k) {
  return to_hex(encode_integer(k.value(), p.curve.modulus().byte_length()));
}

void dh_keygen(const DhArgs& a, std::ostream& out) {
  if (!a.seed_given) throw InvalidInput("--seed is required");
  const DhParams p = dh_params(resolve(a.src, "curve25519"));
  const DhKeypair kp = dh_keypair(p, a.seed);
  const std::string sk = secret_hex(p, kp.secret);
  if (!a.secret_file.empty()) {
    std::ofstream f(a.secret_file);
    if (!f) throw InvalidInput("cannot write '" + a.secret_file + "'");
    f << sk << '\n';
  }
  out << "secret: " << sk << '\n';
  out << "public: " << hex(kp.public_x) << '\n';
}

void dh_pub(const DhArgs& a, std::ostream& out) {
  const DhParams p = dh_params(resolve(a.src, "curve25519"));
  out << hex(dh_public(p, read_secret(p, a.secret_file))) << '\n';
}

void dh_shared_cmd(const DhArgs& a, std::ostream& out) {
  const DhParams p = dh_params(resolve(a.src, "curve25519"));
  if (a.peer.empty()) throw InvalidInput("--peer is required");
  const Element peer = parse_element_hex(a.peer, p.curve.modulus());
  out << hex(dh_shared(p, read_secret(p, a.secret_file), peer)) << '\n';
}

struct MulArgs {
  CurveSource src;
  std::string k;
  std::string x;
  std::string y;
  bool uniform = false;
  bool use_prac = false;
  bool recover = false;
};

void mul_cmd(const MulArgs& a, std::ostream& out) {
  const ResolvedCurve rc = resolve(a.src);
  const MontgomeryCurve& E = rc.curve;
  const Modulus& m = E.modulus();
  const mpz_class k = parse_integer(a.k);
  if (k < 0) throw InvalidInput("k must be nonnegative");
  const Element x = parse_element_hex(a.x, m);

  if (a.recover) {
    if (a.y.empty()) throw InvalidInput("--recover needs --y");
    const AffinePoint P(x, parse_element_hex(a.y, m));
    if (k == 0) {
      out << "infinity\n";
      return;
    }
    const AffinePoint Q = scalar_mul(E, Scalar(k), P);
    if (Q.is_infinity()) {
      out << "infinity\n";
    } else {
      out << "x: " << hex(Q.x()) << '\n' << "y: " << hex(Q.y()) << '\n';
    }
    return;
  }

  OpCount ctr;
  const XZPoint xP = XZPoint::affine(x);
  XZPoint r = XZPoint::infinity(m);
  if (a.uniform) {
    r = uniform_ladder(E, Scalar(k, bit_length(k)), xP, ctr, ScalarMode::FixedLength);
  } else if (k == 0) {
    throw InvalidInput("k must be positive for the ladder and prac");
  } else if (a.use_prac) {
    r = prac(E, k, xP, ctr);
  } else {
    r = x_ladder(E, Scalar(k), xP, ctr).xk;
  }
  if (r.Z.is_zero()) {
    out << "infinity-or-T\n";
  } else {
    out << hex(r.X * inv(r.Z)) << '\n';
  }
}

struct ChainArgs {
  std::size_t bits = 64;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string curve = "curve25519";
};

void chain_stats_cmd(const ChainArgs& a, std::ostream& out) {
  const DhParams p = named_curve(a.curve);
  const CampaignResult res = stats_campaign(p.curve, XZPoint::affine(p.base_x), a.bits, a.samples, a.seed);
  write_campaign_csv(out, res);
}

struct EcmArgs {
  std::string N;
  unsigned long B1 = 1000;
  unsigned curves = 20;
  std::uint64_t seed = 1;
};

int ecm_cmd(const EcmArgs& a, std::ostream& out) {
  EcmConfig cfg{parse_integer(a.N), a.B1, a.curves, a.seed};
  const EcmResult r = stage1(cfg);
  if (!r.factor) {
    out << "no factor (" << r.curves_tried << " curves)\n";
    return kNotFound;
  }
  out << "factor: " << r.factor->get_str() << '\n';
  out << "cofactor: " << mpz_class(cfg.N / *r.factor).get_str() << '\n';
  out << "sigma: " << r.sigma_of_success->get_str() << '\n';
  out << "curves: " << r.curves_tried << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Montgomery curve x-only arithmetic toolkit", "montx"};
  app.require_subcommand(1);

  CurveSource info_src;
  auto* info = app.add_subcommand("curve-info", "describe a curve");
  info_src.add_to(info, true);

  DhArgs dh;
  auto* dhc = app.add_subcommand("dh", "x-only Diffie-Hellman");
  dhc->require_subcommand(1);
  auto* keygen = dhc->add_subcommand("keygen", "draw a secret and print it with its public key");
  auto* pub = dhc->add_subcommand("pub", "public key for a stored secret");
  auto* shared = dhc->add_subcommand("shared", "shared secret with a peer public key");
  for (auto* sc : {keygen, pub, shared}) {
    dh.src.add_to(sc, false);
    sc->add_option("--secret-file", dh.secret_file, "secret key file (hex)");
  }
  keygen->add_option("--seed", dh.seed, "RNG seed")->each([&](const std::string&) { dh.seed_given = true; });
  shared->add_option("--peer", dh.peer, "peer public key (hex)");

  MulArgs mul;
  auto* mulc = app.add_subcommand("mul", "x-only scalar multiplication");
  mul.src.add_to(mulc, true);
  mulc->add_option("--k", mul.k, "scalar (decimal or 0x hex)")->required();
  mulc->add_option("--x", mul.x, "x-coordinate (hex)")->required();
  auto* fu = mulc->add_flag("--uniform", mul.uniform, "uniform ladder");
  auto* fp = mulc->add_flag("--prac", mul.use_prac, "PRAC chain");
  fu->excludes(fp);
  auto* fr = mulc->add_flag("--recover", mul.recover, "recover the full point; needs --y");
  mulc->add_option("--y", mul.y, "y-coordinate (hex)");
  fr->excludes(fu)->excludes(fp);

  ChainArgs chain;
  auto* chainc = app.add_subcommand("chain-stats", "ladder vs PRAC chain lengths as CSV");
  chainc->add_option("--bits", chain.bits, "scalar bit length")->check(CLI::Range(8, 4096));
  chainc->add_option("--samples", chain.samples, "number of scalars")->check(CLI::PositiveNumber);
  chainc->add_option("--seed", chain.seed, "RNG seed");
  chainc->add_option("--curve", chain.curve, "named curve");

  EcmArgs ecm;
  auto* ecmc = app.add_subcommand("ecm", "ECM stage 1");
  ecmc->add_option("--N", ecm.N, "number to factor")->required();
  ecmc->add_option("--B1", ecm.B1, "smoothness bound");
  ecmc->add_option("--curves", ecm.curves, "curve budget");
  ecmc->add_option("--seed", ecm.seed, "RNG seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*info) curve_info(info_src, out);
    if (*keygen) dh_keygen(dh, out);
    if (*pub) dh_pub(dh, out);
    if (*shared) dh_shared_cmd(dh, out);
    if (*mulc) mul_cmd(mul, out);
    if (*chainc) chain_stats_cmd(chain, out);
    if (*ecmc) return ecm_cmd(ecm, out);
  } catch (const Error& e) {
    err << "montx: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

}  // namespace montx::cli
