// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Arbitrary-precision residues modulo an odd modulus, with exact
// operation accounting.
//
// The same Element type serves prime fields F_q (where inversion,
// Legendre symbols and square roots are available) and composite rings
// Z/NZ used by ECM. Whether a modulus is prime is the caller's claim;
// it is recorded on the Modulus and gates the field-only operations.
//
// Counted arithmetic takes an explicit OpCount. Every counted call bumps
// exactly one of {mul, sqr, cmul, add, sub} by one. The overloaded
// operators are uncounted and are meant for reference code.

#ifndef MONTX_MODARITH_HPP
#define MONTX_MODARITH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "montx/errors.hpp"

namespace montx {

enum class OpKind : std::uint8_t { Mul, Sqr, CMul, Add, Sub, Swap };

/// Tally of field operations (M, S, C, a, s) plus pseudo-operation calls.
///
/// A counter belongs to one logical computation; do not share one between
/// threads. When `trace` is set, each field operation and each conditional
/// swap is also appended to it in execution order.
struct OpCount {
  std::uint64_t mul = 0;
  std::uint64_t sqr = 0;
  std::uint64_t cmul = 0;
  std::uint64_t add = 0;
  std::uint64_t sub = 0;

  // Pseudo-operation tallies, maintained by the x-line layer.
  std::uint64_t xadd = 0;
  std::uint64_t xdbl = 0;
  std::uint64_t cswap = 0;

  std::vector<OpKind>* trace = nullptr;

  void record(OpKind kind) {
    if (trace != nullptr) trace->push_back(kind);
  }

  std::uint64_t field_ops() const { return mul + sqr + cmul + add + sub; }

  /// Difference of the tallies; the result carries no trace.
  OpCount operator-(const OpCount& before) const;

  friend bool operator==(const OpCount& l, const OpCount& r) {
    return l.mul == r.mul && l.sqr == r.sqr && l.cmul == r.cmul &&
           l.add == r.add && l.sub == r.sub && l.xadd == r.xadd &&
           l.xdbl == r.xdbl && l.cswap == r.cswap;
  }
};

std::string to_string(const OpCount& c);

class Element;

/// An odd modulus >= 3. Cheap to copy; copies share one immutable body.
class Modulus {
 public:
  Modulus(const mpz_class& value, bool prime_asserted);

  static Modulus prime(const mpz_class& value) { return {value, true}; }
  static Modulus composite(const mpz_class& value) { return {value, false}; }

  const mpz_class& value() const { return body_->value; }
  bool is_prime_asserted() const { return body_->prime; }
  std::size_t bit_length() const { return body_->bits; }
  std::size_t byte_length() const { return (body_->bits + 7) / 8; }

  Element element(const mpz_class& v) const;
  Element element(long v) const;
  Element zero() const;
  Element one() const;

  friend bool operator==(const Modulus& l, const Modulus& r) {
    return l.body_ == r.body_ || l.body_->value == r.body_->value;
  }

 private:
  struct Body {
    mpz_class value;
    bool prime;
    std::size_t bits;
  };
  std::shared_ptr<const Body> body_;
};

/// A residue in [0, modulus).
class Element {
 public:
  /// Reduces `v` (which may be negative or >= m) into range.
  Element(Modulus m, const mpz_class& v);

  const mpz_class& value() const { return v_; }
  const Modulus& modulus() const { return m_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  std::string to_string() const { return v_.get_str(); }

  friend bool operator==(const Element& l, const Element& r) {
    return l.v_ == r.v_ && l.m_ == r.m_;
  }

  // Uncounted arithmetic for reference code and setup.
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);

 private:
  struct Raw {};
  Element(Modulus m, mpz_class v, Raw) : m_(std::move(m)), v_(std::move(v)) {}
  friend class Modulus;
  friend Element add(const Element&, const Element&, OpCount&);
  friend Element sub(const Element&, const Element&, OpCount&);
  friend Element mul(const Element&, const Element&, OpCount&);
  friend Element sqr(const Element&, OpCount&);
  friend Element cmul(const Element&, const Element&, OpCount&);

  Modulus m_;
  mpz_class v_;
};

// Counted ring operations. All throw ModulusMismatch on differing moduli.
Element add(const Element& a, const Element& b, OpCount& ctr);
Element sub(const Element& a, const Element& b, OpCount& ctr);
Element mul(const Element& a, const Element& b, OpCount& ctr);
Element sqr(const Element& a, OpCount& ctr);
/// Multiplication by a (small, fixed) curve constant `c`; counted as C.
Element cmul(const Element& c, const Element& a, OpCount& ctr);

/// Left-to-right square-and-multiply. For e >= 1 with bit length l this
/// costs exactly (l - 1) S and (popcount(e) - 1) M; pow(a, 0) = 1 for free.
Element pow(const Element& a, const mpz_class& e, OpCount& ctr);
Element pow(const Element& a, const mpz_class& e);

/// Fermat inversion a^(q-2). Prime moduli only.
Element inv(const Element& a, OpCount& ctr);
Element inv(const Element& a);

/// Inversion in Z/NZ for any odd N. Exactly one of `inverse` is set or
/// `gcd` is a divisor of N greater than 1 (N itself when a = 0).
struct InverseOrFactor {
  std::optional<Element> inverse;
  mpz_class gcd;
};
InverseOrFactor invert_or_gcd(const Element& a);

/// Euler's criterion: 0, +1 (nonzero square) or -1. Prime moduli only.
int legendre(const Element& a);

/// A square root of `a`, or nullopt when `a` is a nonsquare. The even
/// representative of {r, -r} is returned. Prime moduli only.
std::optional<Element> sqrt(const Element& a);

mpz_class gcd(const mpz_class& a, const mpz_class& b);

/// Probabilistic primality with 64 Miller-Rabin rounds.
bool is_probable_prime(const mpz_class& n);

std::size_t bit_length(const mpz_class& n);

/// Fixed-length little-endian encoding of ceil(bitlen(m)/8) bytes.
std::vector<std::uint8_t> encode(const Element& a);
/// Inverse of encode. Values >= m are reduced, not rejected.
Element decode(std::span<const std::uint8_t> bytes, const Modulus& m);

/// Little-endian fixed-length encoding of an arbitrary nonnegative integer.
std::vector<std::uint8_t> encode_integer(const mpz_class& v, std::size_t len);
mpz_class decode_integer(std::span<const std::uint8_t> bytes);

/// Lowercase hex of the bytes in memory order.
std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Parses decimal or 0x-prefixed hexadecimal.
mpz_class parse_integer(std::string_view text);

// ---------------------------------------------------------------------------

inline Element Modulus::element(const mpz_class& v) const { return {*this, v}; }
inline Element Modulus::element(long v) const { return {*this, mpz_class(v)}; }
inline Element Modulus::zero() const { return {*this, mpz_class(0), Element::Raw{}}; }
inline Element Modulus::one() const { return {*this, mpz_class(1), Element::Raw{}}; }

}  // namespace montx

#endif  // MONTX_MODARITH_HPP
