// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/modarith.hpp"

#include <cctype>
#include <sstream>

namespace montx {

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch();
}

void require_prime(const Modulus& m, const char* op) {
  if (!m.is_prime_asserted()) throw NotAField(op);
}

// Reduces in place into [0, m).
void reduce(mpz_class& v, const mpz_class& m) { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()); }

}  // namespace

OpCount OpCount::operator-(const OpCount& before) const {
  OpCount d;
  d.mul = mul - before.mul;
  d.sqr = sqr - before.sqr;
  d.cmul = cmul - before.cmul;
  d.add = add - before.add;
  d.sub = sub - before.sub;
  d.xadd = xadd - before.xadd;
  d.xdbl = xdbl - before.xdbl;
  d.cswap = cswap - before.cswap;
  return d;
}

std::string to_string(const OpCount& c) {
  std::ostringstream os;
  os << c.mul << "M + " << c.sqr << "S + " << c.cmul << "C + " << c.add << "a + " << c.sub << "s";
  return os.str();
}

Modulus::Modulus(const mpz_class& value, bool prime_asserted) {
  if (value < 3) throw InvalidInput("modulus must be at least 3");
  if (mpz_even_p(value.get_mpz_t())) throw InvalidInput("modulus must be odd");
  body_ = std::make_shared<const Body>(Body{value, prime_asserted, montx::bit_length(value)});
}

Element::Element(Modulus m, const mpz_class& v) : m_(std::move(m)), v_(v) {
  if (v_ < 0 || v_ >= m_.value()) reduce(v_, m_.value());
}

Element operator+(const Element& a, const Element& b) {
  OpCount scratch;
  return add(a, b, scratch);
}

Element operator-(const Element& a, const Element& b) {
  OpCount scratch;
  return sub(a, b, scratch);
}

Element operator*(const Element& a, const Element& b) {
  OpCount scratch;
  return mul(a, b, scratch);
}

Element operator-(const Element& a) { return a.modulus().zero() - a; }

Element add(const Element& a, const Element& b, OpCount& ctr) {
  require_same(a, b);
  ++ctr.add;
  ctr.record(OpKind::Add);
  mpz_class r = a.v_ + b.v_;
  if (r >= a.m_.value()) r -= a.m_.value();
  return {a.m_, std::move(r), Element::Raw{}};
}

Element sub(const Element& a, const Element& b, OpCount& ctr) {
  require_same(a, b);
  ++ctr.sub;
  ctr.record(OpKind::Sub);
  mpz_class r = a.v_ - b.v_;
  if (r < 0) r += a.m_.value();
  return {a.m_, std::move(r), Element::Raw{}};
}

Element mul(const Element& a, const Element& b, OpCount& ctr) {
  require_same(a, b);
  ++ctr.mul;
  ctr.record(OpKind::Mul);
  mpz_class r = a.v_ * b.v_;
  reduce(r, a.m_.value());
  return {a.m_, std::move(r), Element::Raw{}};
}

Element sqr(const Element& a, OpCount& ctr) {
  ++ctr.sqr;
  ctr.record(OpKind::Sqr);
  mpz_class r = a.v_ * a.v_;
  reduce(r, a.m_.value());
  return {a.m_, std::move(r), Element::Raw{}};
}

Element cmul(const Element& c, const Element& a, OpCount& ctr) {
  require_same(c, a);
  ++ctr.cmul;
  ctr.record(OpKind::CMul);
  mpz_class r = c.v_ * a.v_;
  reduce(r, a.m_.value());
  return {a.m_, std::move(r), Element::Raw{}};
}

Element pow(const Element& a, const mpz_class& e, OpCount& ctr) {
  if (e < 0) throw InvalidInput("negative exponent");
  if (e == 0) return a.modulus().one();
  const std::size_t len = bit_length(e);
  Element r = a;
  for (std::size_t i = len - 1; i-- > 0;) {
    r = sqr(r, ctr);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a, ctr);
  }
  return r;
}

Element pow(const Element& a, const mpz_class& e) {
  OpCount scratch;
  return pow(a, e, scratch);
}

Element inv(const Element& a, OpCount& ctr) {
  require_prime(a.modulus(), "inv");
  if (a.is_zero()) throw DivisionByZero();
  return pow(a, a.modulus().value() - 2, ctr);
}

Element inv(const Element& a) {
  OpCount scratch;
  return inv(a, scratch);
}

InverseOrFactor invert_or_gcd(const Element& a) {
  const mpz_class& n = a.modulus().value();
  InverseOrFactor out;
  mpz_gcd(out.gcd.get_mpz_t(), a.value().get_mpz_t(), n.get_mpz_t());
  if (out.gcd == 1) {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.value().get_mpz_t(), n.get_mpz_t());
    out.inverse = a.modulus().element(r);
  }
  return out;
}

int legendre(const Element& a) {
  require_prime(a.modulus(), "legendre");
  if (a.is_zero()) return 0;
  const Element r = pow(a, (a.modulus().value() - 1) / 2);
  if (r.is_one()) return 1;
  return -1;
}

std::optional<Element> sqrt(const Element& a) {
  const Modulus& m = a.modulus();
  require_prime(m, "sqrt");
  if (a.is_zero()) return m.zero();
  if (legendre(a) != 1) return std::nullopt;

  const mpz_class& q = m.value();
  Element root = m.zero();
  if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
    root = pow(a, (q + 1) / 4);
  } else {
    // Tonelli-Shanks with q - 1 = 2^s * t, t odd.
    mpz_class t = q - 1;
    std::size_t s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
      t >>= 1;
      ++s;
    }
    Element z = m.element(2);
    while (legendre(z) != -1) z = z + m.one();

    Element c = pow(z, t);
    Element x = pow(a, (t + 1) / 2);
    Element b = pow(a, t);
    std::size_t e = s;
    while (!b.is_one()) {
      // Least i with b^(2^i) = 1.
      std::size_t i = 0;
      Element b2 = b;
      while (!b2.is_one()) {
        b2 = b2 * b2;
        ++i;
      }
      Element g = c;
      for (std::size_t j = 0; j + i + 1 < e; ++j) g = g * g;
      x = x * g;
      c = g * g;
      b = b * c;
      e = i;
    }
    root = x;
  }
  if (mpz_odd_p(root.value().get_mpz_t())) root = -root;
  return root;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

std::size_t bit_length(const mpz_class& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::vector<std::uint8_t> encode_integer(const mpz_class& v, std::size_t len) {
  if (v < 0) throw EncodingError("cannot encode a negative integer");
  std::vector<std::uint8_t> out(len, 0);
  if (v == 0) return out;
  const std::size_t need = (bit_length(v) + 7) / 8;
  if (need > len) throw EncodingError("integer does not fit in " + std::to_string(len) + " bytes");
  std::size_t written = 0;
  mpz_export(out.data(), &written, -1, 1, -1, 0, v.get_mpz_t());
  return out;
}

mpz_class decode_integer(std::span<const std::uint8_t> bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), -1, 1, -1, 0, bytes.data());
  return v;
}

std::vector<std::uint8_t> encode(const Element& a) {
  return encode_integer(a.value(), a.modulus().byte_length());
}

Element decode(std::span<const std::uint8_t> bytes, const Modulus& m) {
  if (bytes.size() != m.byte_length()) {
    throw EncodingError("expected " + std::to_string(m.byte_length()) + " bytes, got " +
                        std::to_string(bytes.size()));
  }
  return m.element(decode_integer(bytes));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw EncodingError("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw EncodingError(std::string("invalid hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  bool negative = false;
  if (!s.empty() && s[0] == '-') {
    negative = true;
    s = s.substr(1);
  }
  int base = 10;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s = s.substr(2);
  }
  mpz_class v;
  if (s.empty() || v.set_str(s, base) != 0) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  return negative ? mpz_class(-v) : v;
}

}  // namespace montx
