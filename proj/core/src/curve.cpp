// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/curve.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace montx {

const Element& AffinePoint::x() const {
  if (!xy_) throw InvalidInput("point at infinity has no affine coordinates");
  return xy_->first;
}

const Element& AffinePoint::y() const {
  if (!xy_) throw InvalidInput("point at infinity has no affine coordinates");
  return xy_->second;
}

namespace {

Element inverse_of_four(const Modulus& m) {
  // 4 is a unit modulo any odd modulus.
  return *invert_or_gcd(m.element(4)).inverse;
}

}  // namespace

MontgomeryCurve::MontgomeryCurve(Element A, Element B)
    : A_(std::move(A)),
      B_(std::move(B)),
      a24_((A_ + A_.modulus().element(2)) * inverse_of_four(A_.modulus())),
      two_A_(A_ + A_),
      two_B_(B_ + B_) {
  if (!(A_.modulus() == B_.modulus())) throw ModulusMismatch();
  if (B_.is_zero()) throw SingularCurve("B = 0");
  if ((A_ * A_) == A_.modulus().element(4)) throw SingularCurve("A^2 = 4");
}

Element MontgomeryCurve::j_invariant() const {
  const Modulus& m = modulus();
  const Element a2 = A_ * A_;
  const Element t = a2 - m.element(3);
  return m.element(256) * t * t * t * inv(a2 - m.element(4));
}

Element MontgomeryCurve::rhs(const Element& x) const { return x * (x * x + A_ * x + modulus().one()); }

bool MontgomeryCurve::on_curve(const AffinePoint& P) const {
  if (P.is_infinity()) return true;
  if (!(P.x().modulus() == modulus())) return false;
  return B_ * P.y() * P.y() == rhs(P.x());
}

AffinePoint MontgomeryCurve::add(const AffinePoint& P, const AffinePoint& Q) const {
  if (!on_curve(P) || !on_curve(Q)) throw InvalidInput("point not on curve");
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;

  const Modulus& m = modulus();
  Element lambda = m.zero();
  if (P.x() == Q.x()) {
    if (P.y() == -Q.y()) return AffinePoint::infinity();
    const Element& x = P.x();
    lambda = (m.element(3) * x * x + two_A_ * x + m.one()) * inv(two_B_ * P.y());
  } else {
    lambda = (Q.y() - P.y()) * inv(Q.x() - P.x());
  }
  Element x3 = B_ * lambda * lambda - P.x() - Q.x() - A_;
  Element y3 = lambda * (P.x() - x3) - P.y();
  return {std::move(x3), std::move(y3)};
}

AffinePoint MontgomeryCurve::neg(const AffinePoint& P) const {
  if (!on_curve(P)) throw InvalidInput("point not on curve");
  if (P.is_infinity()) return P;
  return {P.x(), -P.y()};
}

MontgomeryCurve MontgomeryCurve::twist() const { return {A_, B_ * least_nonsquare(modulus())}; }

AffinePoint scalar_mul_naive(const MontgomeryCurve& E, const mpz_class& k, const AffinePoint& P) {
  if (k < 0) throw InvalidInput("negative scalar");
  if (!E.on_curve(P)) throw InvalidInput("point not on curve");
  AffinePoint R = AffinePoint::infinity();
  for (std::size_t i = bit_length(k); i-- > 0;) {
    R = E.add(R, R);
    if (mpz_tstbit(k.get_mpz_t(), i)) R = E.add(R, P);
  }
  return R;
}

Element least_nonsquare(const Modulus& m) {
  Element z = m.element(2);
  while (legendre(z) != -1) z = z + m.one();
  return z;
}

const char* to_string(TorsionStructure s) {
  switch (s) {
    case TorsionStructure::Z4xZ2:
      return "Z/4 x Z/2";
    case TorsionStructure::Z4:
      return "Z/4";
    case TorsionStructure::Z2xZ2:
      return "Z/2 x Z/2";
  }
  return "?";
}

TorsionReport classify_torsion(const MontgomeryCurve& E) {
  const Modulus& m = E.modulus();
  if (!m.is_prime_asserted()) throw NotAField("classify_torsion");
  const Element two = m.element(2);

  TorsionReport r;
  r.b_square = legendre(E.B()) == 1;
  r.a_plus_2_square = legendre(E.B() * (E.A() + two)) == 1;
  r.a_minus_2_square = legendre(E.B() * (E.A() - two)) == 1;
  r.full_two_torsion = legendre(E.A() * E.A() - m.element(4)) == 1;

  // B(A+2) * B(A-2) = B^2 (A^2 - 4), so the three cannot all be nonsquares.
  if (!r.a_plus_2_square && !r.a_minus_2_square && !r.full_two_torsion) {
    throw std::logic_error("B(A+2), B(A-2) and A^2-4 are all nonsquares");
  }

  auto structure = [](int squares) {
    switch (squares) {
      case 2:
        return TorsionStructure::Z4xZ2;
      case 1:
        return TorsionStructure::Z4;
      default:
        return TorsionStructure::Z2xZ2;
    }
  };
  const int on_curve = int(r.a_plus_2_square) + int(r.a_minus_2_square);
  // Twisting by a nonsquare flips the character of both B(A+2) and B(A-2).
  r.curve = structure(on_curve);
  r.twist = structure(2 - on_curve);
  return r;
}

mpz_class group_order_naive(const MontgomeryCurve& E) {
  const Modulus& m = E.modulus();
  if (!m.is_prime_asserted()) throw NotAField("group_order_naive");
  if (m.value() > (1u << 20)) throw InvalidInput("group_order_naive: modulus exceeds 2^20");

  const std::uint64_t q = m.value().get_ui();
  const std::uint64_t A = E.A().value().get_ui();
  const std::uint64_t B = E.B().value().get_ui();

  std::vector<bool> is_square(q, false);
  for (std::uint64_t y = 1; y < q; ++y) is_square[y * y % q] = true;

  // Each x contributes 1 + chi(B f(x)) affine points; chi(1/B) = chi(B).
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < q; ++x) {
    const std::uint64_t f = x * ((x * x % q + A * x % q + 1) % q) % q;
    const std::uint64_t bf = B * f % q;
    if (bf == 0) {
      count += 1;
    } else if (is_square[bf]) {
      count += 2;
    }
  }
  return mpz_class(static_cast<unsigned long>(count));
}

std::pair<MontgomeryCurve, AffinePoint> suyama(const Element& a, const Element& b) {
  const Modulus& m = a.modulus();
  const Element one = m.one();
  const Element a2 = a * a;
  if ((a * b * (a2 - one) * (m.element(9) * a2 - one)).is_zero()) {
    throw InvalidInput("invalid Suyama seed: ab(a^2-1)(9a^2-1) = 0");
  }
  const Element four = m.element(4);
  const Element A = -(m.element(3) * a2 * a2 + m.element(6) * a2 - one) * inv(four * a2 * a);
  const Element B = (a2 - one) * (a2 - one) * inv(four * a * b * b);
  return {MontgomeryCurve(A, B), AffinePoint(a, b)};
}

// ---------------------------------------------------------------------------

bool GeneralWeierstrassCurve::on_curve(const AffinePoint& P) const {
  if (P.is_infinity()) return true;
  const Element& x = P.x();
  return P.y() * P.y() == ((x + f2) * x + f1) * x + f0;
}

bool GeneralWeierstrassCurve::is_nonsingular() const {
  // Discriminant of the cubic x^3 + f2 x^2 + f1 x + f0.
  const Modulus& m = f0.modulus();
  const Element disc = f2 * f2 * f1 * f1 - m.element(4) * f1 * f1 * f1 - m.element(4) * f2 * f2 * f2 * f0 -
                       m.element(27) * f0 * f0 + m.element(18) * f2 * f1 * f0;
  return !disc.is_zero();
}

AffinePoint GeneralWeierstrassCurve::add(const AffinePoint& P, const AffinePoint& Q) const {
  if (!on_curve(P) || !on_curve(Q)) throw InvalidInput("point not on curve");
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const Modulus& m = f0.modulus();
  Element lambda = m.zero();
  if (P.x() == Q.x()) {
    if (P.y() == -Q.y()) return AffinePoint::infinity();
    const Element& x = P.x();
    lambda = (m.element(3) * x * x + m.element(2) * f2 * x + f1) * inv(m.element(2) * P.y());
  } else {
    lambda = (Q.y() - P.y()) * inv(Q.x() - P.x());
  }
  Element x3 = lambda * lambda - f2 - P.x() - Q.x();
  Element y3 = lambda * (P.x() - x3) - P.y();
  return {std::move(x3), std::move(y3)};
}

AffinePoint WeierstrassModel::from_montgomery(const AffinePoint& P) const {
  if (P.is_infinity()) return P;
  return {B * (P.x() + A_over_3), B * B * P.y()};
}

AffinePoint WeierstrassModel::to_montgomery(const AffinePoint& P) const {
  if (P.is_infinity()) return P;
  const Element b_inv = inv(B);
  return {P.x() * b_inv - A_over_3, P.y() * b_inv * b_inv};
}

WeierstrassModel to_weierstrass(const MontgomeryCurve& E) {
  const Modulus& m = E.modulus();
  if (mpz_divisible_ui_p(m.value().get_mpz_t(), 3)) {
    throw InvalidInput("to_weierstrass: characteristic 3");
  }
  const Element& A = E.A();
  const Element& B = E.B();
  const Element one = m.one();
  const Element third = inv(m.element(3));
  const Element a2_3 = A * A * third;
  // v^2 = u^3 + B^2 (1 - A^2/3) u + B^3 (A/3)(2A^2/9 - 1)
  const Element a = B * B * (one - a2_3);
  const Element b = B * B * B * A * third * (m.element(2) * A * A * inv(m.element(9)) - one);
  return {{m.zero(), a, b}, A * third, B};
}

AffinePoint MontgomeryModel::from_weierstrass(const AffinePoint& P) const {
  if (P.is_infinity()) return P;
  const Element beta_inv = inv(beta);
  return {(P.x() - alpha) * beta_inv, P.y() * beta_inv};
}

std::optional<MontgomeryModel> from_weierstrass(const GeneralWeierstrassCurve& W) {
  if (!W.f2.is_zero()) throw InvalidInput("from_weierstrass: expected a short model (f2 = 0)");
  const Modulus& m = W.f0.modulus();
  for (const Element& alpha : cubic_roots(m.zero(), W.f1, W.f0)) {
    const Element t = m.element(3) * alpha * alpha + W.f1;
    if (t.is_zero()) continue;
    auto beta = sqrt(t);
    if (!beta) continue;
    const Element beta_inv = inv(*beta);
    try {
      MontgomeryCurve E(m.element(3) * alpha * beta_inv, beta_inv);
      return MontgomeryModel{std::move(E), alpha, *beta};
    } catch (const SingularCurve&) {
      continue;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cubic root finding.

namespace {

using Poly = std::vector<Element>;  // coefficients, lowest degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const Element lead_inv = inv(b.back());
  while (a.size() >= b.size()) {
    const Element c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f) {
  if (a.empty() || b.empty()) return {};
  const Modulus& m = f[0].modulus();
  Poly r(a.size() + b.size() - 1, m.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return poly_mod(std::move(r), f);
}

Poly poly_pow_mod(Poly base, const mpz_class& e, const Poly& f) {
  const Modulus& m = f[0].modulus();
  Poly r{m.one()};
  for (std::size_t i = bit_length(e); i-- > 0;) {
    r = poly_mul_mod(r, r, f);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mul_mod(r, base, f);
  }
  return r;
}

Poly make_monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Element lead_inv = inv(p.back());
  for (Element& c : p) c = c * lead_inv;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  const Modulus& m = b[0].modulus();
  const Element lead_inv = inv(b.back());
  Poly q(a.size() - b.size() + 1, m.zero());
  while (a.size() >= b.size()) {
    const Element c = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    trim(a);
  }
  return q;
}

// g is monic, squarefree and splits into linear factors.
void split_roots(const Poly& g, std::vector<Element>& out) {
  const Modulus& m = g[0].modulus();
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    out.push_back(-g[0]);
    return;
  }
  if (deg == 2) {
    const Element disc = g[1] * g[1] - m.element(4) * g[0];
    const Element r = *sqrt(disc);
    const Element half = inv(m.element(2));
    out.push_back((-g[1] + r) * half);
    out.push_back((-g[1] - r) * half);
    return;
  }
  const mpz_class e = (m.value() - 1) / 2;
  for (long shift = 0;; ++shift) {
    Poly h = poly_pow_mod({m.element(shift), m.one()}, e, g);
    if (h.empty()) h.push_back(m.zero());
    h[0] = h[0] - m.one();
    Poly d = poly_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, out);
      split_roots(make_monic(poly_div_exact(g, d)), out);
      return;
    }
  }
}

}  // namespace

std::vector<Element> cubic_roots(const Element& c2, const Element& c1, const Element& c0) {
  const Modulus& m = c0.modulus();
  if (!m.is_prime_asserted()) throw NotAField("cubic_roots");
  std::vector<Element> roots;
  if (m.value() <= (1u << 20)) {
    const unsigned long q = m.value().get_ui();
    for (unsigned long x = 0; x < q; ++x) {
      const Element e = m.element(static_cast<long>(x));
      if ((((e + c2) * e + c1) * e + c0).is_zero()) roots.push_back(e);
    }
    return roots;
  }
  const Poly f{c0, c1, c2, m.one()};
  // Distinct roots are the roots of gcd(f, x^q - x).
  Poly h = poly_pow_mod({m.zero(), m.one()}, m.value(), f);
  while (h.size() < 2) h.push_back(m.zero());
  h[1] = h[1] - m.one();
  const Poly g = poly_gcd(f, h);
  split_roots(g, roots);
  std::sort(roots.begin(), roots.end(), [](const Element& l, const Element& r) { return l.value() < r.value(); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------

bool EdwardsCurve::on_curve(const Element& u, const Element& v) const {
  const Element u2 = u * u;
  const Element v2 = v * v;
  return a * u2 + v2 == u.modulus().one() + d * u2 * v2;
}

EdwardsCurve to_edwards(const MontgomeryCurve& E) {
  const Modulus& m = E.modulus();
  const Element b_inv = inv(E.B());
  return {(E.A() + m.element(2)) * b_inv, (E.A() - m.element(2)) * b_inv};
}

std::optional<EdwardsPoint> edwards_point_map(const MontgomeryCurve& E, const AffinePoint& P) {
  if (!E.on_curve(P)) throw InvalidInput("point not on curve");
  const Modulus& m = E.modulus();
  if (P.is_infinity()) return EdwardsPoint{m.zero(), m.one()};
  if (P.x().is_zero()) return EdwardsPoint{m.zero(), -m.one()};
  if (P.y().is_zero()) return std::nullopt;
  const Element x_plus_1 = P.x() + m.one();
  if (x_plus_1.is_zero()) return std::nullopt;
  return EdwardsPoint{P.x() * inv(P.y()), (P.x() - m.one()) * inv(x_plus_1)};
}

std::optional<AffinePoint> edwards_point_unmap(const MontgomeryCurve& E, const EdwardsPoint& P) {
  const Modulus& m = E.modulus();
  if (P.u.is_zero()) {
    if (P.v.is_one()) return AffinePoint::infinity();
    if (P.v == -m.one()) return E.T();
    return std::nullopt;
  }
  if (P.v.is_one()) return std::nullopt;
  const Element one_plus_v = m.one() + P.v;
  const Element w = inv(m.one() - P.v);
  return AffinePoint(one_plus_v * w, one_plus_v * w * inv(P.u));
}

}  // namespace montx
