// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Curve configuration files. One "key = value" pair per line; '#' starts a
// comment. Integers are decimal or 0x-prefixed hex.
//
//   q               field characteristic (required, must be an odd prime)
//   A, B            curve coefficients (required)
//   name            free-form label
//   cofactor        #E / r
//   twist_cofactor  #E' / r'
//   r               prime subgroup order
//   base_x          x-coordinate of a base point, for dh
//
// Unknown or repeated keys are rejected.

#ifndef MONTX_CONFIG_HPP
#define MONTX_CONFIG_HPP

#include <optional>
#include <string>
#include <string_view>

#include "montx/curve.hpp"

namespace montx {

struct CurveConfig {
  std::string name;
  MontgomeryCurve curve;
  std::optional<mpz_class> cofactor;
  std::optional<mpz_class> twist_cofactor;
  std::optional<mpz_class> r;
  std::optional<Element> base_x;
};

/// Throws InvalidInput on syntax errors and SingularCurve for bad (A, B).
CurveConfig parse_curve_config(std::string_view text);
CurveConfig load_curve_config(const std::string& path);

}  // namespace montx

#endif  // MONTX_CONFIG_HPP
