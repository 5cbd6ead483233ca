// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MONTX_ERRORS_HPP
#define MONTX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace montx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary operation on elements of different moduli.
class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("modulus mismatch") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A field-only operation was requested on a modulus not asserted prime.
class NotAField : public Error {
 public:
  explicit NotAField(const std::string& what)
      : Error(what + " requires a prime modulus") {}
};

class SingularCurve : public Error {
 public:
  explicit SingularCurve(const std::string& why) : Error("singular: " + why) {}
};

/// Precondition violations: off-curve points, bad seeds, bad scalars.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

}  // namespace montx

#endif  // MONTX_ERRORS_HPP
