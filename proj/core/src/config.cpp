// Copyright 2026 The montx Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "montx/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace montx {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* const kKeys[] = {"q", "A", "B", "name", "cofactor", "twist_cofactor", "r", "base_x"};

bool known_key(std::string_view k) {
  for (const char* key : kKeys) {
    if (k == key) return true;
  }
  return false;
}

}  // namespace

CurveConfig parse_curve_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(lineno);
    if (eq == std::string_view::npos) throw InvalidInput(where + ": expected key = value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known_key(key)) throw InvalidInput(where + ": unknown key '" + std::string(key) + "'");
    if (value.empty()) throw InvalidInput(where + ": empty value");
    if (!kv.emplace(std::string(key), std::string(value)).second) {
      throw InvalidInput(where + ": duplicate key '" + std::string(key) + "'");
    }
  }

  for (const char* req : {"q", "A", "B"}) {
    if (!kv.count(req)) throw InvalidInput(std::string("config: missing required key '") + req + "'");
  }
  const mpz_class q = parse_integer(kv.at("q"));
  if (q < 3 || !is_probable_prime(q)) throw InvalidInput("config: q must be an odd prime");
  const Modulus m = Modulus::prime(q);

  auto integer = [&](const char* key) -> std::optional<mpz_class> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return parse_integer(it->second);
  };

  CurveConfig cfg{kv.count("name") ? kv.at("name") : std::string("custom"),
                  MontgomeryCurve(m.element(parse_integer(kv.at("A"))), m.element(parse_integer(kv.at("B")))),
                  integer("cofactor"),
                  integer("twist_cofactor"),
                  integer("r"),
                  std::nullopt};
  if (auto bx = integer("base_x")) cfg.base_x = m.element(*bx);
  return cfg;
}

CurveConfig load_curve_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_curve_config(ss.str());
}

}  // namespace montx
