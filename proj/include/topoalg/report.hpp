// Copyright 2026 The Topoalg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TOPOALG_REPORT_HPP
#define TOPOALG_REPORT_HPP

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "topoalg/version.hpp"

namespace topoalg {

using json = nlohmann::json;

/// Deterministic scenario report: verdicts, dimension tables and witnesses
/// serialize byte-stably (object keys are ordered); timing is the one field
/// excluded from comparisons.
struct Report {
  std::string scenario;
  std::string command;
  json verdicts = json::object();
  json dims = json::object();
  json witnesses = json::object();
  json input_digests = json::object();
  double timing_ms = 0.0;
  std::string error;

  bool passed() const {
    if (!error.empty()) return false;
    // a checked expectation pins the outcome, so negative results can be
    // locked in as regressions; otherwise every boolean verdict must hold
    if (verdicts.contains("expected_fragment")) return verdicts.at("expected_fragment").get<bool>();
    for (const auto& [k, v] : verdicts.items()) {
      (void)k;
      if (v.is_boolean() && !v.get<bool>()) return false;
    }
    return true;
  }

  json to_json() const {
    json j;
    j["schema"] = "report/v1";
    j["scenario"] = scenario;
    j["command"] = command;
    j["library_version"] = kVersion;
    j["verdicts"] = verdicts;
    j["dims"] = dims;
    j["witnesses"] = witnesses;
    j["input_digests"] = input_digests;
    j["timing_ms"] = timing_ms;
    if (!error.empty()) j["error"] = error;
    j["passed"] = passed();
    return j;
  }
};

/// Drop the timing fields so two runs can be compared byte for byte.
inline json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    j.erase("total_ms");
    for (auto& [k, v] : j.items()) {
      (void)k;
      v = strip_timing(v);
    }
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

/// FNV-1a digest of a byte string, hex encoded.
inline std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

/// Does `expected` match `actual` as a fragment: every key present in the
/// expectation must compare equal (recursively for objects)?
inline bool fragment_matches(const json& expected, const json& actual, std::string* where = nullptr) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (const auto& [k, v] : expected.items()) {
      if (!actual.contains(k)) {
        if (where) *where = "/" + k + " missing";
        return false;
      }
      std::string sub;
      if (!fragment_matches(v, actual.at(k), &sub)) {
        if (where) *where = "/" + k + sub;
        return false;
      }
    }
    return true;
  }
  if (expected == actual) return true;
  if (where) *where = ": value differs";
  return false;
}

}  // namespace topoalg

#endif  // TOPOALG_REPORT_HPP
