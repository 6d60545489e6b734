// Copyright 2026 The bkernel Authors. Licensed under the Apache License,
// Version 2.0. See LICENSE at the root of this distribution.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace bk {

enum class Problem { kVc, kFvs, kTds, kDs, kLc, kLp, kHc, kHp, kCe, kCvd, kMc, kDeg2Mod };

enum class Sense { kMinimize, kMaximize, kDecision };

inline Sense sense_of(Problem p) {
  switch (p) {
    case Problem::kLc:
    case Problem::kLp:
    case Problem::kMc: return Sense::kMaximize;
    case Problem::kHc:
    case Problem::kHp: return Sense::kDecision;
    default: return Sense::kMinimize;
  }
}

inline bool is_optimization(Problem p) { return sense_of(p) != Sense::kDecision; }

inline const char* problem_name(Problem p) {
  switch (p) {
    case Problem::kVc: return "vc";
    case Problem::kFvs: return "fvs";
    case Problem::kTds: return "tds";
    case Problem::kDs: return "ds";
    case Problem::kLc: return "lc";
    case Problem::kLp: return "lp";
    case Problem::kHc: return "hc";
    case Problem::kHp: return "hp";
    case Problem::kCe: return "ce";
    case Problem::kCvd: return "cvd";
    case Problem::kMc: return "mc";
    case Problem::kDeg2Mod: return "deg2mod";
  }
  return "?";
}

inline std::optional<Problem> parse_problem(const std::string& s) {
  for (Problem p : {Problem::kVc, Problem::kFvs, Problem::kTds, Problem::kDs, Problem::kLc,
                    Problem::kLp, Problem::kHc, Problem::kHp, Problem::kCe, Problem::kCvd,
                    Problem::kMc, Problem::kDeg2Mod})
    if (s == problem_name(p)) return p;
  return std::nullopt;
}

class OptValue {
 public:
  enum class Tag { kFinite, kPlusInfinity, kMinusInfinity };

  static OptValue finite(long long v) { return OptValue(Tag::kFinite, v); }
  static OptValue plus_infinity() { return OptValue(Tag::kPlusInfinity, 0); }
  static OptValue minus_infinity() { return OptValue(Tag::kMinusInfinity, 0); }
  // Decision answers are encoded as finite 1 (YES) / 0 (NO).
  static OptValue yes_no(bool yes) { return finite(yes ? 1 : 0); }

  Tag tag() const { return tag_; }
  bool is_finite() const { return tag_ == Tag::kFinite; }
  long long value() const {
    if (!is_finite()) throw std::logic_error("OptValue: value of an infinity");
    return value_;
  }

  // Infinities absorb offsets.
  OptValue plus(long long delta) const {
    return is_finite() ? finite(value_ + delta) : *this;
  }

  bool operator==(const OptValue& o) const {
    return tag_ == o.tag_ && (tag_ != Tag::kFinite || value_ == o.value_);
  }

  std::string to_string() const {
    switch (tag_) {
      case Tag::kPlusInfinity: return "+inf";
      case Tag::kMinusInfinity: return "-inf";
      default: return std::to_string(value_);
    }
  }

 private:
  OptValue(Tag t, long long v) : tag_(t), value_(v) {}
  Tag tag_;
  long long value_;
};

}  // namespace bk
