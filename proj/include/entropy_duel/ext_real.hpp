// Copyright 2026 The entropy_duel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>

#include "entropy_duel/errors.hpp"

namespace entropy_duel {

// A real number or +infinity. +infinity is a tag, not a float sentinel, and
// NaN is rejected at construction.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  ExtReal(double v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if (std::isnan(v)) throw ValidationError("ExtReal: NaN");
    if (std::isinf(v)) {
      if (v < 0) throw ValidationError("ExtReal: -infinity is not representable");
      value_ = 0.0;
      infinite_ = true;
    }
  }

  static ExtReal plus_infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }

  double value() const {
    if (infinite_) throw DomainError("ExtReal: value() of +infinity");
    return value_;
  }

  // +inf maps to std::numeric_limits<double>::infinity(); for printing only.
  double to_double() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.infinite_ || b.infinite_) return plus_infinity();
    return ExtReal(a.value_ + b.value_);
  }
  friend ExtReal operator+(ExtReal a, double b) { return a + ExtReal(b); }
  friend ExtReal operator-(ExtReal a, double b) { return a + ExtReal(-b); }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::partial_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
    if (a.infinite_) return std::partial_ordering::greater;
    if (b.infinite_) return std::partial_ordering::less;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& r) {
    if (r.infinite_) return os << "+inf";
    return os << r.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace entropy_duel
