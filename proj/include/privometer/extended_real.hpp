// Copyright 2026 The Privometer Authors
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

#ifndef PRIVOMETER_EXTENDED_REAL_HPP
#define PRIVOMETER_EXTENDED_REAL_HPP

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace privometer {

/**
 * A nonnegative real extended with a distinguished infinity.
 *
 * Infinity is symbolic in the sense that it only ever arises from
 * ExtendedReal::infinity() or from arithmetic with an infinite operand,
 * never from overflowing float math. Finite values must be >= 0 and
 * NaN is rejected at construction, so comparisons are total.
 */
class ExtendedReal {
 public:
  ExtendedReal() : value_(0.0) {}

  static ExtendedReal finite(double v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtendedReal: NaN");
    if (std::isinf(v)) throw std::invalid_argument("ExtendedReal: use infinity()");
    if (v < 0.0) throw std::invalid_argument("ExtendedReal: negative value");
    return ExtendedReal(v);
  }

  static ExtendedReal infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  bool is_infinite() const { return std::isinf(value_); }
  bool is_finite() const { return !is_infinite(); }

  /// Finite value; throws when infinite.
  double value() const {
    if (is_infinite()) throw std::logic_error("ExtendedReal: value() on infinity");
    return value_;
  }

  /// IEEE view: the finite value, or +inf. Never NaN.
  double as_double() const { return value_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(a.value_ + b.value_);
  }

  /// Scaling by a positive finite factor; infinity stays infinity.
  friend ExtendedReal operator*(double k, ExtendedReal a) {
    if (std::isnan(k) || std::isinf(k) || k <= 0.0)
      throw std::invalid_argument("ExtendedReal: scale factor must be finite and > 0");
    if (a.is_infinite()) return infinity();
    return finite(k * a.value_);
  }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }
  friend bool operator!=(ExtendedReal a, ExtendedReal b) { return !(a == b); }
  friend bool operator<(ExtendedReal a, ExtendedReal b) { return a.value_ < b.value_; }
  friend bool operator<=(ExtendedReal a, ExtendedReal b) { return a.value_ <= b.value_; }
  friend bool operator>(ExtendedReal a, ExtendedReal b) { return b < a; }
  friend bool operator>=(ExtendedReal a, ExtendedReal b) { return b <= a; }

  /// Equality up to an absolute tolerance on the finite part.
  /// Two infinities are equal; an infinity never equals a finite value.
  friend bool almost_equal(ExtendedReal a, ExtendedReal b, double eps) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return std::abs(a.value_ - b.value_) <= eps;
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtendedReal v) {
    if (v.is_infinite()) return os << "inf";
    return os << v.value_;
  }

 private:
  explicit ExtendedReal(double v) : value_(v) {}
  double value_;
};

}  // namespace privometer

#endif  // PRIVOMETER_EXTENDED_REAL_HPP
