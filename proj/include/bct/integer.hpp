// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bct {

/// Arbitrary-size signed integer used for every exponent and bound.
using Integer = boost::multiprecision::cpp_int;

/// Parses a decimal integer (optional leading '-'); throws std::invalid_argument.
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);

/// Narrowing with an explicit failure instead of wraparound.
std::optional<std::int64_t> to_int64(const Integer& value);
std::size_t to_size(const Integer& value);

/// An element of Z extended with -inf and +inf.
///
/// Arithmetic is only defined where the result is unambiguous: adding
/// opposite infinities throws std::domain_error. Values that fit in 64 bits
/// are kept inline and promoted on overflow.
class Bound {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  Bound() = default;
  Bound(const Integer& value);                               // NOLINT
  Bound(long long value) : small_(value) {}                  // NOLINT
  Bound(int value) : small_(value) {}                        // NOLINT

  static Bound neg_inf() { return Bound(Kind::neg_inf); }
  static Bound pos_inf() { return Bound(Kind::pos_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// Throws std::logic_error when infinite.
  Integer value() const;

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.is_small() && b.is_small()) {
      return a.small_ == b.small_;
    }
    return compare_slow(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (a.is_small() && b.is_small()) {
      return a.small_ <=> b.small_;
    }
    return compare_slow(a, b);
  }

  friend Bound operator+(const Bound& a, const Bound& b) {
    std::int64_t sum = 0;
    if (a.is_small() && b.is_small() && !__builtin_add_overflow(a.small_, b.small_, &sum)) {
      return Bound(static_cast<long long>(sum));
    }
    return add_slow(a, b);
  }
  friend Bound operator-(const Bound& a, const Bound& b) { return a + (-b); }
  friend Bound operator-(const Bound& a) {
    if (a.is_small() && a.small_ != INT64_MIN) {
      return Bound(static_cast<long long>(-a.small_));
    }
    return negate_slow(a);
  }

  std::string str() const;

 private:
  explicit Bound(Kind kind) : kind_(kind) {}

  static std::strong_ordering compare_slow(const Bound& a, const Bound& b);
  static Bound add_slow(const Bound& a, const Bound& b);
  static Bound negate_slow(const Bound& a);

  bool is_small() const { return kind_ == Kind::finite && !big_; }

  Kind kind_ = Kind::finite;
  std::int64_t small_ = 0;
  // Set only for finite values outside the 64-bit range.
  std::shared_ptr<const Integer> big_;
};

inline const Bound& min(const Bound& a, const Bound& b) { return b < a ? b : a; }
inline const Bound& max(const Bound& a, const Bound& b) { return a < b ? b : a; }

}  // namespace bct
