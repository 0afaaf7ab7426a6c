// SPDX-License-Identifier: Apache-2.0
#include "bct/integer.hpp"

#include <limits>

namespace bct {

Integer parse_integer(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("integer has no digits");
  }
  Integer out = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid digit '" + std::string(1, c) + "'");
    }
    out = out * 10 + (c - '0');
  }
  return negative ? Integer(-out) : out;
}

std::string to_string(const Integer& value) { return value.str(); }

std::optional<std::int64_t> to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

std::size_t to_size(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::size_t>::max()) {
    throw std::out_of_range("integer " + value.str() + " does not fit in size_t");
  }
  return value.convert_to<std::size_t>();
}

Bound::Bound(const Integer& value) {
  if (auto small = to_int64(value)) {
    small_ = *small;
  } else {
    big_ = std::make_shared<const Integer>(value);
  }
}

Integer Bound::value() const {
  if (kind_ != Kind::finite) {
    throw std::logic_error("value() on infinite bound");
  }
  return big_ ? *big_ : Integer(small_);
}

std::strong_ordering Bound::compare_slow(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  if (a.kind_ != Bound::Kind::finite) {
    return std::strong_ordering::equal;
  }
  Integer x = a.value();
  Integer y = b.value();
  if (x < y) {
    return std::strong_ordering::less;
  }
  if (y < x) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Bound Bound::add_slow(const Bound& a, const Bound& b) {
  if (a.is_finite() && b.is_finite()) {
    return Bound(Integer(a.value() + b.value()));
  }
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::domain_error("+inf + -inf is undefined");
  }
  return a.is_finite() ? b : a;
}

Bound Bound::negate_slow(const Bound& a) {
  switch (a.kind_) {
    case Bound::Kind::neg_inf:
      return Bound::pos_inf();
    case Bound::Kind::pos_inf:
      return Bound::neg_inf();
    case Bound::Kind::finite:
      break;
  }
  return Bound(Integer(-a.value()));
}

std::string Bound::str() const {
  switch (kind_) {
    case Kind::neg_inf:
      return "-inf";
    case Kind::pos_inf:
      return "+inf";
    case Kind::finite:
      break;
  }
  return big_ ? big_->str() : std::to_string(small_);
}

}  // namespace bct
