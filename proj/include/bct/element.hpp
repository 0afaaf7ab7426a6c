// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "bct/integer.hpp"

namespace bct {

/// The normal form q^i p^j of the bicyclic monoid, stored as the pair (i, j).
///
/// Both exponents are non-negative; constructors reject negative values.
/// Ordering is lexicographic on (i, j), which is also the enumeration order
/// used everywhere a finite set of elements is listed.
class Element {
 public:
  Element() = default;
  Element(Integer i, Integer j);
  Element(long long i, long long j) : Element(Integer(i), Integer(j)) {}
  Element(int i, int j) : Element(Integer(i), Integer(j)) {}

  static Element identity() { return {}; }

  const Integer& i() const { return i_; }
  const Integer& j() const { return j_; }

  bool is_idempotent() const { return i_ == j_; }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  Integer i_ = 0;
  Integer j_ = 0;
};

Element mul(const Element& a, const Element& b);
Element inv(const Element& a);

/// (a·a⁻¹, a⁻¹·a) = ((i,i), (j,j)).
std::pair<Element, Element> trace(const Element& a);

/// Natural partial order: a ⪯ b iff a.i ≥ b.i and a.i − a.j = b.i − b.j.
bool leq(const Element& a, const Element& b);

/// q^i p^m · x · q^n p^j.
Element translate(const Integer& i, const Integer& j, const Integer& m, const Integer& n,
                  const Element& x);

/// Raised for malformed element, region, or word syntax. `position` is a
/// zero-based offset into the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts "q^i p^j" (either factor omissible, bare "q"/"p" meaning exponent
/// 1, "1" for the identity, whitespace ignored) and "(i,j)".
Element parse_element(std::string_view text);

/// "q^4 p", "q^2", "p^3", "1".
std::string to_string(const Element& x);
/// "(4,1)".
std::string to_pair_string(const Element& x);

}  // namespace bct
