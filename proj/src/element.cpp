// SPDX-License-Identifier: Apache-2.0
#include "bct/element.hpp"

#include <cctype>

namespace bct {

Element::Element(Integer i, Integer j) : i_(std::move(i)), j_(std::move(j)) {
  if (i_ < 0 || j_ < 0) {
    throw std::invalid_argument("bicyclic exponents must be non-negative, got (" + i_.str() +
                                "," + j_.str() + ")");
  }
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.i_ != b.i_) {
    return a.i_ < b.i_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.j_ != b.j_) {
    return a.j_ < b.j_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// q^k p^l · q^m p^n
Element mul(const Element& a, const Element& b) {
  const Integer& k = a.i();
  const Integer& l = a.j();
  const Integer& m = b.i();
  const Integer& n = b.j();
  if (l < m) {
    return {k - l + m, n};
  }
  if (l == m) {
    return {k, n};
  }
  return {k, l - m + n};
}

Element inv(const Element& a) { return {a.j(), a.i()}; }

std::pair<Element, Element> trace(const Element& a) {
  return {mul(a, inv(a)), mul(inv(a), a)};
}

bool leq(const Element& a, const Element& b) {
  return a.i() >= b.i() && a.i() - a.j() == b.i() - b.j();
}

Element translate(const Integer& i, const Integer& j, const Integer& m, const Integer& n,
                  const Element& x) {
  return mul(mul(Element(i, m), x), Element(n, j));
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a non-negative integer");
    }
    return parse_integer(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, what + ", found " + found);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Integer exponent(Cursor& in) {
  if (in.accept('^')) {
    return in.number();
  }
  return 1;
}

}  // namespace

Element parse_element(std::string_view text) {
  Cursor in(text);
  if (in.done()) {
    in.fail("empty element");
  }
  Integer i = 0;
  Integer j = 0;
  if (in.accept('(')) {
    i = in.number();
    in.expect(',');
    j = in.number();
    in.expect(')');
  } else if (in.peek() == '1') {
    in.expect('1');
  } else {
    bool any = false;
    if (in.accept('q')) {
      i = exponent(in);
      any = true;
    }
    if (in.accept('p')) {
      j = exponent(in);
      any = true;
    }
    if (!any) {
      in.fail("expected 'q', 'p', '1' or '('");
    }
  }
  if (!in.done()) {
    in.fail("unexpected trailing input");
  }
  return {std::move(i), std::move(j)};
}

std::string to_string(const Element& x) {
  if (x.i() == 0 && x.j() == 0) {
    return "1";
  }
  auto factor = [](char letter, const Integer& e) {
    std::string out(1, letter);
    if (e != 1) {
      out += "^" + e.str();
    }
    return out;
  };
  std::string out;
  if (x.i() != 0) {
    out = factor('q', x.i());
  }
  if (x.j() != 0) {
    if (!out.empty()) {
      out += ' ';
    }
    out += factor('p', x.j());
  }
  return out;
}

std::string to_pair_string(const Element& x) {
  return "(" + x.i().str() + "," + x.j().str() + ")";
}

}  // namespace bct
