// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bct/element.hpp"
#include "bct/region.hpp"
#include "bct/topology.hpp"
#include "bct/window.hpp"

// Brute-force ground truth. Nothing here calls mul or the region algebra's
// set operations: words are reduced by deleting "pq", and sets are evaluated
// point by point from raw cell bounds with machine integers.
namespace bct::oracle {

/// Point of a window, machine-sized.
struct Point {
  std::size_t i = 0;
  std::size_t j = 0;

  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

enum class Strategy {
  stack,      // single left-to-right pass with a stack
  leftmost,   // repeatedly delete the leftmost "pq"
  rightmost,  // repeatedly delete the rightmost "pq"
};

/// Reduces a word over {p, q} by pq → ε. Whitespace is ignored; any other
/// character raises ParseError. The result is q^i p^j.
Point word_reduce(std::string_view word, Strategy strategy = Strategy::stack);

/// q^a.i p^a.j q^b.i p^b.j as a word.
std::string product_word(const Point& a, const Point& b);

/// Reduces the concatenated word letter by letter.
Point oracle_mul(const Point& a, const Point& b);

/// Same rewriting applied to the run-length form of the word: a block p^x
/// followed by q^y loses min(x, y) letters from each side at once.
Point oracle_mul_runs(const Point& a, const Point& b);

/// Membership bitmap of a window, row i major.
class WindowSet {
 public:
  explicit WindowSet(Window w) : w_(w), bits_(w.size(), 0) {}

  const Window& window() const { return w_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * w_.side() + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * w_.side() + j] = v ? 1 : 0; }
  std::size_t count() const;
  std::vector<Point> members() const;
  /// Earliest point (lexicographic) where the two sets differ.
  std::optional<Point> first_difference(const WindowSet& other) const;

  bool operator==(const WindowSet&) const = default;

 private:
  Window w_;
  std::vector<char> bits_;
};

/// Evaluates each cell's constraints on every point of the window.
WindowSet window_eval(const Region& r, const Window& w);

/// Pointwise membership of basic(x,n), from the defining formulas.
bool basic_contains(const Topology& t, const Point& x, std::size_t n, const Point& y);

enum class CheckOp {
  unite,
  intersect,
  complement,
  difference,
  product_image,
  inverse_image,
  closure_membership,
  interior_membership,
  solve_left,
  solve_right,
  solve_two_sided,
};

std::string_view op_name(CheckOp op);
std::optional<CheckOp> op_from_name(std::string_view name);
const std::vector<CheckOp>& all_ops();

struct CheckInputs {
  Region a;
  Region b;
  Topology topology = Topology::tau1();
  /// n tested by the closure and interior checks.
  std::size_t depth = 30;
  /// Factor bound for product_image: factors range over [0,k]².
  std::size_t factor_bound = 25;
  Element x;  // solve: a (left) or c (right)
  Element y;  // solve: right factor c of the two-sided equation
  Element z;  // solve: right-hand side
};

struct CheckResult {
  bool pass = true;
  std::optional<Point> first_difference;
  std::string detail;
};

/// Compares a symbolic result with brute force on the window.
///
/// Set operations compare bitmaps directly. product_image restricts both
/// factors to [0,k]² on both sides, so every product of the restricted sets
/// is enumerated and the comparison is exact on the window. Closure and
/// interior membership evaluate basic(x, depth) pointwise inside a search
/// square wide enough to reach every tail that R can meet. Solvers compare
/// the returned set with all window points solving the equation and also
/// require the returned set to lie in the window.
CheckResult crosscheck(CheckOp op, const CheckInputs& in, const Window& w);

/// Parameters of the random region suite.
struct RegionShape {
  int max_cells = 4;
  int max_const = 20;
  int max_offset = 12;
  /// Percent chance that an upper bound is left infinite.
  int open_percent = 40;
};

/// Random unions of cells, mixing raw difference cells with the named shapes.
class RegionGenerator {
 public:
  explicit RegionGenerator(std::uint64_t seed, RegionShape shape = {});

  Region next();
  Element element(int max_coord);
  std::mt19937_64& engine() { return rng_; }

 private:
  Cell cell();
  int uniform(int lo, int hi);

  std::mt19937_64 rng_;
  RegionShape shape_;
};

}  // namespace bct::oracle
