// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bct/json_io.hpp"
#include "bct/oracle.hpp"
#include "bct/region.hpp"
#include "bct/report.hpp"
#include "bct/topology.hpp"
#include "bct/verify.hpp"

namespace bct::detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Counts instances and keeps the first failures (or, when nothing fails, the
// first few passing instances) as witnesses.
class Recorder {
 public:
  static constexpr std::size_t kMaxFailures = 12;
  static constexpr std::size_t kMaxExamples = 5;

  void pass(Json input, Json witness);
  void fail(Json input, Json witness);
  void count() { ++instances_; }
  // Whether pass() would keep another example.
  bool wants_example() const { return examples_.size() < kMaxExamples; }
  bool wants_failure() const { return failed_.size() < kMaxFailures; }

  std::size_t instances() const { return instances_; }
  std::size_t failures() const { return failures_; }

  // Writes instances/failures under `prefix` and returns the verdict.
  Verdict finish(WitnessReport& r, const std::string& prefix = "");

 private:
  std::size_t instances_ = 0;
  std::size_t failures_ = 0;
  std::vector<Witness> failed_;
  std::vector<Witness> examples_;
};

// Seeded 10% sample of a sweep, capped at cc.limit.
class Sampler {
 public:
  explicit Sampler(const Crosscheck& cc) : cc_(cc), rng_(cc.seed) {}
  bool take();
  std::size_t taken() const { return taken_; }
  std::size_t disagreements = 0;
  void write(WitnessReport& r) const;

 private:
  Crosscheck cc_;
  std::mt19937_64 rng_;
  std::bernoulli_distribution coin_{0.1};
  std::size_t taken_ = 0;
};

// basic(x, n) for x ∈ [0,max_coord]², n ≤ max_n, built on first use together
// with the cells of its complement.
class BasicCache {
 public:
  BasicCache(Topology t, int max_coord, int max_n);
  const Region& region(int i, int j, int n);
  const std::vector<Cell>& outside(int i, int j, int n);

 private:
  struct Entry {
    std::optional<Region> region;
    std::vector<Cell> outside;
  };
  Entry& entry(int i, int j, int n);

  Topology t_;
  int max_coord_;
  int max_n_;
  std::vector<Entry> entries_;
};

bool product_within(const Region& a, const Region& b, const std::vector<Cell>& outside);

oracle::Point to_point(const Element& x);
Element to_element(const oracle::Point& p);

// Every member of a finite region.
std::vector<Element> finite_members(const Region& r);

// Some x ∈ A, y ∈ B with x·y = z; nullopt when none is found with
// coordinates of x up to a generous limit.
std::optional<std::pair<Element, Element>> find_factors(const Region& a, const Region& b,
                                                       const Element& z);

// A product x·y ∉ T, if any: x, y from the regions, or nullopt.
std::optional<std::pair<Element, Element>> product_escape(const Region& a, const Region& b,
                                                         const Region& t);

// Brute force: factors on [0,w/2]², products by word rewriting, target
// evaluated on [0,w]². Returns a factor pair whose product leaves T.
std::optional<std::pair<oracle::Point, oracle::Point>> brute_product_escape(const Region& a,
                                                                           const Region& b,
                                                                           const Region& t,
                                                                           std::size_t w);

// Window comparison of inverse_image(R) with S by swapping the bitmap of R.
bool brute_inverse_equal(const Region& r, const Region& s, std::size_t w);

Json pair_json(const Element& x, const Element& y);

}  // namespace bct::detail
