// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bct/element.hpp"
#include "bct/report.hpp"
#include "bct/topology.hpp"

// One verifier per claim about C(p,q) and its topologies. Sweeps run over
// exhaustive parameter boxes; every inclusion or identity inside is decided
// symbolically, and reports are assembled in sweep order.
namespace bct {

/// Optional window confirmation of symbolic checks inside a sweep: a seeded
/// 10% sample of instances (at most `limit`) is re-checked by brute force on
/// [0,window]², with factors of products drawn from [0,window/2]².
struct Crosscheck {
  bool enabled = false;
  std::size_t window = 40;
  std::size_t limit = 250;
  std::uint64_t seed = 20240601;
};

/// Product inclusion U_m(a)·U_m(b) ⊆ U_n(ab) for tau1 with
/// m = max{2n, i1, j1, i2, j2}, plus the inversion identity
/// U_n(a)⁻¹ = U_n(a⁻¹). A second pass records how the sweep fares with
/// m = n + max{i1, j1, i2, j2}.
WitnessReport verify_prop1(int max_index, int max_n, const Crosscheck& cc = {});

/// The same inclusion and inversion for tau2, plus: ↕x \ O_n(x) is finite of
/// size min(i,j) + n, and cl(O_n(x)) = ↕x.
WitnessReport verify_prop2(int max_index, int max_n, const Crosscheck& cc = {});

/// Shift inclusions a·W_{2m}(x) ⊆ W_m(ax) and W_{2m}(x)·a ⊆ W_m(xa) with
/// m = max{i,j,k,l}, inversion, cofiniteness of basic opens, and subcover
/// extraction on `covers` random covers.
WitnessReport verify_prop3(int max_index, int covers = 100, const Crosscheck& cc = {});

/// ↕a · ↕b = ↕(i+s, j+t) for all anchors up to max_index. Each product is
/// also compared with brute force on [0,window]².
WitnessReport verify_lemma2(int max_index, std::size_t window = 40);

/// x is determined by (xx⁻¹, x⁻¹x) on [0,n]².
WitnessReport verify_trace_injectivity(int n);

/// q^i p^m · x · q^n p^j maps ↓(m,n) onto ↓(i,j), with the reverse
/// translation as inverse, on the first `depth` + 1 elements.
WitnessReport verify_lemma4(int max_index, int depth);

/// Complete solution set of q^i p^m · X · q^n p^j = q^i p^j for
/// isolated = (i,j) and target = (m,n), checked against [0,window]².
WitnessReport thm1_propagate(const Element& isolated, const Element& target,
                             std::size_t window = 60);
/// thm1_propagate over all isolated and target points up to max_index.
WitnessReport verify_thm1(int max_index, std::size_t window = 60);

enum class SubspaceKind { down_set, idempotents };

/// Failure of quasi-regularity at x in the subspace Y (↓x or E(C(p,q))): a
/// relative neighbourhood U of x containing the relative closure of no
/// nonempty relative open set. Candidate opens are traces of basic opens
/// at points of Y, up to parameter max_n.
WitnessReport quasireg_fail(const Topology& t, SubspaceKind kind, const Element& x, int max_n);
WitnessReport verify_quasireg(int max_index, int max_n);

/// Failure of semiregularity at x: a basic neighbourhood U = basic(x,n0)
/// with int(cl(basic(x,n))) ⊄ U for every n ≤ max_n.
WitnessReport semireg_fail(const Topology& t, const Element& x, int max_n);
WitnessReport verify_semireg(int max_index, int max_n);

/// basic(x,n)⁻¹ = basic(x⁻¹,n) for every topology.
WitnessReport verify_inv_continuity(int max_index, int max_n);

/// Index of a basic open set basic(x, n).
struct BasicIndex {
  Element x;
  Integer n;
};

/// Raised when a family of basic opens misses a point.
class NotACover : public std::invalid_argument {
 public:
  explicit NotACover(Element witness);
  const Element& witness() const { return witness_; }

 private:
  Element witness_;
};

/// Finite subcover of a tauc cover of ω²: the member with the smallest
/// (finite) complement, then one member per remaining point. Ascending.
std::vector<std::size_t> subcover_tauc(const std::vector<BasicIndex>& cover);
/// Finite subcover of ↕x from tau2 basic opens (traces on ↕x): a member
/// whose trace contains a tail of the diagonal, then the finite remainder
/// point by point. Ascending.
std::vector<std::size_t> subcover_updown(const Element& x, const std::vector<BasicIndex>& cover);

WitnessReport verify_subcover_tauc(int covers, int max_index, std::uint64_t seed = 7);
WitnessReport verify_subcover_updown(int covers, int max_index, std::uint64_t seed = 11);

enum class Side { left, right };

/// Least k ≤ budget with a·basic(x,k) ⊆ basic(ax,n) (left) or
/// basic(x,k)·a ⊆ basic(xa,n) (right); nullopt when none.
std::optional<Integer> continuity_witness(const Topology& t, const Element& a, const Element& x,
                                          const Integer& n, Side side, const Integer& budget);

/// Searches a, b ≤ bound and n ≤ bound for parameters where no k up to the
/// stabilisation bound n + max{coordinates of a, b} + 1 gives
/// basic(a,k)·basic(b,k) ⊆ basic(ab,n).
WitnessReport joint_continuity_search(const Topology& t, int bound);

/// No point of [0,max_index]² is isolated in tau1, tau2, tauc; every point is
/// isolated in the discrete topology.
WitnessReport verify_remark1(int max_index);

/// Randomised region suite: `cases` instances per crosscheck operation on
/// [0,window]², plus complement involution and De Morgan laws.
WitnessReport verify_region_suite(int cases, std::size_t window = 40, std::uint64_t seed = 42);

}  // namespace bct
