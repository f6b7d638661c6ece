#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "montame/ideal.hpp"

namespace montame {

/// A family of index subsets of {1..n}, standing for coordinate ideals /
/// coordinate subspaces. Canonical: subsets are stored as bitmasks, sorted
/// ascending, duplicates removed.
class BuildingFamily {
public:
  BuildingFamily(int n, const std::vector<std::vector<int>>& sets);

  int n() const { return n_; }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  std::vector<std::vector<int>> sets() const;
  bool contains(std::uint64_t mask) const;

  static std::vector<int> mask_to_indices(std::uint64_t mask);

  bool operator==(const BuildingFamily& other) const {
    return n_ == other.n_ && masks_ == other.masks_;
  }

private:
  friend BuildingFamily closure_of(int n, std::vector<std::uint64_t> masks, std::size_t limit);
  BuildingFamily() = default;
  int n_ = 0;
  std::vector<std::uint64_t> masks_;
};

/// (x_1, ..., x_n), the reduced ideal of the origin.
MonomialIdeal maximal_ideal(int n);

/// Reduced ideal of the first s coordinate axes (1 < s < n), built by
/// iterated intersection of the hyperplane-complement coordinate ideals and
/// cross-checked against the closed form
/// {x_i x_j : i < j <= s} + {x_i : i > s}.
MonomialIdeal axes_ideal(int n, int s);

/// axes_ideal(n,s) intersected with the cube of the maximal ideal; a tame
/// nonreduced structure on the union of axes. The vertex set is checked
/// against {2e_i + e_j : i <= s, j != i} + {3e_i : s < i <= n}.
MonomialIdeal rosenberg_ideal(int n, int s);

/// Smallest superfamily closed under union of any two members. Throws
/// std::length_error when the closure would exceed `limit` sets.
BuildingFamily arrangement_closure(const BuildingFamily& family,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Union-closure test on intersecting pairs. For n <= 8 a true answer is
/// additionally cross-checked against the decomposition characterization
/// (every member of the closure is the disjoint union of the maximal family
/// members it contains, and every irreducible member of the closure belongs
/// to the family); a failed cross-check throws InternalCheckError.
bool is_building_set(const BuildingFamily& family);

/// Product of the coordinate ideals of a building set; requires
/// is_building_set.
MonomialIdeal building_product(const BuildingFamily& family);

/// Product over all unordered pairs of sum(I_i, I_j); requires >= 2 ideals.
MonomialIdeal pairwise_sum_product(const std::vector<CoordinateCloud>& ideals);

/// Smoothing procedure: prod(I_i) * prod_{i<j}(I_i + I_j). Asserts that the
/// result is tame and radical-equal to the plain product.
MonomialIdeal smooth_product(const std::vector<CoordinateCloud>& ideals);

/// The permutohedron pi_{n,k}: base vector
/// (C(n-1,k-1), C(n-2,k-1), ..., C(k-1,k-1)=1, 0^{k-1}), whose distinct
/// permutations number n!/(k-1)! for k >= 2.
struct PermutohedronSpec {
  int n = 0;
  int k = 0;
  Vec base;

  PermutohedronSpec(int n, int k);
};

/// I_{n,k}: product of the coordinate ideals of all k-element index sets,
/// multiplied in lex order with minimalization after each factor.
/// Requires 2 <= k <= n; n <= 6 unless `force`.
MonomialIdeal permutohedral_ideal(const PermutohedronSpec& spec, bool force = false);

/// All distinct permutations of the base vector, sorted lex.
std::vector<Vec> permutohedron_vertices(const PermutohedronSpec& spec);

/// Expands the permutation polynomial prod(x_{i_1} + ... + x_{i_k}) over the
/// integers and returns the exponents with coefficient exactly 1, sorted
/// lex. Resource-guarded to n <= 5.
std::vector<Vec> permutation_polynomial_maxvectors(int n, int k);

}  // namespace montame
