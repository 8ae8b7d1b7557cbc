#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gyroloop/loop.hpp"
#include "gyroloop/perm.hpp"

namespace gyroloop {

/// Cheap relabeling-invariant data; equality is necessary (never sufficient)
/// for isomorphism. Left powers a^(1)=a, a^(k+1)=a*a^(k) are used because
/// loops here need not be power-associative.
struct IsoInvariant {
  int order = 0;
  std::vector<int> left_order_spectrum;   // sorted multiset of left power orders
  std::vector<int> row_fixpoint_counts;   // sorted multiset of |{j : a*j == j}|
  std::vector<int> diagonal_left_orders;  // sorted multiset of left orders of a*a

  bool operator==(const IsoInvariant& other) const = default;
};

IsoInvariant iso_invariant(const Loop& loop);

/// Least k >= 1 with a^(k) == identity under left powers.
int left_power_order(const Loop& loop, int a);

/// Per-element signature (left order, row fixpoints, left order of a*a);
/// isomorphisms must match signatures pointwise.
std::vector<std::array<int, 3>> element_signatures(const Loop& loop);

/// All permutations p with p(e) == e and p(x*y) == p(x)*p(y), found by
/// backtracking over images with signature pruning. Sorted output.
std::vector<Perm> automorphism_group(const Loop& loop);

/// A witness isomorphism L1 -> L2 if one exists. Candidate images are tried
/// in ascending label order, so L vs itself yields the identity.
std::optional<Perm> are_isomorphic(const Loop& lhs, const Loop& rhs);

/// The lexicographically smallest row-major table over all relabelings that
/// send the identity to 0, found by branch-and-bound.
Loop canonical_form(const Loop& loop);

/// Table-level variant for Latin squares with a two-sided identity that may
/// lack two-sided inverses (the all-loops enumerator needs those).
CayleyTable canonical_table(const CayleyTable& table, int identity);

/// Byte key: the order followed by the canonical form's cells in row-major
/// order. Constant on isomorphism classes and distinct across them.
std::vector<std::uint8_t> canonical_key(const Loop& loop);
std::vector<std::uint8_t> canonical_key(const CayleyTable& table, int identity);

/// FNV-1a 64 digest of a key, as 16 lowercase hex characters.
std::string key_digest(const std::vector<std::uint8_t>& key);

/// Relabels so the identity sits at index 0 (swaps 0 and the identity).
Loop normalize_identity(const Loop& loop);

/// Applies a relabeling permutation: entry (p(i), p(j)) of the result equals
/// p(table(i,j)).
CayleyTable relabel(const CayleyTable& table, const Perm& p);

}  // namespace gyroloop
