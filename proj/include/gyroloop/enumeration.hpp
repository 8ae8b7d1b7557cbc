#pragma once

#include <vector>

#include "gyroloop/loop.hpp"

namespace gyroloop {

struct EnumOptions {
  bool non_associative_only = false;
  int threads = 0;             // 0: OpenMP default
  double time_budget_secs = 0; // 0: unbounded
};

struct EnumerationResult {
  std::vector<Loop> loops;  // canonical forms, ascending canonical_key order
  bool complete = true;     // false when the time budget ran out
};

/// One representative per isomorphism class of left Bol loops of order n,
/// optionally restricted to non-associative ones. Depth-first completion of
/// normalized tables (row 0 and column 0 fixed to the identity pattern) with
/// Latin-square bitset constraints; every left Bol triple is verified the
/// moment its last table lookup is filled in. Isomorph rejection is by
/// canonical-key dedup after completion, and the emitted representative is
/// the canonical form itself, so output is independent of search order.
///
/// Splits the search at the first unset row into independent subtree tasks
/// run by an OpenMP worker pool; results merge deterministically.
EnumerationResult enumerate_left_bol(int n, const EnumOptions& opts = {});

/// Single-threaded reference of the same search, kept for testing the
/// parallel kernel against.
EnumerationResult enumerate_left_bol_serial(int n, const EnumOptions& opts = {});

/// All loops of order n up to isomorphism, as canonical tables; the
/// cross-check oracle for the Bol enumerator at small orders. Loops here only
/// need a two-sided identity, not two-sided inverses, so raw tables are
/// returned instead of validated Loop values. Throws OrderTooLargeError for
/// n > 6.
std::vector<CayleyTable> enumerate_all_loops(int n);

}  // namespace gyroloop
