#pragma once

#include <vector>

#include "gyroloop/cayley_table.hpp"

namespace gyroloop {

/// A validated loop: Latin-square Cayley table with a two-sided identity
/// and two-sided inverses. Immutable after construction; all predicates are
/// pure and safe to call concurrently on shared instances.
class Loop {
 public:
  /// Validates the table. Throws NotLatinSquareError, NoTwoSidedIdentityError
  /// or NoTwoSidedInverseError. Relabels nothing: the identity stays wherever
  /// the table puts it.
  static Loop from_table(CayleyTable table);

  int order() const { return table_.order(); }
  int identity() const { return identity_; }

  /// a * b by table lookup. Throws IndexOutOfRangeError.
  int mul(int a, int b) const;

  /// Unchecked lookup for hot paths.
  int mul_unchecked(int a, int b) const { return table_.at(a, b); }

  /// Two-sided inverse of a.
  int inv(int a) const;

  const CayleyTable& table() const { return table_; }
  const std::vector<int>& inverse_map() const { return inv_; }

  bool operator==(const Loop& other) const { return table_ == other.table_; }

 private:
  Loop(CayleyTable table, int identity, std::vector<int> inv)
      : table_(std::move(table)), identity_(identity), inv_(std::move(inv)) {}

  CayleyTable table_;
  int identity_ = 0;
  std::vector<int> inv_;
};

inline Loop as_loop(CayleyTable table) { return Loop::from_table(std::move(table)); }

/// Exhaustive triple check of (a*b)*c == a*(b*c).
bool is_associative(const Loop& loop);
bool is_associative(const CayleyTable& table);

/// Left Bol identity a*(b*(a*c)) == (a*(b*a))*c over all triples.
bool is_left_bol(const Loop& loop);
bool is_left_bol(const CayleyTable& table);

/// Moufang identity z*(x*(z*y)) == ((z*x)*z)*y over all triples.
/// In loops all Moufang identities are equivalent, so this one form suffices.
bool is_moufang(const Loop& loop);

}  // namespace gyroloop
