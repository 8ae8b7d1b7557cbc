#pragma once

#include <vector>

#include "gyroloop/errors.hpp"

namespace gyroloop {

/// An n-by-n multiplication table over element indices 0..n-1.
/// Validated for shape and entry range only; no Latin-square requirement.
class CayleyTable {
 public:
  /// Builds a table from raw rows. Throws NonSquareError or
  /// EntryOutOfRangeError; does not require the Latin-square property.
  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int i, int j) const { return cells_[static_cast<size_t>(i) * n_ + j]; }

  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const CayleyTable& other) const = default;

 private:
  CayleyTable(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {}

  int n_ = 0;
  std::vector<int> cells_;
};

/// Convenience spelling matching the operation name.
inline CayleyTable load_table(const std::vector<std::vector<int>>& rows) {
  return CayleyTable::from_rows(rows);
}

}  // namespace gyroloop
