#include "gyroloop/cayley_table.hpp"

namespace gyroloop {

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw NonSquareError("table has no rows");
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw NonSquareError("row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v < 0 || v >= n) throw EntryOutOfRangeError(i, j, v);
      cells.push_back(v);
    }
  }
  return CayleyTable(n, std::move(cells));
}

}  // namespace gyroloop
