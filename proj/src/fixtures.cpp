#include "gyroloop/fixtures.hpp"

namespace gyroloop {

CayleyTable g16_table() {
  static const std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
      {1, 0, 4, 6, 2, 7, 3, 5, 10, 15, 8, 12, 11, 14, 13, 9},
      {2, 3, 5, 7, 1, 6, 0, 4, 12, 11, 14, 10, 15, 8, 9, 13},
      {3, 2, 7, 5, 0, 4, 1, 6, 11, 12, 13, 15, 10, 9, 8, 14},
      {4, 6, 1, 0, 5, 3, 7, 2, 14, 13, 12, 8, 9, 10, 15, 11},
      {5, 7, 6, 4, 3, 0, 2, 1, 15, 10, 9, 14, 13, 12, 11, 8},
      {6, 4, 0, 1, 7, 2, 5, 3, 13, 14, 11, 9, 8, 15, 10, 12},
      {7, 5, 3, 2, 6, 1, 4, 0, 9, 8, 15, 13, 14, 11, 12, 10},
      {8, 9, 11, 12, 13, 15, 14, 10, 5, 7, 1, 6, 4, 3, 2, 0},
      {9, 8, 12, 11, 14, 10, 13, 15, 7, 5, 0, 4, 6, 2, 3, 1},
      {10, 15, 13, 14, 11, 9, 12, 8, 1, 0, 5, 3, 2, 6, 4, 7},
      {11, 12, 8, 9, 10, 14, 15, 13, 2, 3, 4, 0, 1, 7, 5, 6},
      {12, 11, 9, 8, 15, 13, 10, 14, 3, 2, 6, 1, 0, 5, 7, 4},
      {13, 14, 15, 10, 9, 12, 8, 11, 6, 4, 3, 7, 5, 0, 1, 2},
      {14, 13, 10, 15, 8, 11, 9, 12, 4, 6, 2, 5, 7, 1, 0, 3},
      {15, 10, 14, 13, 12, 8, 11, 9, 0, 1, 7, 2, 3, 4, 6, 5},
  };
  return CayleyTable::from_rows(rows);
}

}  // namespace gyroloop
