#include "gyroloop/loop.hpp"

namespace gyroloop {

Loop Loop::from_table(CayleyTable table) {
  const int n = table.order();

  // Latin-square property: each row and column is a permutation of 0..n-1.
  std::vector<char> seen(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = table.at(i, j);
      if (seen[v]) throw NotLatinSquareError(true, i, v);
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      const int v = table.at(i, j);
      if (seen[v]) throw NotLatinSquareError(false, j, v);
      seen[v] = 1;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table.at(e, a) == a && table.at(a, e) == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NoTwoSidedIdentityError();

  std::vector<int> inv(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table.at(a, b) == identity && table.at(b, a) == identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw NoTwoSidedInverseError(a);
  }

  return Loop(std::move(table), identity, std::move(inv));
}

int Loop::mul(int a, int b) const {
  const int n = order();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw IndexOutOfRangeError("mul(" + std::to_string(a) + "," +
                               std::to_string(b) + ") on loop of order " +
                               std::to_string(n));
  return table_.at(a, b);
}

int Loop::inv(int a) const {
  if (a < 0 || a >= order())
    throw IndexOutOfRangeError("inv(" + std::to_string(a) + ") on loop of order " +
                               std::to_string(order()));
  return inv_[a];
}

bool is_associative(const CayleyTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = t.at(a, b);
      for (int c = 0; c < n; ++c)
        if (t.at(ab, c) != t.at(a, t.at(b, c))) return false;
    }
  return true;
}

bool is_associative(const Loop& loop) { return is_associative(loop.table()); }

bool is_left_bol(const CayleyTable& t) {
  const int n = t.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int aba = t.at(a, t.at(b, a));
      for (int c = 0; c < n; ++c)
        if (t.at(a, t.at(b, t.at(a, c))) != t.at(aba, c)) return false;
    }
  return true;
}

bool is_left_bol(const Loop& loop) { return is_left_bol(loop.table()); }

bool is_moufang(const Loop& loop) {
  const int n = loop.order();
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x) {
      const int zxz = loop.mul_unchecked(loop.mul_unchecked(z, x), z);
      for (int y = 0; y < n; ++y)
        if (loop.mul_unchecked(z, loop.mul_unchecked(x, loop.mul_unchecked(z, y))) !=
            loop.mul_unchecked(zxz, y))
          return false;
    }
  return true;
}

}  // namespace gyroloop
