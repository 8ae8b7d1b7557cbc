#include "support/groups_catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace testsupport {

using gyroloop::CayleyTable;
using gyroloop::Loop;
using gyroloop::Perm;

namespace {

Loop loop_from(const std::vector<std::vector<int>>& rows) {
  return Loop::from_table(CayleyTable::from_rows(rows));
}

int pow_mod(int u, int e, int m) {
  long long r = 1, base = u % m;
  while (e > 0) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<int>(r);
}

}  // namespace

Loop cyclic_group(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return loop_from(rows);
}

Loop dihedral_group(int n) {
  const int order = 2 * n;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  auto rot = [&](int i) { return ((i % n) + n) % n; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rows[i][j] = rot(i + j);              // r^i r^j
      rows[i][n + j] = n + rot(i + j);      // r^i (r^j s)
      rows[n + i][j] = n + rot(i - j);      // (r^i s) r^j
      rows[n + i][n + j] = rot(i - j);      // (r^i s)(r^j s)
    }
  return loop_from(rows);
}

Loop dicyclic_group(int k) {
  const int m = 2 * k;  // order of the cyclic part
  const int order = 4 * k;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  auto rot = [&](int i) { return ((i % m) + m) % m; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      rows[i][j] = rot(i + j);                  // a^i a^j
      rows[i][m + j] = m + rot(i + j);          // a^i (a^j b)
      rows[m + i][j] = m + rot(i - j);          // (a^i b) a^j
      rows[m + i][m + j] = rot(i - j + k);      // (a^i b)(a^j b) = a^{i-j+k}
    }
  return loop_from(rows);
}

Loop semidirect_cyclic(int m, int k, int u) {
  if (pow_mod(u, k, m) != 1)
    throw std::runtime_error("semidirect_cyclic: u^k != 1 mod m");
  const int order = m * k;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int h = 0; h < k; ++h) {
    const int uh = pow_mod(u, h, m);
    for (int x = 0; x < m; ++x) {
      const int a = h * m + x;
      for (int j = 0; j < k; ++j)
        for (int y = 0; y < m; ++y)
          rows[a][j * m + y] = ((h + j) % k) * m + (x + uh * y) % m;
    }
  }
  return loop_from(rows);
}

Loop direct_product(const Loop& a, const Loop& b) {
  const int na = a.order(), nb = b.order();
  const int order = na * nb;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < na; ++z)
        for (int w = 0; w < nb; ++w)
          rows[x * nb + y][z * nb + w] = a.mul_unchecked(x, z) * nb + b.mul_unchecked(y, w);
  return loop_from(rows);
}

Loop semidirect_product(const Loop& n, const Loop& h, const std::vector<Perm>& action) {
  const int nn = n.order(), nh = h.order();
  if (static_cast<int>(action.size()) != nh)
    throw std::runtime_error("semidirect_product: one automorphism per h element");
  const int order = nn * nh;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x = 0; x < nn; ++x)
    for (int a = 0; a < nh; ++a)
      for (int y = 0; y < nn; ++y)
        for (int b = 0; b < nh; ++b)
          rows[x * nh + a][y * nh + b] =
              n.mul_unchecked(x, action[a].apply(y)) * nh + h.mul_unchecked(a, b);
  return loop_from(rows);
}

Loop central_quotient(const Loop& g, const std::vector<int>& center) {
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int z : center) coset.push_back(g.mul_unchecked(x, z));
    std::sort(coset.begin(), coset.end());
    const int id = static_cast<int>(cosets.size());
    for (int y : coset) coset_of[y] = id;
    cosets.push_back(std::move(coset));
  }
  const int order = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> rows(order, std::vector<int>(order, -1));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      const int prod = coset_of[g.mul_unchecked(cosets[i][0], cosets[j][0])];
      rows[i][j] = prod;
      // Well-definedness: any representative pair must land in the same coset.
      for (int x : cosets[i])
        for (int y : cosets[j])
          if (coset_of[g.mul_unchecked(x, y)] != prod)
            throw std::runtime_error("central_quotient: subgroup is not central/normal");
    }
  return loop_from(rows);
}

Loop chein_double(const Loop& g) {
  const int n = g.order();
  const int order = 2 * n;
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      rows[x][y] = g.mul_unchecked(x, y);                          // g * h
      rows[x][n + y] = n + g.mul_unchecked(y, x);                  // g * (h u) = (h g) u
      rows[n + x][y] = n + g.mul_unchecked(x, g.inv(y));           // (g u) * h = (g h^-1) u
      rows[n + x][n + y] = g.mul_unchecked(g.inv(y), x);           // (g u)(h u) = h^-1 g
    }
  return loop_from(rows);
}

Loop moufang_12() {
  return chein_double(dihedral_group(3));
}

namespace {

Perm perm_from(const std::vector<int>& map) { return Perm::from_map(map); }

std::vector<NamedGroup> order16_groups() {
  std::vector<NamedGroup> out;
  const Loop c2 = cyclic_group(2);
  const Loop c4 = cyclic_group(4);
  out.push_back({"C16", cyclic_group(16)});
  out.push_back({"C8xC2", direct_product(cyclic_group(8), c2)});
  out.push_back({"C4xC4", direct_product(c4, c4)});
  out.push_back({"C4xC2xC2", direct_product(c4, direct_product(c2, c2))});
  out.push_back({"C2^4", direct_product(direct_product(c2, c2), direct_product(c2, c2))});
  out.push_back({"D8", dihedral_group(8)});
  out.push_back({"SD16", semidirect_cyclic(8, 2, 3)});
  out.push_back({"M16", semidirect_cyclic(8, 2, 5)});
  out.push_back({"Q16", dicyclic_group(4)});
  out.push_back({"D4xC2", direct_product(dihedral_group(4), c2)});
  out.push_back({"Q8xC2", direct_product(dicyclic_group(2), c2)});
  out.push_back({"C4:C4", semidirect_cyclic(4, 4, 3)});
  {
    // (C4 x C2) : C2 with the involution (i,j) -> (i, i+j).
    const Loop n = direct_product(c4, c2);
    std::vector<int> phi(8);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) phi[i * 2 + j] = i * 2 + (i + j) % 2;
    std::vector<Perm> action = {Perm::identity(8), perm_from(phi)};
    out.push_back({"(C4xC2):C2", semidirect_product(n, c2, action)});
  }
  {
    // Central product D4 o C4: quotient of D4 x C4 by the diagonal C2.
    const Loop big = direct_product(dihedral_group(4), c4);
    // D4's central involution is r^2 (index 2); C4's is 2. Pair (2,2) has
    // index 2*4 + 2 = 10 in the product.
    out.push_back({"D4oC4", central_quotient(big, {0, 10})});
  }
  return out;
}

}  // namespace

std::vector<NamedGroup> groups_of_order(int n) {
  const Loop c2 = cyclic_group(2);
  switch (n) {
    case 1: return {{"C1", cyclic_group(1)}};
    case 2: return {{"C2", cyclic_group(2)}};
    case 3: return {{"C3", cyclic_group(3)}};
    case 4: return {{"C4", cyclic_group(4)}, {"C2xC2", direct_product(c2, c2)}};
    case 5: return {{"C5", cyclic_group(5)}};
    case 6: return {{"C6", cyclic_group(6)}, {"S3", dihedral_group(3)}};
    case 7: return {{"C7", cyclic_group(7)}};
    case 8:
      return {{"C8", cyclic_group(8)},
              {"C4xC2", direct_product(cyclic_group(4), c2)},
              {"C2^3", direct_product(direct_product(c2, c2), c2)},
              {"D4", dihedral_group(4)},
              {"Q8", dicyclic_group(2)}};
    case 9:
      return {{"C9", cyclic_group(9)}, {"C3xC3", direct_product(cyclic_group(3), cyclic_group(3))}};
    case 10: return {{"C10", cyclic_group(10)}, {"D5", dihedral_group(5)}};
    case 11: return {{"C11", cyclic_group(11)}};
    case 12: {
      // A4 = (C2 x C2) : C3, the generator cycling the three involutions.
      const Loop v4 = direct_product(c2, c2);
      // Elements of v4 indexed (x,y) -> 2x + y; phi: (x,y) -> (y, x+y).
      std::vector<int> phi(4);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) phi[2 * x + y] = 2 * y + (x + y) % 2;
      const Perm p = perm_from(phi);
      std::vector<Perm> action = {Perm::identity(4), p, gyroloop::compose(p, p)};
      return {{"C12", cyclic_group(12)},
              {"C6xC2", direct_product(cyclic_group(6), c2)},
              {"D6", dihedral_group(6)},
              {"A4", semidirect_product(v4, cyclic_group(3), action)},
              {"Dic3", dicyclic_group(3)}};
    }
    case 13: return {{"C13", cyclic_group(13)}};
    case 14: return {{"C14", cyclic_group(14)}, {"D7", dihedral_group(7)}};
    case 15: return {{"C15", cyclic_group(15)}};
    case 16: return order16_groups();
    default:
      throw std::runtime_error("groups_of_order: only n <= 16 is catalogued");
  }
}

int known_group_count(int n) {
  static const int counts[17] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  if (n < 1 || n > 16) throw std::runtime_error("known_group_count: n out of range");
  return counts[n];
}

}  // namespace testsupport
