#include "gyroloop/structure.hpp"

#include <algorithm>
#include <array>

#include "gyroloop/gyration.hpp"

namespace gyroloop {

bool Subsystem::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

int commutator(const Loop& loop, int a, int b) {
  const int ab = loop.mul(a, b);
  const GyrMap g = gyr(loop, a, b);
  return loop.mul_unchecked(loop.inv(ab), g.image[loop.mul_unchecked(b, a)]);
}

Subsystem generated_subsystem(const Loop& loop, const std::vector<int>& seed) {
  const int n = loop.order();
  std::vector<char> in(static_cast<size_t>(n), 0);
  in[loop.identity()] = 1;
  for (int a : seed) {
    if (a < 0 || a >= n) throw IndexOutOfRangeError("generated_subsystem seed " + std::to_string(a));
    in[a] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (!in[a]) continue;
      const int ia = loop.inv(a);
      if (!in[ia]) {
        in[ia] = 1;
        changed = true;
      }
      for (int b = 0; b < n; ++b) {
        if (!in[b]) continue;
        const int ab = loop.mul_unchecked(a, b);
        if (!in[ab]) {
          in[ab] = 1;
          changed = true;
        }
      }
    }
  }
  Subsystem s{loop, {}};
  for (int a = 0; a < n; ++a)
    if (in[a]) s.members.push_back(a);
  return s;
}

Subsystem derived_subgyrogroup(const Loop& loop) {
  GyroCheck gc = is_gyrogroup(loop);
  if (!gc) throw NotAGyrogroupError("derived_subgyrogroup: " + gc.describe());
  const int n = loop.order();
  std::vector<int> seed;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) seed.push_back(commutator(loop, a, b));
  return generated_subsystem(loop, seed);
}

bool is_subgroup(const Subsystem& s) {
  for (int a : s.members)
    for (int b : s.members) {
      const int ab = s.parent.mul_unchecked(a, b);
      for (int c : s.members)
        if (s.parent.mul_unchecked(ab, c) !=
            s.parent.mul_unchecked(a, s.parent.mul_unchecked(b, c)))
          return false;
    }
  return true;
}

NormalityCheck is_normal(const Subsystem& s) {
  const Loop& loop = s.parent;
  const int n = loop.order();
  std::vector<char> related(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      related[static_cast<size_t>(a) * n + b] =
          s.contains(loop.mul_unchecked(loop.inv(a), b)) ? 1 : 0;

  // Reflexivity holds because the identity is a member. Symmetry:
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (related[static_cast<size_t>(a) * n + b] &&
          !related[static_cast<size_t>(b) * n + a])
        return NormalityCheck{false, "sym", {a, b, -1, -1}};
  // Transitivity:
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!related[static_cast<size_t>(a) * n + b]) continue;
      for (int c = 0; c < n; ++c)
        if (related[static_cast<size_t>(b) * n + c] &&
            !related[static_cast<size_t>(a) * n + c])
          return NormalityCheck{false, "trans", {a, b, c, -1}};
    }
  // Compatibility with the operation over all related pairs.
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (!related[static_cast<size_t>(a) * n + a2]) continue;
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (!related[static_cast<size_t>(b) * n + b2]) continue;
          const int ab = loop.mul_unchecked(a, b);
          const int a2b2 = loop.mul_unchecked(a2, b2);
          if (!related[static_cast<size_t>(ab) * n + a2b2])
            return NormalityCheck{false, "cong", {a, a2, b, b2}};
        }
    }
  return NormalityCheck{true, "", {-1, -1, -1, -1}};
}

bool gyr_stable(const Subsystem& s) {
  const Loop& loop = s.parent;
  const int n = loop.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const GyrMap g = gyr(loop, a, b);
      for (int x : s.members)
        if (!s.contains(g.image[x])) return false;
    }
  return true;
}

CosetDecomposition left_cosets(const Subsystem& s) {
  const Loop& loop = s.parent;
  const int n = loop.order();
  CosetDecomposition out;
  std::vector<std::vector<int>> all;
  for (int a = 0; a < n; ++a) {
    std::vector<int> coset;
    for (int x : s.members) coset.push_back(loop.mul_unchecked(a, x));
    std::sort(coset.begin(), coset.end());
    all.push_back(std::move(coset));
  }
  std::vector<std::vector<int>> distinct = all;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<int> covered(static_cast<size_t>(n), 0);
  bool partition = true;
  for (const auto& coset : distinct)
    for (int x : coset) covered[x] += 1;
  for (int x = 0; x < n; ++x)
    if (covered[x] != 1) partition = false;
  out.cosets = std::move(distinct);
  out.is_partition = partition;
  return out;
}

std::vector<size_t> commutativity_sweep(const std::vector<Loop>& gyrogroups) {
  std::vector<size_t> counterexamples;
  for (size_t i = 0; i < gyrogroups.size(); ++i) {
    const Loop& loop = gyrogroups[i];
    const int n = loop.order();
    bool commutative = true;
    for (int a = 0; a < n && commutative; ++a)
      for (int b = 0; b < n && commutative; ++b)
        if (loop.mul_unchecked(a, b) != loop.mul_unchecked(b, a)) commutative = false;
    if (commutative && !is_associative(loop)) counterexamples.push_back(i);
  }
  return counterexamples;
}

}  // namespace gyroloop
