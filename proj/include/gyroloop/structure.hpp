#pragma once

#include <array>
#include <string>
#include <vector>

#include "gyroloop/loop.hpp"

namespace gyroloop {

/// A subset of a loop containing the identity and closed under the loop
/// operation and inverses. Members are kept sorted.
struct Subsystem {
  Loop parent;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int a) const;
};

/// [a,b] = inv(a*b) * gyr[a,b](b*a). Vanishes exactly on gyrocommutative
/// pairs. Callers establish is_gyrogroup; commutator itself only needs a loop.
int commutator(const Loop& loop, int a, int b);

/// Closure of seed plus the identity under the operation and inverses.
Subsystem generated_subsystem(const Loop& loop, const std::vector<int>& seed);

/// Closure of all commutators [a,b] over ordered pairs. Throws
/// NotAGyrogroupError when the loop is not a gyrogroup.
Subsystem derived_subgyrogroup(const Loop& loop);

/// True iff the operation restricted to the members is associative
/// (closure and inverses already hold by construction).
bool is_subgroup(const Subsystem& s);

struct NormalityCheck {
  bool normal = false;
  // "sym": inv(a)*b in s but inv(b)*a not; witness = (a,b,-,-).
  // "trans": chain a~b~c broken; witness = (a,b,c,-).
  // "cong": a~a' and b~b' but (a*b) !~ (a'*b'); witness = (a,a',b,b').
  std::string reason;
  std::array<int, 4> witness{-1, -1, -1, -1};

  explicit operator bool() const { return normal; }
};

/// Normality as a congruence test: the relation a ~ b iff inv(a)*b is a
/// member must be an equivalence relation whose classes are compatible with
/// the operation. Reduces to classical normality on groups.
NormalityCheck is_normal(const Subsystem& s);

/// Whether every gyration map of the parent sends members to members.
/// Reported separately from the congruence verdict; the two are not asserted
/// to agree.
bool gyr_stable(const Subsystem& s);

struct CosetDecomposition {
  std::vector<std::vector<int>> cosets;  // a*s in ascending order of least element
  bool is_partition = false;
};

/// The left cosets a*s for all a, with a flag for whether they partition the
/// parent.
CosetDecomposition left_cosets(const Subsystem& s);

/// Every gyrogroup in the corpus with a*b == b*a for all pairs that is not
/// associative. An empty list supports the conjecture that commutative
/// gyrogroups are groups. Inputs must pass is_gyrogroup.
std::vector<size_t> commutativity_sweep(const std::vector<Loop>& gyrogroups);

}  // namespace gyroloop
