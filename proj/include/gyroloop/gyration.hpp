#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyroloop/loop.hpp"
#include "gyroloop/perm.hpp"

namespace gyroloop {

/// Image of the gyration map c -> inv(a*b) * (a*(b*c)). On a validated loop
/// this is always a bijection (a composite of left translations); the flag is
/// kept so callers can assert it.
struct GyrMap {
  std::vector<int> image;
  bool bijective = false;

  Perm as_perm() const { return Perm::from_map(image); }
};

GyrMap gyr(const Loop& loop, int a, int b);

/// Distinct non-identity gyration maps over all pairs (a,b), in first-encounter
/// order scanning row-major. Unlike a scan that skips pairs with b == a or
/// b == inv(a), every pair is visited; the skipped-pair identities are asserted
/// separately by callers that need them.
struct GyratorScan {
  std::vector<Perm> non_identity;
  bool all_automorphisms = false;
  // First pair whose gyration fails the automorphism equation, if any.
  std::optional<std::pair<int, int>> failing_pair;
};

GyratorScan gyrator_set(const Loop& loop);

/// p(x*y) == p(x)*p(y) for all x,y.
bool is_automorphism(const Loop& loop, const Perm& p);

enum class GyroFailure {
  None,
  NotAutomorphism,   // witness (a,b)
  GyroassocFails,    // witness (a,b,c)
  LeftLoopFails,     // witness (a,b)
};

struct GyroCheck {
  bool ok = false;
  GyroFailure reason = GyroFailure::None;
  int a = -1, b = -1, c = -1;

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

/// Full gyrogroup decision: every gyration map is an automorphism,
/// gyroassociativity a*(b*c) == (a*b)*gyr[a,b](c) holds for all triples, and
/// the left loop property gyr[a,b] == gyr[a*b,b] holds for all pairs. The last
/// two are implied for left Bol loops but are checked exhaustively anyway as a
/// correctness cross-check.
GyroCheck is_gyrogroup(const Loop& loop);

enum class IdentityFailure {
  None,
  LeftGyroassocFails,  // (a*b)*c == a*(b*gyr[b,a](c)) fails at (a,b,c)
  RightPairFails,      // gyr[a,b] == gyr[a,b*a] fails at (a,b)
  DegeneratePairFails, // one of gyr[a,a], gyr[a,inv a], gyr[0,a], gyr[a,0] not identity
};

struct IdentityCheck {
  bool ok = false;
  IdentityFailure reason = IdentityFailure::None;
  int a = -1, b = -1, c = -1;

  explicit operator bool() const { return ok; }
  std::string describe() const;
};

/// Cross-checks the remaining gyrogroup identities: the mirrored
/// gyroassociativity (a*b)*c == a*(b*gyr[b,a](c)), the right-pair identity
/// gyr[a,b] == gyr[a,b*a], and the degenerate pairs
/// gyr[a,a] == gyr[a,inv a] == gyr[e,a] == gyr[a,e] == identity.
/// Callers establish is_gyrogroup first.
IdentityCheck check_theorem1_identities(const Loop& loop);

/// a*b == gyr[a,b](b*a) for all pairs. Throws NotAGyrogroupError when the
/// loop is not a gyrogroup (the property is only defined there).
bool is_gyrocommutative(const Loop& loop);

/// Classification record of one loop.
struct GyroProfile {
  int order = 0;
  bool is_left_bol = false;
  bool is_moufang = false;
  bool is_group = false;
  bool is_gyrogroup_flag = false;
  GyroCheck gyro_check;
  // Defined only when is_gyrogroup_flag is set.
  std::optional<bool> is_gyrocommutative;
  // Non-identity gyration maps are all identity, i.e. the loop gyrates
  // trivially. For gyrogroups this is equivalent to being a group.
  bool is_degenerate = false;

  // Distinct non-identity gyrators in first-encounter order (row-major scan);
  // this order defines the letter labels.
  std::vector<Perm> gyrators;
  bool gyrators_closed = false;
  std::optional<std::pair<Perm, Perm>> closure_witness;

  // gyr_index[a*n+b]: -1 for identity, else an index into gyrators.
  std::vector<int> gyr_index;

  int non_identity_gyrator_count() const { return static_cast<int>(gyrators.size()); }
};

/// Computes the complete profile: predicate flags, the gyrator set with
/// letter assignment in first-encounter order, and the closure verdict on the
/// gyrator set including the identity.
GyroProfile gyration_table(const Loop& loop);

/// Label text for profile cell values: "I" for -1, then the letter sequence
/// A,B,C,D,E,F,G,H,K,L,M,N,P,Q,R,S,T,U,V,W,X,Y,Z,J,O, continuing with
/// A1,B1,... once the plain letters run out.
std::string gyrator_label(int index);

/// Text rendering: a legend line per non-identity gyrator (1-based cycle
/// notation), then n rows of n labels.
std::string render_gyration_table(const GyroProfile& profile);

}  // namespace gyroloop
