#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyroloop/errors.hpp"

namespace gyroloop {

/// A bijection on {0..n-1}, stored as an image array.
class Perm {
 public:
  static Perm identity(int n);

  /// Validates bijectivity; throws LabelOutOfRangeError or RepeatedElementError.
  static Perm from_map(std::vector<int> map);

  int size() const { return static_cast<int>(map_.size()); }
  int apply(int x) const { return map_[x]; }
  int operator()(int x) const { return map_[x]; }

  Perm inverse() const;
  bool is_identity() const;

  const std::vector<int>& map() const { return map_; }

  bool operator==(const Perm& other) const = default;
  bool operator<(const Perm& other) const { return map_ < other.map_; }

 private:
  explicit Perm(std::vector<int> map) : map_(std::move(map)) {}
  std::vector<int> map_;
};

/// Composition x -> p(q(x)). Throws SizeMismatchError.
Perm compose(const Perm& p, const Perm& q);

/// Parses a product of cycles like "(3,4)(5,7)". Empty string and "()" give
/// the identity. With one_based set, labels 1..n map to internal 0..n-1.
/// Throws MalformedCycleError, RepeatedElementError, LabelOutOfRangeError.
Perm parse_cycles(const std::string& s, int n, bool one_based);

/// Disjoint-cycle text: cycles sorted by least element, least element first
/// within each cycle, fixed points omitted; identity renders as "()".
std::string format_cycles(const Perm& p, bool one_based);

/// Smallest set containing gens and the identity, closed under composition
/// and inverse. Breadth-first closure; result sorted. Throws SizeMismatchError
/// on mixed sizes; empty input yields the empty set (callers that need the
/// trivial group pass n explicitly via group_closure(gens, n)).
std::vector<Perm> group_closure(const std::vector<Perm>& gens, int n);

struct ClosureCheck {
  bool closed = false;
  // A pair (p,q) with compose(p,q) outside the set, when not closed.
  std::optional<std::pair<Perm, Perm>> witness;
};

/// True iff s together with the identity is closed under composition and
/// inverse (for finite sets composition closure implies inverse closure).
ClosureCheck is_closed_set(const std::vector<Perm>& s, int n);

}  // namespace gyroloop
