#include <doctest.h>

#include <algorithm>

#include "gyroloop/fixtures.hpp"
#include "gyroloop/gyration.hpp"
#include "gyroloop/perm.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace gyroloop;

namespace {

// The five non-identity gyroautomorphisms of the order-16 fixture, 1-based.
const char* kG16Gyrators[5] = {
    "(3,4)(5,7)(9,10)(11,16)",
    "(3,5)(4,7)(9,11)(10,16)",
    "(3,5)(4,7)(9,16)(10,11)(12,13)(14,15)",
    "(3,7)(4,5)(9,11)(10,16)(12,13)(14,15)",
    "(3,7)(4,5)(9,16)(10,11)",
};

std::vector<Perm> g16_gyrator_perms() {
  std::vector<Perm> out;
  for (const char* s : kG16Gyrators) out.push_back(parse_cycles(s, 16, true));
  return out;
}

}  // namespace

TEST_SUITE("permutations") {

TEST_CASE("compose basics") {
  const Perm id = Perm::identity(5);
  const Perm p = parse_cycles("(1,2,3)", 5, false);
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);
  CHECK(compose(p, p.inverse()) == id);
  CHECK_THROWS_AS(compose(p, Perm::identity(4)), SizeMismatchError);
}

TEST_CASE("composing the first two listed gyrators lands back in the set") {
  const auto gy = g16_gyrator_perms();
  const Perm prod = compose(gy[0], gy[1]);
  // Direct multiplication of the two cycle forms.
  CHECK(format_cycles(prod, true) == "(3,7)(4,5)(9,16)(10,11)");
  CHECK(prod == gy[4]);
  CHECK(compose(gy[1], gy[0]) == prod);
}

TEST_CASE("parse_cycles handles paper-style one-based input") {
  const Perm p = parse_cycles("(3,4)(5,7)(9,10)(11,16)", 16, true);
  CHECK(p.apply(2) == 3);
  CHECK(p.apply(3) == 2);
  CHECK(p.apply(4) == 6);
  CHECK(p.apply(6) == 4);
  CHECK(p.apply(8) == 9);
  CHECK(p.apply(9) == 8);
  CHECK(p.apply(10) == 15);
  CHECK(p.apply(15) == 10);
  CHECK(p.apply(0) == 0);

  CHECK(parse_cycles("", 5, false) == Perm::identity(5));
  CHECK(parse_cycles("()", 5, true) == Perm::identity(5));
}

TEST_CASE("parse_cycles rejects malformed input") {
  CHECK_THROWS_AS(parse_cycles("(1,1)", 5, true), RepeatedElementError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 5, true), RepeatedElementError);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 5, true), LabelOutOfRangeError);
  CHECK_THROWS_AS(parse_cycles("(4,5)", 5, false), LabelOutOfRangeError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 5, true), MalformedCycleError);
  CHECK_THROWS_AS(parse_cycles("1,2", 5, true), MalformedCycleError);
  CHECK_THROWS_AS(parse_cycles("(1 2)", 5, true), MalformedCycleError);
}

TEST_CASE("format_cycles canonical form") {
  CHECK(format_cycles(Perm::identity(7), true) == "()");
  const std::string s = "(3,5)(4,7)(9,16)(10,11)(12,13)(14,15)";
  CHECK(format_cycles(parse_cycles(s, 16, true), true) == s);

  std::vector<int> swap01 = {1, 0, 2};
  CHECK(format_cycles(Perm::from_map(swap01), true) == "(1,2)");
  CHECK(format_cycles(Perm::from_map(swap01), false) == "(0,1)");
}

TEST_CASE("group_closure") {
  CHECK(group_closure({}, 3) == std::vector<Perm>{Perm::identity(3)});

  const Perm t = parse_cycles("(1,2)", 3, true);
  const auto two = group_closure({t}, 3);
  CHECK(two.size() == 2);

  const auto closure = group_closure(g16_gyrator_perms(), 16);
  CHECK(closure.size() > 6);
  CHECK(closure.size() == 8);
  CHECK(testsupport::pairwise_closure(g16_gyrator_perms(), 16) == closure);
}

TEST_CASE("is_closed_set") {
  CHECK(is_closed_set({Perm::identity(4)}, 4).closed);

  auto gy = g16_gyrator_perms();
  gy.push_back(Perm::identity(16));
  const ClosureCheck check = is_closed_set(gy, 16);
  CHECK_FALSE(check.closed);
  REQUIRE(check.witness.has_value());
  const Perm bad = compose(check.witness->first, check.witness->second);
  CHECK(std::find(gy.begin(), gy.end(), bad) == gy.end());

  const auto closure = group_closure(g16_gyrator_perms(), 16);
  CHECK(is_closed_set(closure, 16).closed);
}

TEST_CASE("property: parse/format round-trip") {
  CHECK(testsupport::prop_parse_format_roundtrip() == "");
}

TEST_CASE("property: closure invariants") {
  CHECK(testsupport::prop_closure_invariants() == "");
}

}  // TEST_SUITE
