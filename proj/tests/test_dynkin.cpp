#include <doctest.h>

#include "orbicalc/dynkin.hpp"

using namespace orbicalc;

TEST_CASE("parsing") {
  auto c = parse_dynkin("A19 + 2E8 + D4");
  CHECK(c.components.size() == 4);
  CHECK(c.total_rank() == 19 + 8 + 8 + 4);
  CHECK(parse_dynkin("").components.empty());
  CHECK_THROWS_AS(parse_dynkin("D3"), Error);   // D needs rank >= 4
  CHECK_THROWS_AS(parse_dynkin("E9"), Error);   // E in {6,7,8}
  CHECK_THROWS_AS(parse_dynkin("A0"), Error);
  CHECK_THROWS_AS(parse_dynkin("B2"), Error);
}

TEST_CASE("eu values") {
  CHECK(eu(parse_dynkin("A19")) == 20);
  CHECK(eu(DynkinConfiguration{}) == 0);
  CHECK(eu(parse_dynkin("E8 + E8 + D4")) == 26);
  // per-component coefficients
  for (unsigned l = 1; l <= 12; ++l)
    CHECK(eu(parse_dynkin("A" + std::to_string(l))) == l + 1);
  for (unsigned m = 4; m <= 12; ++m)
    CHECK(eu(parse_dynkin("D" + std::to_string(m))) == m + 2);
  for (unsigned n = 6; n <= 8; ++n)
    CHECK(eu(parse_dynkin("E" + std::to_string(n))) == n + 2);
}

TEST_CASE("eu additivity") {
  auto a = parse_dynkin("A5 + D7");
  auto b = parse_dynkin("2E6 + A1");
  DynkinConfiguration both = a;
  for (const auto& comp : b.components) both.components.push_back(comp);
  CHECK(eu(both) == eu(a) + eu(b));
}

TEST_CASE("condition z2") {
  CHECK(check_z2(parse_dynkin("A19")));
  CHECK(check_z2(DynkinConfiguration{}));
  CHECK_FALSE(check_z2(parse_dynkin("E8 + E8 + D4")));
  SUBCASE("monotone under adding components") {
    auto c = parse_dynkin("A10");
    bool prev = check_z2(c);
    for (int i = 0; i < 6; ++i) {
      c.add(AdeType::A, 2);
      bool cur = check_z2(c);
      CHECK((prev || !cur));  // fail never turns back into pass
      prev = cur;
    }
  }
}

TEST_CASE("condition z1") {
  FiberData full{"I3", {{1, true}, {1, true}, {1, true}}};
  FiberData partial{"I3b", {{1, true}, {1, false}, {1, true}}};
  FiberData multi{"II", {{2, true}, {1, false}}};

  CHECK(check_z1({partial}));             // no fully-included fiber
  CHECK(check_z1({full, partial}));       // exactly one
  CHECK_FALSE(check_z1({full, full}));    // two
  CHECK(check_z1({multi, partial}));      // multiplicity-2 component is exempt
  CHECK(check_z1({}));

  // only multiplicity-1 components matter: a fiber whose omitted component
  // has multiplicity 2 still counts as fully included
  FiberData omitted_mult2{"I0*", {{1, true}, {2, false}, {1, true}}};
  CHECK_FALSE(check_z1({omitted_mult2, full}));
}

TEST_CASE("rank bound against an ambient lattice") {
  CHECK(check_rank_bound(parse_dynkin("A19"), 22));
  CHECK_FALSE(check_rank_bound(parse_dynkin("A19 + A2"), 22));
  CHECK(check_rank_bound(parse_dynkin("A20"), 22));
  CHECK_FALSE(check_rank_bound(parse_dynkin("A19"), 20));
}
