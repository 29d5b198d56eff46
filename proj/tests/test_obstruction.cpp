#include <doctest.h>

#include <algorithm>

#include "orbicalc/obstruction.hpp"

using namespace orbicalc;

TEST_CASE("relation polynomial") {
  CHECK(relation_polynomial({5, -1, -2}) == 0);   // a = -1, n + 2b = 1
  CHECK(relation_polynomial({7, -1, -3}) == 0);
  CHECK(relation_polynomial({0, 0, 0}) == 0);     // degenerate, filtered later
  CHECK(relation_polynomial({3, 1, 1}) == 2);
  CHECK(relation_polynomial({2, 3, 1}) == (3 - 1) * (3 * 2 - 2) + 2 * 3);
}

TEST_CASE("sum relation derivation") {
  SUBCASE("symbolic identity holds for each n") {
    for (long long n = 0; n <= 25; ++n) {
      auto r = derive_sum_relation(n);
      CHECK(r.identity_d1);
      CHECK(r.identity_d2);
      CHECK(r.spanning_declared);
      CHECK(r.concluded());
    }
  }
  SUBCASE("without declared spanning nothing is concluded") {
    auto r = derive_sum_relation(2, false);
    CHECK(r.identity_d1);
    CHECK_FALSE(r.concluded());
  }
}

TEST_CASE("exhaustive search") {
  SUBCASE("tiny range is empty") {
    SearchOptions o;
    o.coefficient_bound = 1;
    o.n_bound = 1;
    CHECK(exhaustive_search(o).empty());
  }
  SUBCASE("moderate range is empty with positivity on") {
    SearchOptions o;
    o.coefficient_bound = 30;
    o.n_bound = 30;
    CHECK(exhaustive_search(o).empty());
  }
  SUBCASE("pre-positivity survivors all have a = -1, n + 2b = 1") {
    SearchOptions o;
    o.coefficient_bound = 30;
    o.n_bound = 30;
    o.apply_positivity = false;
    auto found = exhaustive_search(o);
    CHECK_FALSE(found.empty());
    for (const auto& c : found) {
      CHECK(c.a == -1);
      CHECK(c.n + 2 * c.b == 1);
      CHECK(relation_polynomial(c) == 0);
    }
  }
  SUBCASE("results are sorted by (n, a, b)") {
    SearchOptions o;
    o.coefficient_bound = 25;
    o.n_bound = 25;
    o.apply_positivity = false;
    auto found = exhaustive_search(o);
    auto key = [](const TorusPairCandidate& c) { return std::tuple(c.n, c.a, c.b); };
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [&](const auto& x, const auto& y) { return key(x) < key(y); }));
  }
}

TEST_CASE("kahler positivity feasibility") {
  // forms D_i . (x sigma + y f) = a_i t + b_i x on the open cone x > 0, t > 0
  CHECK(kahler_positivity_feasible(1, 0, 0, 1));     // both positive somewhere trivially
  CHECK_FALSE(kahler_positivity_feasible(-1, 0, 1, 1));  // D1 never positive
  CHECK_FALSE(kahler_positivity_feasible(0, 0, 1, 1));   // D1 identically zero
  CHECK(kahler_positivity_feasible(1, -1, -1, 2));   // opposite mixed, compatible slopes
  CHECK_FALSE(kahler_positivity_feasible(1, -1, -2, 1));  // slopes exclude each other
  CHECK(kahler_positivity_feasible(2, -1, 3, -1));   // same orientation
}
