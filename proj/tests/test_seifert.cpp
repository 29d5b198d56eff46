#include <doctest.h>

#include "orbicalc/seifert.hpp"

using namespace orbicalc;

namespace {

SurfaceModel elliptic_surface(int b) {
  auto s = SurfaceModel::projective_plane();
  for (int i = 1; i <= b; ++i) s.add_curve("C" + std::to_string(i), {3}, 1);
  for (int j = 1; j <= 9; ++j) {
    std::vector<std::string> through;
    for (int i = 1; i <= b; ++i) through.push_back("C" + std::to_string(i));
    if (j > 1) through.push_back("E" + std::to_string(j - 1));
    s = s.blow_up({"E" + std::to_string(j), through});
  }
  for (int i = 2; i <= b; ++i)
    s = s.blow_up({"F" + std::to_string(i), {"C" + std::to_string(i), "E9"}});
  return s;
}

OrbifoldSurface elliptic_orbifold(int b) {
  std::vector<std::string> chain;
  for (int j = 1; j <= 9; ++j) chain.push_back("E" + std::to_string(j));
  return contract_chain(elliptic_surface(b), chain);
}

TestClass identity_class(std::size_t index, std::size_t n) {
  IntVec p(n);
  p[index] = 1;
  return {"T" + std::to_string(index + 1), std::move(p), "declared"};
}

}  // namespace

TEST_CASE("group arithmetic") {
  FgAbelianGroup g;
  g.free_rank = 2;
  g.add_cyclic(12, 2);
  CHECK(g.to_string() == "Z^2 + Z_4^2 + Z_3^2");  // torsion sorted by (p, i)
  CHECK(g.torsion_order() == 144);
  g.add_cyclic(3, 1);
  CHECK(g.to_string() == "Z^2 + Z_4^2 + Z_3^3");
  CHECK(FgAbelianGroup{}.to_string() == "0");
}

TEST_CASE("factorize") {
  CHECK(factorize(360) ==
        std::vector<std::pair<Int, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("chern class numerator") {
  auto x = assign_isotropy(elliptic_orbifold(2), {{"C1", 2}, {"C2", 3}});
  auto s = make_seifert(x, {});
  CHECK(s.m_lcm() == 6);
  CHECK(chern_class_numerator(s) == IntVec{3, 2});

  auto s2 = make_seifert(assign_isotropy(elliptic_orbifold(2), {{"C1", 5}}), {});
  CHECK(s2.m_lcm() == 5);
  CHECK(chern_class_numerator(s2) == IntVec{1});

  CHECK_THROWS_AS(make_seifert(x, {{"C2", 3}}), BadLocalInvariant);  // gcd(3,3) != 1
}

TEST_CASE("h1 criteria") {
  SUBCASE("p-power tower passes with identity test classes") {
    auto x = assign_isotropy(elliptic_orbifold(3), {{"C1", 2}, {"C2", 4}, {"C3", 8}});
    auto s = make_seifert(x, {});
    for (std::size_t i = 0; i < 3; ++i) s.test_classes.push_back(identity_class(i, 3));
    auto v = check_h1_zero(s, true);
    CHECK(v.base_h1_zero);
    CHECK(v.surjective);
    CHECK(v.primitive);
    CHECK(v.ok());

    auto g = h2_total_space(s, v);
    FgAbelianGroup want;
    want.free_rank = 2;
    want.add_cyclic(2, 2);
    want.add_cyclic(4, 2);
    want.add_cyclic(8, 2);
    CHECK(g == want);
    CHECK(g.to_string() == "Z^2 + Z_2^2 + Z_4^2 + Z_8^2");
  }
  SUBCASE("no isotropy needs a primitivity citation") {
    auto x = elliptic_orbifold(2);
    auto s = make_seifert(x, {});
    auto v = check_h1_zero(s, true);
    CHECK(v.surjective);
    CHECK_FALSE(v.primitive);
    CHECK_THROWS_AS(h2_total_space(s, v), H1NotZero);

    s.primitivity_citation = "declared";
    v = check_h1_zero(s, true);
    CHECK(v.ok());
    auto g = h2_total_space(s, v);
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
  }
  SUBCASE("even pairings break surjectivity at p = 2") {
    auto x = assign_isotropy(elliptic_orbifold(2), {{"C1", 2}});
    auto s = make_seifert(x, {});
    s.test_classes.push_back({"T", {Int(2)}, "declared"});
    auto v = check_h1_zero(s, true);
    CHECK_FALSE(v.surjective);
    CHECK_FALSE(v.primitive);
    CHECK_FALSE(check_h1_zero(s, false).base_h1_zero);
  }
  SUBCASE("missing pairing data") {
    auto s = make_seifert(assign_isotropy(elliptic_orbifold(2), {{"C1", 2}}), {});
    CHECK_THROWS_AS(check_h1_zero(s, true), MissingPairingData);
    s.test_classes.push_back({"T", {Int(1), Int(0)}, "declared"});
    CHECK_THROWS_AS(check_h1_zero(s, true), MissingPairingData);
  }
}

TEST_CASE("h2 of the total space") {
  SUBCASE("free rank is b2 - 1 and torsion order is prod m^2g") {
    for (int b = 2; b <= 4; ++b) {
      std::vector<IsotropyData> iso;
      for (int i = 1; i <= b; ++i)
        iso.push_back({"C" + std::to_string(i), Int(pow(Int(3), i))});
      auto x = assign_isotropy(elliptic_orbifold(b), iso);
      auto s = make_seifert(x, {});
      for (std::size_t i = 0; i < static_cast<std::size_t>(b); ++i)
        s.test_classes.push_back(identity_class(i, b));
      auto g = h2_total_space(s, check_h1_zero(s, true));
      CHECK(g.free_rank == b - 1);
      Int want = 1;
      for (const auto& d : s.isotropy) want *= pow(d.m, 2);  // all genus 1
      CHECK(g.torsion_order() == want);
    }
  }
  SUBCASE("genus-2 divisor gives Z_m^4") {
    auto y = SurfaceModel::hirzebruch(2, HirzebruchConvention::PositiveSection);
    y.add_curve("Sinf", {1, -2}, 0);
    y.add_curve("D", {2, 1}, 2);
    auto x = assign_isotropy(contract_chain(y, {"Sinf"}), {{"D", 5}});
    auto s = make_seifert(x, {});
    s.test_classes.push_back({"sigma_minus_2f", {Int(1)}, "declared"});
    auto v = check_h1_zero(s, true);
    CHECK(v.ok());
    auto g = h2_total_space(s, v);
    CHECK(g.free_rank == 0);
    CHECK(g.to_string() == "Z_5^4");
  }
}

TEST_CASE("unit rescaling of b never changes the primitivity verdict") {
  for (Int m = 2; m <= 12; ++m) {
    // two divisors of multiplicities m and m+1 (coprime), fixed pairings
    auto x = assign_isotropy(elliptic_orbifold(2), {{"C1", m}, {"C2", m + 1}});
    std::optional<bool> first;
    for (Int b1 = 1; b1 < m; ++b1) {
      if (gcd(b1, m) != 1) continue;
      for (Int b2 = 1; b2 < m + 1; ++b2) {
        if (gcd(b2, m + 1) != 1) continue;
        auto s = make_seifert(x, {{"C1", b1}, {"C2", b2}});
        s.test_classes.push_back({"T1", {Int(1), Int(0)}, "declared"});
        s.test_classes.push_back({"T2", {Int(0), Int(1)}, "declared"});
        bool prim = check_h1_zero(s, true).primitive;
        if (!first) first = prim;
        CHECK(prim == *first);
      }
    }
  }
}
