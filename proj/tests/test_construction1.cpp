#include <doctest.h>

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "wpb/bits.hpp"
#include "wpb/boolean_function.hpp"
#include "wpb/construction1.hpp"
#include "wpb/family.hpp"
#include "wpb/orbits.hpp"
#include "wpb/weightwise_nl.hpp"

using wpb::BooleanFunction;
using wpb::ConstructionParams;

TEST_CASE("slice_sets: frozen counts at n=16") {
  SUBCASE("k=3: one group of 28 points") {
    auto s = wpb::slice_sets(16, 3);
    REQUIRE(s.groups.size() == 1);
    CHECK(s.groups[0].y1 == 0);
    CHECK(s.groups[0].r.size() == 28);
    CHECK(s.groups[0].t.empty());
    CHECK(s.groups[0].s.empty());
  }
  SUBCASE("k=4: one group, 56 for the first set and 27 for the second") {
    auto s = wpb::slice_sets(16, 4);
    REQUIRE(s.groups.size() == 1);
    CHECK(s.groups[0].r.empty());
    CHECK(s.groups[0].t.size() == 56);
    CHECK(s.groups[0].s.size() == 27);
  }
  SUBCASE("k=6: three groups of 70 + 51") {
    // Each group drops 3 marker tails and the 2 half-swap tails of the other
    // two groups, and keeps its own half-swap tail: 56 - 3 - 2 = 51.
    auto s = wpb::slice_sets(16, 6);
    REQUIRE(s.groups.size() == 3);
    for (const auto& g : s.groups) {
      CHECK(g.t.size() == 70);
      CHECK(g.s.size() == 51);
    }
  }
  SUBCASE("k=8: three groups of 56 + 65, k=10: one group of 28 + 55") {
    auto s8 = wpb::slice_sets(16, 8);
    REQUIRE(s8.groups.size() == 3);
    for (const auto& g : s8.groups) {
      CHECK(g.t.size() == 56);
      CHECK(g.s.size() == 65);
    }
    auto s10 = wpb::slice_sets(16, 10);
    REQUIRE(s10.groups.size() == 1);
    CHECK(s10.groups[0].t.size() == 28);
    CHECK(s10.groups[0].s.size() == 55);
  }
  SUBCASE("k=13 and beyond are vacuous") {
    CHECK(wpb::slice_sets(16, 11).groups.empty());
    CHECK(wpb::slice_sets(16, 13).groups.empty());
    CHECK(wpb::slice_sets(16, 15).groups.empty());
  }
}

TEST_CASE("slice_sets: every listed point has weight k and the right shape") {
  for (unsigned k = 3; k <= 15; ++k) {
    auto sets = wpb::slice_sets(16, k);
    for (const auto& g : sets.groups) {
      for (auto x : g.r) {
        CHECK(std::popcount(x) == static_cast<int>(k));
        CHECK((x >> 15) == 1u);           // leading one
        CHECK(((x >> 8) & 0xF) == 0u);    // zero quarter
        CHECK(((x >> 12) & 0x7) == g.y1); // y1 field
      }
      for (auto x : g.t) {
        CHECK(std::popcount(x) == static_cast<int>(k));
        CHECK((x >> 15) == 1u);
        CHECK(((x >> 8) & 0xF) == 0u);
        CHECK(((x >> 12) & 0x7) == g.y1);
      }
      for (auto x : g.s) {
        CHECK(std::popcount(x) == static_cast<int>(k));
        CHECK((x >> 15) == 1u);
        CHECK(((x >> 8) & 0xF) == 1u);    // marker bit at position n/2
        CHECK(((x >> 12) & 0x7) == g.y1);
        // Tails that rotate onto another group's points never appear: the
        // marker shape (y, 000, 1, 1), and the half-swap shape (1, y, 000, 1)
        // except the self tail y == y1 (whose point maps onto itself).
        std::uint32_t y2 = x & 0xFF;
        bool marker_shape = ((y2 & 0b11) == 0b11) && (((y2 >> 2) & 0b111) == 0) &&
                            (std::popcount(y2 >> 5) == static_cast<int>(k / 2) - 2);
        CHECK_FALSE(marker_shape);
        bool swap_shape = ((y2 >> 7) == 1u) && ((y2 & 1u) == 1u) &&
                          (((y2 >> 1) & 0b111) == 0) &&
                          (std::popcount((y2 >> 4) & 0b111) ==
                           static_cast<int>(k / 2) - 2);
        if (swap_shape) CHECK(((y2 >> 4) & 0b111) == g.y1);
      }
    }
  }
}

TEST_CASE("slice_sets: layout spot values") {
  auto s3 = wpb::slice_sets(16, 3);
  // Smallest point: leading one, empty y1, y2 = 0b11.
  CHECK(s3.groups[0].r.front() == 0x8003u);
  auto s4 = wpb::slice_sets(16, 4);
  CHECK(s4.groups[0].t.front() == 0x8007u);
  // First surviving second-set point: y2 = 3 is excluded, so 0b101 comes first.
  CHECK(s4.groups[0].s.front() == 0x8105u);
}

TEST_CASE("slice_sets validates n and k") {
  CHECK_THROWS_AS(wpb::slice_sets(16, 2), std::invalid_argument);
  CHECK_THROWS_AS(wpb::slice_sets(16, 16), std::invalid_argument);
  CHECK_THROWS_AS(wpb::slice_sets(12, 3), std::invalid_argument);
  CHECK_THROWS_AS(wpb::slice_sets(4, 3), std::invalid_argument);
  CHECK_NOTHROW(wpb::slice_sets(32, 3));
}

TEST_CASE("check_distinct_orbits holds for the real sets and fails on a collision") {
  for (unsigned k = 3; k <= 10; ++k) CHECK(wpb::check_distinct_orbits(wpb::slice_sets(16, k)));
  // 3 and 6 share one rotation orbit at n=8.
  wpb::SliceSets bad{8, 2, {wpb::SliceGroup{0, {3, 6}, {}, {}}}};
  CHECK_FALSE(wpb::check_distinct_orbits(bad));
}

TEST_CASE("base build: both modes give members separating the pair points") {
  wpb::OrbitIndex idx(8);
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 77ULL, 1234567ULL}) {
    ConstructionParams p{8, seed, wpb::Base8Mode::constrained_random, false};
    auto f = wpb::build(p);
    CHECK(wpb::is_family_member(f));
    CHECK(wpb::is_wpb(f));
    CHECK(wpb::base8_pair_constraint(f));
    CHECK(wpb::nl_k_reduced(f, 3, idx) >= 8);
  }
  ConstructionParams p{8, 0, wpb::Base8Mode::best_profile, false};
  auto f = wpb::build(p);
  CHECK(wpb::is_family_member(f));
  CHECK(wpb::base8_pair_constraint(f));
  CHECK(f == wpb::best_base8());
}

TEST_CASE("base8_pair_constraint reads exactly the two pair points") {
  auto f = wpb::best_base8();
  REQUIRE(wpb::base8_pair_constraint(f));
  auto g = f;
  // Flipping the whole orbit of one pair point toggles the constraint.
  std::uint32_t x = wpb::orbit_of(112, 8).representative;
  for (unsigned s = 0; s < 8; ++s) {
    g.flip(x);
    x = wpb::rotate(x, 1, 8);
  }
  CHECK_FALSE(wpb::base8_pair_constraint(g));
  BooleanFunction f4(4);
  CHECK_THROWS_AS(wpb::base8_pair_constraint(f4), std::invalid_argument);
}

TEST_CASE("best_base8: deterministic with the advertised profile") {
  auto f = wpb::best_base8();
  CHECK(f == wpb::best_base8());
  wpb::OrbitIndex idx(8);
  const std::vector<std::int64_t> want = {0, 9, 22, 27, 22, 9, 0};
  for (unsigned k = 1; k <= 7; ++k)
    CHECK(wpb::nl_k_reduced(f, k, idx) == want[k - 1]);
}

TEST_CASE("subfunction_seed separates slices and roles") {
  std::set<std::uint64_t> seen;
  for (unsigned k : {3u, 4u, 5u, 6u})
    for (auto role : {wpb::SubRole::r_set, wpb::SubRole::t_set, wpb::SubRole::s_set})
      seen.insert(wpb::subfunction_seed(99, k, role));
  CHECK(seen.size() == 12);
  CHECK(wpb::subfunction_seed(99, 3, wpb::SubRole::r_set) ==
        wpb::subfunction_seed(99, 3, wpb::SubRole::r_set));
  CHECK(wpb::subfunction_seed(99, 3, wpb::SubRole::r_set) !=
        wpb::subfunction_seed(100, 3, wpb::SubRole::r_set));
}

TEST_CASE("recursive build at n=16: member, wpb, deterministic") {
  ConstructionParams p{16, 2024, wpb::Base8Mode::constrained_random, false};
  auto f = wpb::build(p);
  CHECK(f.n() == 16);
  CHECK(wpb::is_family_member(f));
  CHECK(wpb::is_wpb(f));
  CHECK(wpb::degree(f) == 15);
  CHECK(wpb::build(p) == f);

  ConstructionParams q = p;
  q.seed = 2025;
  CHECK_FALSE(wpb::build(q) == f);
}

TEST_CASE("recursive build: installed values read back from the subfunctions") {
  const std::uint64_t seed = 555;
  ConstructionParams p{16, seed, wpb::Base8Mode::constrained_random, false};
  auto f = wpb::build(p);

  auto sub = [&](unsigned k, wpb::SubRole role) {
    ConstructionParams sp{8, wpb::subfunction_seed(seed, k, role),
                          wpb::Base8Mode::constrained_random, false};
    return wpb::build(sp);
  };

  for (unsigned k = 3; k <= 10; ++k) {
    auto sets = wpb::slice_sets(16, k);
    if (k % 2 == 1) {
      auto g = sub(k, wpb::SubRole::r_set);
      for (const auto& grp : sets.groups)
        for (auto x : grp.r) REQUIRE(f.get(x) == g.get(x & 0xFF));
    } else {
      auto g1 = sub(k, wpb::SubRole::t_set);
      auto g2 = sub(k, wpb::SubRole::s_set);
      for (const auto& grp : sets.groups) {
        for (auto x : grp.t) REQUIRE(f.get(x) == g1.get(x & 0xFF));
        for (auto x : grp.s) REQUIRE(f.get(x) == g2.get(x & 0xFF));
      }
    }
  }
}

TEST_CASE("recursive build: shared mode uses one subfunction everywhere") {
  const std::uint64_t seed = 808;
  ConstructionParams p{16, seed, wpb::Base8Mode::constrained_random, true};
  auto f = wpb::build(p);
  CHECK(wpb::is_family_member(f));

  ConstructionParams sp{8, wpb::subfunction_seed(seed, 0, wpb::SubRole::shared),
                        wpb::Base8Mode::constrained_random, false};
  auto g = wpb::build(sp);
  for (unsigned k : {3u, 4u, 7u}) {
    auto sets = wpb::slice_sets(16, k);
    for (const auto& grp : sets.groups) {
      for (auto x : grp.r) REQUIRE(f.get(x) == g.get(x & 0xFF));
      for (auto x : grp.t) REQUIRE(f.get(x) == g.get(x & 0xFF));
      for (auto x : grp.s) REQUIRE(f.get(x) == g.get(x & 0xFF));
    }
  }
  // Sharing changes the result relative to per-slice seeding.
  ConstructionParams q = p;
  q.share_subfunctions = false;
  CHECK_FALSE(wpb::build(q) == f);
}

TEST_CASE("recursive build keeps a healthy second slice") {
  wpb::OrbitIndex idx(16);
  ConstructionParams p{16, 7, wpb::Base8Mode::constrained_random, false};
  auto f = wpb::build(p);
  CHECK(wpb::nl_k_reduced(f, 2, idx) >= 5);
}

TEST_CASE("build validates n") {
  CHECK_THROWS_AS(wpb::build(ConstructionParams{4, 0, {}, false}), std::invalid_argument);
  CHECK_THROWS_AS(wpb::build(ConstructionParams{12, 0, {}, false}), std::invalid_argument);
  CHECK_THROWS_AS(wpb::build(ConstructionParams{32, 0, {}, false}), std::invalid_argument);
}
