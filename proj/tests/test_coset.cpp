#include <doctest.h>

#include "table_data.hpp"
#include "teich/coset.hpp"
#include "teich/textio.hpp"

using namespace teich;
using namespace teich_test;

TEST_CASE("orbit sizes at named levels") {
  auto d13 = order_context(13);
  auto act = build_action(d13, Spin::odd, parse_quadint("3", d13), parse_quadint("1", d13));
  CHECK(act.orbit_size == 16);
  CHECK(act.verdict == MaximalityVerdict::proven_equal);

  auto act2 = build_action(d13, Spin::odd, parse_quadint("2", d13), parse_quadint("3", d13));
  CHECK(act2.orbit_size == 80);

  auto d17 = order_context(17);
  // pi_2-divisible levels land at 2/3 of the maximal index.
  auto a_w = build_action(d17, Spin::odd, parse_quadint("w", d17), parse_quadint("1", d17));
  CHECK(a_w.orbit_size == 4);
  CHECK(a_w.maximal_index == 6);
  CHECK(a_w.verdict == MaximalityVerdict::lower_bound);
  auto a_pi = build_action(d17, Spin::odd, parse_quadint("w+2", d17), parse_quadint("1", d17));
  CHECK(a_pi.orbit_size == 2);
  CHECK(a_pi.maximal_index == 3);

  CHECK_THROWS_AS(build_action(d13, Spin::odd, parse_quadint("2", d13),
                               parse_quadint("2", d13)),
                  std::invalid_argument);
}

TEST_CASE("trivial level gives the parent curve") {
  auto d13 = order_context(13);
  auto act = build_action(d13, Spin::odd, parse_quadint("1", d13), parse_quadint("1", d13));
  CHECK(act.orbit_size == 1);
  auto inv = subgroup_invariants(act);
  CHECK(inv.chi == Rat(-3, 2));
  CHECK(inv.e2 == 1);
  CHECK(inv.total_cusps == 3);
  CHECK(inv.genus == 0);
}

TEST_CASE("derived invariant chain for D = 13, level (5,1)") {
  auto d13 = order_context(13);
  auto act = build_action(d13, Spin::odd, parse_quadint("5", d13), parse_quadint("1", d13));
  auto inv = subgroup_invariants(act);
  CHECK(inv.index == 26);
  CHECK(inv.e2 == 2);
  CHECK(inv.total_cusps == 18);
  CHECK(inv.genus == 11);
  CHECK(inv.chi == Rat(-39));
  for (const auto& c : inv.cusps) {
    CHECK(c.count == 6);
    CHECK(c.widths == std::vector<long long>{1, 5, 5, 5, 5, 5});
  }
}

TEST_CASE("split level with residue field size 3 mod 4 has no order-2 points") {
  auto d13 = order_context(13);
  // N(1+3w) = 23 = 3 mod 4.
  auto act = build_action(d13, Spin::odd, parse_quadint("1+3*w", d13), parse_quadint("1", d13));
  auto inv = subgroup_invariants(act);
  CHECK(inv.index == 24);
  CHECK(inv.e2 == 0);
  // And a 1 mod 4 one has exactly two: N(4+w) = 17.
  auto act2 = build_action(d13, Spin::odd, parse_quadint("4+w", d13), parse_quadint("1", d13));
  CHECK(subgroup_invariants(act2).e2 == 2);
}

TEST_CASE("invariants do not depend on the base coset") {
  auto d13 = order_context(13);
  auto pres = presentation(order_context(13), Spin::odd);
  auto act = build_action(pres, parse_quadint("5", d13), parse_quadint("1", d13));
  auto inv = subgroup_invariants(act);
  // Rebuild the permutation data starting from every orbit point: the cycle
  // structure of each parabolic is a conjugation-invariant of the action, so
  // the invariants agree; spot-check via a relabeled copy.
  CosetAction rot = act;
  std::rotate(rot.points.begin(), rot.points.begin() + 7, rot.points.end());
  auto inv2 = subgroup_invariants(rot);
  CHECK(inv2.e2 == inv.e2);
  CHECK(inv2.total_cusps == inv.total_cusps);
  CHECK(inv2.genus == inv.genus);
}

TEST_CASE("width sums equal the index over every grid cell (D = 13)") {
  auto d13 = order_context(13);
  auto pres = presentation(d13, Spin::odd);
  for (const char* m : {"2", "3", "w", "2+w", "5"}) {
    auto act = build_action(pres, parse_quadint(m, d13), parse_quadint("1", d13));
    auto inv = subgroup_invariants(act);  // throws internally if sums mismatch
    CHECK(inv.exact);
  }
}

TEST_CASE("full D = 13 grid matches the printed table away from its erratum") {
  auto d13 = order_context(13);
  IndexTable t = emit_table(d13, Spin::odd, 4);
  REQUIRE(t.elements.size() == kGridSize);
  for (int i = 0; i < kGridSize; ++i) CHECK(to_string(t.elements[i]) == kGridLabels[i]);
  std::vector<std::pair<int, int>> deviations;
  for (int r = 0; r < kGridSize; ++r)
    for (int c = 0; c < kGridSize; ++c)
      if (t.cells[r][c] != kTable13[r][c]) deviations.emplace_back(r, c);
  // The two printed 48s at the non-coprime pair {(m,n)=(3w,2w+1),(2w+1,3w)}.
  REQUIRE(deviations.size() == 2);
  CHECK(deviations[0] == std::pair<int, int>{9, 12});   // row n=2w+1, col m=3w
  CHECK(deviations[1] == std::pair<int, int>{12, 9});   // row n=3w,  col m=2w+1
  CHECK(t.cells[9][12] == "-");
  CHECK(t.cells[12][9] == "-");
  CHECK_FALSE(ideals_coprime(parse_quadint("3*w", d13), parse_quadint("1+2*w", d13)));
  // Every coprime cell equals the closed-form pair index (the D = 5 mod 8
  // maximality statement over the whole grid).
  for (int r = 0; r < kGridSize; ++r) {
    for (int c = 0; c < kGridSize; ++c) {
      if (t.cells[r][c] == "-") continue;
      Int expect = index_formula_pair(d13, t.elements[c], t.elements[r]);
      CHECK(t.cells[r][c] == expect.get_str());
    }
  }
}

TEST_CASE("even-spin invariants for D = 17 close up Riemann-Hurwitz") {
  auto d17 = order_context(17);
  auto pres = presentation(d17, Spin::even);
  REQUIRE(pres.complete);
  struct Row { const char* m; long long orbit, e2, cusps, genus; };
  // The inert levels match the odd-spin curve of the same signature; the
  // pi_2^sigma-power level sits at 2/3 of the maximal index.
  for (const Row& row : {Row{"3", 10, 2, 12, 2}, Row{"5", 26, 2, 18, 11},
                         Row{"1+2*w", 14, 2, 6, 8}, Row{"1+w", 2, 0, 5, 0}}) {
    auto act = build_action(pres, parse_quadint(row.m, d17), parse_quadint("1", d17));
    auto inv = subgroup_invariants(act);
    CAPTURE(row.m);
    CHECK(inv.index == ll(row.orbit));
    CHECK(inv.e2 == row.e2);
    CHECK(inv.total_cusps == row.cusps);
    CHECK(inv.genus == row.genus);
  }
}

TEST_CASE("incomplete presentations degrade to bounds without cusp data") {
  auto d29 = order_context(29);
  auto act = build_action(d29, Spin::odd, parse_quadint("2", d29), parse_quadint("1", d29));
  auto inv = subgroup_invariants(act);
  CHECK_FALSE(inv.exact);
  CHECK(inv.index == 5);
  CHECK(inv.cusps.empty());
  CHECK(inv.genus == -1);
}

TEST_CASE("full D = 17 grid matches the printed table including bold faces") {
  auto d17 = order_context(17);
  IndexTable t = emit_table(d17, Spin::odd, 4);
  QuadInt pi2 = parse_quadint("2+w", d17);
  for (int r = 0; r < kGridSize; ++r) {
    for (int c = 0; c < kGridSize; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(t.cells[r][c] == kTable17[r][c]);
      if (t.cells[r][c] == "-") continue;
      Int maximal = index_formula_pair(d17, t.elements[c], t.elements[r]);
      Int cell(t.cells[r][c]);
      if (kTable17Bold[r][c]) {
        CHECK(cell == maximal);
        CHECK(ideals_coprime(t.elements[c] * t.elements[r], pi2));
      } else {
        CHECK(3 * cell == 2 * maximal);
        CHECK_FALSE(ideals_coprime(t.elements[c] * t.elements[r], pi2));
      }
    }
  }
}
