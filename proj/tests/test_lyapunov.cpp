#include <doctest.h>

#include "teich/lyapunov.hpp"

using namespace teich;

TEST_CASE("closed-form exponent profiles") {
  auto g2 = exponent_profile(CurveFamily::genus2_L);
  CHECK(g2.top == Rat(1));
  CHECK(g2.second == Rat(1, 3));
  CHECK(g2.sum_positive == Rat(4, 3));

  auto g3 = exponent_profile(CurveFamily::genus3_S);
  CHECK(g3.second == Rat(1, 5));

  auto g4 = exponent_profile(CurveFamily::genus4_X);
  CHECK(g4.sum_positive == Rat(8, 7));
  CHECK(g4.second == Rat(1, 7));
  CHECK(g4.stratum_component == "OmegaM4(6)^even");
}

TEST_CASE("double-cover exponent relation") {
  CHECK(ekz_relation({-1, 5}) == Rat(2, 7));
  CHECK(ekz_relation({}) == Rat(0));
  CHECK(ekz_relation({1}) == Rat(1, 12));
  CHECK_THROWS_AS(ekz_relation({2}), std::invalid_argument);
  CHECK_THROWS_AS(ekz_relation({-3}), std::invalid_argument);
  // Internal consistency: 2 sum(Prym genus 4) - sum(even component) = relation.
  auto g4 = exponent_profile(CurveFamily::genus4_X);
  CHECK(2 * g4.sum_positive - chen_moeller_sum("even") == ekz_relation({-1, 5}));
  CHECK(g4.second == g4.sum_positive - 1);
}

TEST_CASE("twist verdicts from exponent pairs") {
  CHECK(not_twist_verdict(CurveFamily::genus2_L, CurveFamily::genus4_X) ==
        TwistVerdict::distinct);
  CHECK(not_twist_verdict(CurveFamily::genus2_L, CurveFamily::genus3_S) ==
        TwistVerdict::distinct);
  CHECK(not_twist_verdict(CurveFamily::genus3_S, CurveFamily::genus4_X) ==
        TwistVerdict::distinct);
  CHECK(not_twist_verdict(CurveFamily::genus2_L, CurveFamily::genus2_L) ==
        TwistVerdict::indistinguishable);
  // Symmetry.
  CHECK(not_twist_verdict(CurveFamily::genus4_X, CurveFamily::genus2_L) ==
        TwistVerdict::distinct);
}

TEST_CASE("polygon discriminants") {
  CHECK(prym_discriminant(CurveFamily::genus3_S, 2).D == 5);
  CHECK(prym_discriminant(CurveFamily::genus4_X, 4).D == 5);
  CHECK(prym_discriminant(CurveFamily::genus2_L, 13).D == 13);
  CHECK(prym_discriminant(CurveFamily::genus2_L, 3, LPolygonConvention::sidelength).D == 13);
  CHECK_THROWS_AS(prym_discriminant(CurveFamily::genus4_X, 3), std::invalid_argument);
}
