#include <doctest.h>

#include "teich/textio.hpp"
#include "teich/veech.hpp"

using namespace teich;

TEST_CASE("complete presentations carry the printed matrices") {
  auto p13 = presentation(order_context(13), Spin::odd);
  CHECK(p13.complete);
  REQUIRE(p13.find("C"));
  CHECK(*p13.find("C") == parse_matrix("-4-4*w,5+4*w;-5-4*w,6+4*w", p13.disc));
  REQUIRE(p13.find("B"));
  CHECK(*p13.find("B") == parse_matrix("-5-4*w,6+5*w;-4-4*w,7+4*w", p13.disc));

  auto p5 = presentation(order_context(5), Spin::odd);
  CHECK(p5.complete);
  CHECK(p5.generators.size() == 2);
  CHECK(p5.find("S"));
  CHECK(p5.find("T"));

  auto p17 = presentation(order_context(17), Spin::odd);
  CHECK(p17.complete);
  CHECK(*p17.find("B") == parse_matrix("-3-2*w,4+3*w;-2-2*w,5+2*w", p17.disc));
  CHECK(*p17.find("C") == parse_matrix("-2-2*w,3+2*w;-3-2*w,4+2*w", p17.disc));
}

TEST_CASE("every emitted generator lies in SL2(O_D)") {
  for (long long D : {5LL, 8LL, 12LL, 13LL, 17LL, 21LL, 24LL, 28LL, 29LL, 33LL, 37LL, 41LL}) {
    auto disc = order_context(D);
    auto check_all = [&](Spin spin) {
      auto p = presentation(disc, spin);
      for (const auto& g : p.generators) {
        CAPTURE(D);
        CAPTURE(g.label);
        CHECK(g.m.is_in_sl2_od());
      }
      auto rep = validate_presentation(p);
      for (const auto& v : rep.violations) { CAPTURE(v); CHECK(false); }
      CHECK(rep.ok);
    };
    check_all(Spin::odd);
    if (D % 8 == 1) check_all(Spin::even);
  }
  CHECK_THROWS_AS(presentation(order_context(5), Spin::even), std::invalid_argument);
  CHECK_THROWS_AS(presentation(order_context(13), Spin::even), std::invalid_argument);
}

TEST_CASE("relation spot check: -S T S is the inverse of Z") {
  // With T = (1,w;0,1) and S = (0,-1;1,0), -STS = (1,0;-w,1) = Z^-1 for
  // Z = (1,0;w,1); the vertical parabolic is reached from S and T.
  auto d = order_context(13);
  Mat2K T = parse_matrix("1,w;0,1", d), S = parse_matrix("0,-1;1,0", d);
  Mat2K Z = parse_matrix("1,0;w,1", d);
  CHECK(-(S * T * S) == Z.inverse());
  CHECK(-(S * T.inverse() * S) == Z);
}

TEST_CASE("mod-16 branch of the second cylinder parabolic") {
  // Lower-left entries -4(w+1), -2(w+1), -(w+1) by congruence class.
  auto check_L = [](long long D, long factor) {
    auto disc = order_context(D);
    auto p = presentation(disc, Spin::odd);
    const Mat2K* L = p.find(D == 13 ? "B" : "L");  // for D = 13 the printed B equals L
    REQUIRE(L);
    QuadInt expect = Int(-factor) * (QuadInt::w(disc) + QuadInt::integer(1, disc));
    CHECK(L->e10.num == expect);
  };
  check_L(29, 4);  // 29 = 5 mod 8
  check_L(13, 4);
  check_L(33, 2);  // 33 = 1 mod 16
  check_L(41, 1);  // 41 = 9 mod 16
}

TEST_CASE("cusp-(1,1) parabolic matches the printed matrices") {
  auto d13 = order_context(13);
  CHECK(compute_E_entry(d13, Spin::odd) == parse_quadint("5+4*w", d13));
  CHECK(compute_E(d13, Spin::odd) == *presentation(d13, Spin::odd).find("C"));
  auto d17 = order_context(17);
  CHECK(compute_E_entry(d17, Spin::odd) == parse_quadint("3+2*w", d17));
  CHECK(compute_E(d17, Spin::odd) == *presentation(d17, Spin::odd).find("C"));
  // No rational integer divides e (checked internally; D = 5 spot check).
  auto e5 = compute_E_entry(order_context(5), Spin::odd);
  CHECK(e5.content() == 1);
}

TEST_CASE("validation flags a corrupted generator") {
  auto p = presentation(order_context(13), Spin::odd);
  p.generators[0].m = parse_matrix("1,w/2;0,1", p.disc);
  auto rep = validate_presentation(p);
  CHECK_FALSE(rep.ok);
}

TEST_CASE("even-spin presentation for D = 17") {
  auto p = presentation(order_context(17), Spin::even);
  CHECK(p.complete);
  CHECK(p.find("T"));
  CHECK(p.find("Z"));
  CHECK(p.find("L"));
  CHECK(p.find("E"));
  CHECK(p.eta_plus == parse_quadint("w-1", p.disc));
  CHECK(p.eta_minus == parse_quadint("w+1", p.disc));
  // D = 33 even spin additionally has the third cylinder parabolic.
  auto p33 = presentation(order_context(33), Spin::even);
  CHECK(p33.find("Ltilde"));
  CHECK_FALSE(p33.complete);
}
