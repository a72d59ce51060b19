#include <doctest.h>

#include <random>

#include "teich/textio.hpp"
#include "teich/twist.hpp"

using namespace teich;

TEST_CASE("normalization fixtures") {
  auto d13 = order_context(13);
  auto id = normalize_twist(Mat2K::identity(d13), d13);
  CHECK(id.normalized == Mat2K::identity(d13));
  CHECK(id.unimodular_left_factor == Mat2K::identity(d13));

  auto diag = normalize_twist(parse_matrix("2,0;0,1", d13), d13);
  CHECK(diag.normalized == parse_matrix("2,0;0,1", d13));

  Mat2K M = parse_matrix("w,1;1,1", d13);
  auto spec = normalize_twist(M, d13);
  CHECK(spec.normalized.e10.is_zero());
  CHECK(spec.unimodular_left_factor.is_in_sl2_od());
  CHECK(spec.content_removed * (spec.unimodular_left_factor * spec.normalized) == M);
}

TEST_CASE("normalization round trip on random matrices") {
  auto d13 = order_context(13);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> coef(-6, 6);
  int done = 0;
  while (done < 200) {
    Mat2K M(QuadRat(QuadInt(Int(coef(rng)), Int(coef(rng)), d13)),
            QuadRat(QuadInt(Int(coef(rng)), Int(coef(rng)), d13)),
            QuadRat(QuadInt(Int(coef(rng)), Int(coef(rng)), d13)),
            QuadRat(QuadInt(Int(coef(rng)), Int(coef(rng)), d13)));
    if (M.det().is_zero()) continue;
    auto spec = normalize_twist(M, d13);
    CHECK(spec.normalized.e10.is_zero());
    CHECK(spec.normalized.is_integral());
    CHECK(spec.unimodular_left_factor.is_in_sl2_od());
    CHECK(ideal_norm({spec.m(), spec.x().is_zero() ? spec.n() : spec.x(), spec.n()}) == 1);
    CHECK(spec.content_removed * (spec.unimodular_left_factor * spec.normalized) == M);
    ++done;
  }
}

TEST_CASE("twist volumes") {
  auto d13 = order_context(13);
  auto v = twist_volume(normalize_twist(parse_matrix("2,0;0,1", d13), d13), d13, Spin::odd);
  CHECK(v.degree == 5);
  CHECK(v.chi == Rat(-15, 2));
  CHECK(v.volume_over_pi == Rat(15));
  CHECK(v.status == VolumeStatus::exact);

  // The upper-right entry does not affect the volume.
  auto v2 = twist_volume(normalize_twist(parse_matrix("w,7;0,1", d13), d13), d13, Spin::odd);
  CHECK(v2.degree == 4);
  CHECK(v2.status == VolumeStatus::exact);

  auto d17 = order_context(17);
  auto v3 = twist_volume(normalize_twist(parse_matrix("w+2,0;0,1", d17), d17), d17, Spin::odd);
  CHECK(v3.status == VolumeStatus::conditional_lower_bound);
  CHECK(v3.degree == 2);  // printed table cell; 2/3 of the maximal index 3
  auto v4 = twist_volume(normalize_twist(parse_matrix("3,0;0,1", d17), d17), d17, Spin::odd);
  CHECK(v4.status == VolumeStatus::exact);
  CHECK(v4.degree == 10);
}

TEST_CASE("volume invariance under left SL2(O_D) multiplication and x-entry") {
  auto d13 = order_context(13);
  Mat2K M0 = parse_matrix("2,0;0,w", d13);
  auto base = twist_volume(normalize_twist(M0, d13), d13, Spin::odd);
  std::vector<Mat2K> lefts = {parse_matrix("1,w;0,1", d13), parse_matrix("0,-1;1,0", d13),
                              parse_matrix("1,0;w,1", d13) * parse_matrix("1,w;0,1", d13)};
  for (const auto& J : lefts) {
    auto v = twist_volume(normalize_twist(J * M0, d13), d13, Spin::odd);
    CHECK(v.chi == base.chi);
  }
  for (const char* x : {"0", "1", "w", "3+2*w"}) {
    Mat2K M = parse_matrix(std::string("2,") + x + ";0,w", d13);
    auto v = twist_volume(normalize_twist(M, d13), d13, Spin::odd);
    CHECK(v.chi == base.chi);
  }
}

TEST_CASE("classification verdicts and symmetry") {
  auto d13 = order_context(13);
  auto A = normalize_twist(parse_matrix("2,0;0,1", d13), d13);
  auto B = normalize_twist(parse_matrix("1,1;0,2", d13), d13);
  auto C = normalize_twist(parse_matrix("3,0;0,1", d13), d13);

  auto same = classification(A, B, d13, Spin::odd);
  CHECK(same.verdict == ClassificationVerdict::same);
  REQUIRE(same.witness_conjugator);
  CHECK(same.witness_conjugator->is_in_sl2_od());

  auto diff = classification(A, C, d13, Spin::odd);
  CHECK(diff.verdict == ClassificationVerdict::different);

  CHECK(classification(B, A, d13, Spin::odd).verdict == same.verdict);
  CHECK(classification(C, A, d13, Spin::odd).verdict == diff.verdict);
  CHECK(classification(A, A, d13, Spin::odd).verdict == ClassificationVerdict::same);

  CHECK_THROWS_AS(classification(A, B, order_context(17), Spin::odd), std::invalid_argument);
}

TEST_CASE("witness connects all normalized twists of a prime determinant") {
  // The full sweep including the norm-17 prime runs in the acceptance suite.
  auto d13 = order_context(13);
  for (const char* pi_s : {"2", "w"}) {
    QuadInt pi = parse_quadint(pi_s, d13);
    // Representatives: diag(pi, 1) and (1, x; 0, pi) over residues mod pi.
    std::vector<TwistSpec> reps;
    reps.push_back(normalize_twist(Mat2K::of_ints(pi, QuadInt::integer(0, d13),
                                                  QuadInt::integer(0, d13),
                                                  QuadInt::integer(1, d13)),
                                   d13));
    ResidueRing ring(pi);
    for (const auto& x : ring.residues())
      reps.push_back(normalize_twist(Mat2K::of_ints(QuadInt::integer(1, d13), x,
                                                    QuadInt::integer(0, d13), pi),
                                     d13));
    for (size_t i = 0; i < reps.size(); ++i) {
      for (size_t j = i + 1; j < reps.size(); ++j) {
        CAPTURE(pi_s);
        auto r = classification(reps[i], reps[j], d13, Spin::odd);
        CHECK(r.verdict == ClassificationVerdict::same);
        if (!(reps[i].normalized == reps[j].normalized)) {
          REQUIRE(r.witness_conjugator);
          CHECK(r.witness_conjugator->is_in_sl2_od());
          REQUIRE(r.witness_product);
          // N * W * M^-1 = J exactly.
          CHECK(*r.witness_conjugator ==
                reps[j].normalized * (*r.witness_product) * reps[i].normalized.inverse());
        }
      }
    }
    // Determinant obstruction against a non-associate determinant.
    auto other = normalize_twist(
        Mat2K::of_ints(pi * pi, QuadInt::integer(0, d13), QuadInt::integer(0, d13),
                       QuadInt::integer(1, d13)),
        d13);
    CHECK(classification(reps[0], other, d13, Spin::odd).verdict ==
          ClassificationVerdict::different);
  }
}

TEST_CASE("twisting stabilizer") {
  auto d13 = order_context(13);
  CHECK(twisting_stabilizer_check(parse_matrix("1,w;0,1", d13), d13));
  CHECK(twisting_stabilizer_check(parse_matrix("1+w,0;0,1+w", d13), d13));
  CHECK_FALSE(twisting_stabilizer_check(parse_matrix("2,0;0,1", d13), d13));
  CHECK_THROWS_AS(twisting_stabilizer_check(parse_matrix("1,0;0,1", order_context(12)),
                                            order_context(12)),
                  std::invalid_argument);
}
