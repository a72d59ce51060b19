#include <doctest.h>

#include <random>

#include "teich/fuchsian.hpp"
#include "teich/textio.hpp"

using namespace teich;

namespace {

Mat2K word_product(const GroupSpec& g, const std::vector<std::pair<std::string, long>>& w) {
  Mat2K prod = Mat2K::identity(g.disc);
  for (const auto& [l, e] : w) prod = prod * pow(*g.find(l), e);
  return prod;
}

}  // namespace

TEST_CASE("membership fixtures for the D = 13 group") {
  GroupSpec L13 = builtin_group("L13");
  const Mat2K &T = *L13.find("T"), &S = *L13.find("S");

  auto r = reduce_and_decide(T * S * T, L13);
  REQUIRE(r.member);
  Mat2K prod = word_product(L13, r.word);
  CHECK((prod == T * S * T || prod == -(T * S * T)));

  auto rid = reduce_and_decide(Mat2K::identity(L13.disc), L13);
  CHECK(rid.member);
  CHECK(rid.word.empty());

  CHECK_FALSE(reduce_and_decide(parse_matrix("1,w/2;0,1", L13.disc), L13).member);
  // Integral translation off the w-lattice: w^2 = w + 3.
  CHECK_FALSE(reduce_and_decide(parse_matrix("1,3+w;0,1", L13.disc), L13).member);
}

TEST_CASE("random words reduce to members; perturbations do not") {
  GroupSpec L13 = builtin_group("L13");
  std::vector<std::string> labels = {"T", "S", "B", "C"};
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 3), len(1, 10), sign(0, 1);
  for (int i = 0; i < 200; ++i) {
    Mat2K X = Mat2K::identity(L13.disc);
    for (int j = len(rng); j > 0; --j) {
      const Mat2K& g = *L13.find(labels[pick(rng)]);
      X = X * (sign(rng) ? g : g.adjugate());
    }
    auto r = reduce_and_decide(X, L13);
    REQUIRE(r.member);
    Mat2K prod = word_product(L13, r.word);
    CHECK((prod == X || prod == -X));
  }
  // Perturbed non-members: parabolic roots and off-lattice translations.
  const Mat2K &T = *L13.find("T"), &B = *L13.find("B"), &C = *L13.find("C");
  std::vector<Mat2K> bad;
  for (long k : {2, 3, 4, 5}) {
    bad.push_back(parabolic_root(B, k));
    bad.push_back(parabolic_root(C, k));
    bad.push_back(parabolic_root(T, k));
  }
  bad.push_back(parse_matrix("1,1;0,1", L13.disc));
  bad.push_back(parse_matrix("1,3+w;0,1", L13.disc));
  int count = 0;
  for (int i = 0; count < 50; i = (i + 1) % bad.size()) {
    Mat2K X = bad[i];
    // Mix with genuine group elements; membership is unaffected.
    for (int j = 0; j < (count % 3); ++j) X = *L13.find(labels[pick(rng)]) * X;
    CHECK_FALSE(reduce_and_decide(X, L13).member);
    ++count;
  }
}

TEST_CASE("random words reduce to members in the other builtin groups") {
  std::mt19937 rng(31);
  for (const char* name : {"L5", "L17"}) {
    GroupSpec G = builtin_group(name);
    std::vector<std::string> labels;
    for (auto& g : G.generators) labels.push_back(g.label);
    std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
    std::uniform_int_distribution<int> len(1, 8), flip(0, 1);
    for (int i = 0; i < 60; ++i) {
      Mat2K X = Mat2K::identity(G.disc);
      for (int j = len(rng); j > 0; --j) {
        const Mat2K& g = *G.find(labels[pick(rng)]);
        X = X * (flip(rng) ? g : g.adjugate());
      }
      auto r = reduce_and_decide(X, G);
      CAPTURE(name);
      REQUIRE(r.member);
      CHECK((*r.word_product == X || *r.word_product == -X));
    }
    CHECK_FALSE(reduce_and_decide(parabolic_root(*G.find("T"), 3), G).member);
  }
}

TEST_CASE("parabolic roots") {
  auto d13 = order_context(13);
  GroupSpec L13 = builtin_group("L13");
  CHECK(parabolic_root(*L13.find("T"), 2) == parse_matrix("1,w/2;0,1", d13));
  CHECK(parabolic_root(*L13.find("B"), 2) ==
        parse_matrix("-2-2*w,(6+5*w)/2;-2-2*w,4+2*w", d13));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, 3), kdist(2, 7);
  std::vector<std::string> labels = {"T", "S", "B", "C"};
  int done = 0;
  while (done < 50) {
    // Random parabolic conjugate g P g^-1.
    Mat2K g = Mat2K::identity(d13);
    for (int j = 0; j < 4; ++j) g = g * *L13.find(labels[pick(rng)]);
    Mat2K P = g * *L13.find("B") * g.adjugate();
    long k = kdist(rng);
    Mat2K root = parabolic_root(P, k);
    CHECK(pow(root, k) == (P.trace_elt() == QuadRat::of(Rat(-2), d13) ? -P : P));
    ++done;
  }
  CHECK_THROWS_AS(parabolic_root(*L13.find("S"), 2), std::invalid_argument);
}

TEST_CASE("discreteness trace test") {
  auto d13 = order_context(13);
  GroupSpec L13 = builtin_group("L13");
  const Mat2K &T = *L13.find("T"), &S = *L13.find("S"), &B = *L13.find("B"),
              &C = *L13.find("C");
  Mat2K W = T * S;
  // tr[V_n, W] = 2 + (7+5w)/n^2 for the roots of B.
  for (long n : {3, 4, 5}) {
    Mat2K V = parabolic_root(B, n);
    Mat2K comm = V * W * V.inverse() * W.inverse();
    QuadRat expect = QuadRat::of(Rat(2), d13) +
                     QuadRat(parse_quadint("7+5*w", d13), Int(n * n));
    CHECK(comm.trace_elt() == expect);
    auto res = discreteness_trace_test(V, W);
    CHECK_FALSE(res.passes);
    CHECK_FALSE(discreteness_trace_test(parabolic_root(C, n), W).passes);
  }
  // n = 2 gives trace >= 6: the test alone cannot exclude it.
  CHECK(discreteness_trace_test(parabolic_root(B, 2), W).passes);
  // Hyperbolic W far away: trace >= 6 passes.
  CHECK(discreteness_trace_test(T, pow(T * S * B, 2)).passes);

  // D = 17: the roots of C of degree >= 3 fail against W = T S.
  GroupSpec L17 = builtin_group("L17");
  Mat2K W17 = (*L17.find("T")) * (*L17.find("S"));
  for (long n : {3, 4}) {
    auto res = discreteness_trace_test(parabolic_root(*L17.find("C"), n), W17);
    CHECK_FALSE(res.passes);
  }
  // tr[(1,b;0,1),(1,0;c,1)] = 2 + b^2 c^2, so b = c = 1 gives 3 = 4 + 2cos(2pi/3).
  auto d5 = order_context(5);
  auto resq = discreteness_trace_test(parse_matrix("1,1;0,1", d5), parse_matrix("1,0;1,1", d5));
  CHECK(resq.passes);
  CHECK(resq.q == 3);
}

TEST_CASE("commensurability: the worked conjugation into the modular group") {
  auto d8 = order_context(8);
  GroupSpec H;
  H.name = "H";
  H.disc = d8;
  Mat2K V = parse_matrix("(9+4*w)/9,2/9;-16/9,(9-4*w)/9", d8);  // sqrt(8) = 2w
  Mat2K S = parse_matrix("0,-1;1,0", d8);
  H.generators = {{"S", S}, {"V", V}};
  H.elliptic_reps = {{S, 2}};
  GroupSpec G = builtin_group("modular", d8);
  auto res = commensurability_search(H, G);
  CHECK(res.search_complete);
  Mat2K printed = parse_matrix("(1)/3,(-2*w)/3;(2*w)/3,(1)/3", d8);
  bool found = false;
  for (const auto& c : res.verified) {
    if (!(c.m == printed || c.m == -printed)) continue;
    found = true;
    REQUIRE(c.generator_images.size() == 2);
    CHECK(c.generator_images[0] == parse_matrix("0,-1;1,0", d8));
    CHECK(c.generator_images[1] == parse_matrix("1,2;0,1", d8));
  }
  CHECK(found);
}

TEST_CASE("commensurability: identity for H = G and a negative verdict") {
  GroupSpec L13 = builtin_group("L13");
  auto self = commensurability_search(L13, L13, 8);
  bool has_id = false;
  for (const auto& c : self.verified)
    if (c.m == Mat2K::identity(L13.disc) || c.m == -Mat2K::identity(L13.disc)) has_id = true;
  CHECK(has_id);

  // Genus-4 fragment against the genus-2 group in discriminant 5.
  auto d5 = order_context(5);
  GroupSpec L5 = builtin_group("L5");
  GroupSpec H;
  H.name = "X5-fragment";
  H.disc = d5;
  Mat2K S = parse_matrix("0,-1;1,0", d5);
  Mat2K T2 = parse_matrix("1,2*w;0,1", d5);
  Mat2K C = parse_matrix("-3-6*w,6+10*w;-2-4*w,5+6*w", d5);
  REQUIRE(C.det() == QuadRat::one(d5));
  H.generators = {{"S", S}, {"T2", T2}, {"C", C}};
  H.elliptic_reps = {{S, 2}};
  // C itself is not in SL(L_5).
  CHECK_FALSE(reduce_and_decide(C, L5).member);
  auto res = commensurability_search(H, L5, 10);
  CHECK(res.verified.empty());
}

TEST_CASE("group files parse and reduce") {
  std::string text =
      "disc 13\n"
      "# the odd-spin group again\n"
      "gen T 1,w;0,1\n"
      "gen S 0,-1;1,0\n"
      "gen B -5-4*w,6+5*w;-4-4*w,7+4*w\n"
      "strip w\n"
      "circle 0,-1;1,0\n"
      "circle 7+4*w,-6-5*w;4+4*w,-5-4*w\n"
      "circle -5-4*w,-6-4*w;-4-4*w,-5-4*w\n"
      "elliptic 0,-1;1,0 2\n";
  GroupSpec g = parse_group_file(text);
  CHECK(g.disc.D == 13);
  CHECK(g.generators.size() >= 3);
  REQUIRE(g.domain);
  CHECK(g.domain->circles.size() == 3);
  const Mat2K& T = *g.find("T");
  const Mat2K& S = *g.find("S");
  CHECK(reduce_and_decide(T * S, g).member);
  CHECK_FALSE(reduce_and_decide(parse_matrix("1,w/3;0,1", g.disc), g).member);
}
