#include "teich/veech.hpp"

#include "teich/textio.hpp"

namespace teich {

const Mat2K* VeechPresentation::find(const std::string& label) const {
  for (const auto& g : generators)
    if (g.label == label) return &g.m;
  return nullptr;
}

namespace {

QuadInt qi(long a, long b, const Discriminant& d) { return {Int(a), Int(b), d}; }

Mat2K ints(const QuadInt& a, const QuadInt& b, const QuadInt& c, const QuadInt& dd) {
  return Mat2K::of_ints(a, b, c, dd);
}

// Parabolic from the cylinder decomposition in direction (w/2, 1), odd spin.
Mat2K second_parabolic_odd(const Discriminant& d) {
  QuadInt w = QuadInt::w(d), one = qi(1, 0, d);
  QuadInt ww1 = w * (w + one);       // w(w+1)
  QuadInt www1 = w * ww1;            // w^2(w+1)
  long long m8 = d.D % 8;
  if (m8 == 5) {
    return ints(one - Int(2) * ww1, www1, Int(-4) * (w + one), one + Int(2) * ww1);
  }
  // D = 1 mod 8: refine mod 16.
  if (d.D % 16 == 1) {
    return ints(one - ww1, div_exact(www1, qi(2, 0, d)), Int(-2) * (w + one), one + ww1);
  }
  QuadInt half = div_exact(ww1, qi(2, 0, d));
  return ints(one - half, div_exact(www1, qi(4, 0, d)), -(w + one), one + half);
}

// Parabolic from the cylinder decomposition in direction (1, (w+1)/2), even spin.
Mat2K second_parabolic_even(const Discriminant& d) {
  QuadInt w = QuadInt::w(d), one = qi(1, 0, d);
  QuadInt ww1 = w * (w + one);
  QuadInt ww1sq = w * (w + one) * (w + one);  // w(w+1)^2
  if (d.D % 16 == 1) {
    QuadInt half = div_exact(ww1, qi(2, 0, d));
    return ints(one - half, w, -div_exact(ww1sq, qi(4, 0, d)), one + half);
  }
  return ints(one - ww1, Int(2) * w, -div_exact(ww1sq, qi(2, 0, d)), one + ww1);
}

// Parabolic from the cylinder decomposition in direction ((w-1)/2, 1),
// even spin, D > 17.
Mat2K third_parabolic_even(const Discriminant& d) {
  QuadInt w = QuadInt::w(d), one = qi(1, 0, d), two = qi(2, 0, d);
  QuadInt v = (two + w) * (w - one);               // (2+w)(w-1)
  QuadInt z = (two + w) * (w - one) * (w - one);   // (2+w)(w-1)^2
  if (d.D % 16 == 1) {
    return ints(one - v, div_exact(z, two), Int(-2) * (two + w), one + v);
  }
  QuadInt vh = div_exact(v, two);
  return ints(one - vh, div_exact(z, qi(4, 0, d)), -(two + w), one + vh);
}

// Parabolic from the cylinder decomposition in direction (1, w/2), D = 0 mod 4,
// D > 16. Lower-left determined by det 1: r = -v^2 / z.
Mat2K second_parabolic_even_disc(const Discriminant& d) {
  QuadInt w = QuadInt::w(d), one = qi(1, 0, d);
  QuadInt v0 = Int(2) * w + qi(d.D / 4, 0, d);  // 2w + D/4
  QuadInt w2 = w + qi(2, 0, d);
  QuadInt v, z;
  if (d.D % 8 == 4) {
    v = Int(2) * v0;
    z = Int(4) * w2;
  } else if (d.D % 16 == 8) {
    v = v0;
    z = Int(2) * w2;
  } else {
    v = div_exact(v0, qi(2, 0, d));
    z = w2;
  }
  QuadInt r = -div_exact(v * v, z);
  return ints(one - v, z, r, one + v);
}

}  // namespace

QuadInt compute_E_entry(const Discriminant& disc, Spin spin) {
  (void)spin;  // the cusp-(1,1) cylinder data is the same for both spins
  if (disc.D % 4 != 1)
    throw std::invalid_argument("compute_E requires D = 1 mod 4");
  QuadRat w(QuadInt::w(disc));
  Int f = floor_embedding(w, Embedding::identity);
  QuadRat fr = QuadRat(QuadInt::integer(f, disc));
  QuadRat one = QuadRat::one(disc);
  // Cylinder length/height ratios at the cusp (1,1).
  QuadRat r1 = (w - one + fr) / (-w + one + fr);
  QuadRat r2 = (w + fr) / (-w + fr);
  // r1/r2 is rational; e generates r1 Z  intersect  r2 Z.
  QuadRat ratio = r1 / r2;
  if (ratio.num.b != 0)
    throw std::logic_error("cylinder ratio not rational");
  Rat rho = make_rat(ratio.num.a, ratio.den);
  // rho = p/q reduced: least common multiple is q*r1 (= p*r2 up to sign).
  QuadRat e = QuadRat::of(Rat(rho.get_den()), disc) * r1;
  if (!e.is_integral())
    throw std::logic_error("least common multiple of cylinder ratios not integral");
  QuadInt ei = e.num;
  if (sign_embedding(ei, Embedding::identity) < 0) ei = -ei;
  if (ei.content() != 1)
    throw std::logic_error("cusp-(1,1) parabolic entry has a rational integer divisor");
  return ei;
}

Mat2K compute_E(const Discriminant& disc, Spin spin) {
  QuadInt e = compute_E_entry(disc, spin);
  QuadInt one = QuadInt::integer(1, disc);
  return Mat2K::of_ints(one - e, e, -e, one + e);
}

VeechPresentation presentation(const Discriminant& disc, Spin spin) {
  const long long D = disc.D;
  if (spin == Spin::even && D % 8 != 1)
    throw std::invalid_argument("even spin requires D = 1 mod 8");
  VeechPresentation p;
  p.disc = disc;
  p.spin = spin;
  QuadInt w = QuadInt::w(disc), one = QuadInt::integer(1, disc), zero = QuadInt::integer(0, disc);

  if (D % 4 == 1 && spin == Spin::odd) {
    Mat2K T = ints(one, w, zero, one);
    Mat2K S = ints(zero, -one, one, zero);
    p.eta_plus = w;
    p.eta_minus = w;  // lower-left of Z = (1,0;w,1), reachable from S and T
    if (D == 5) {
      p.generators = {{"T", T}, {"S", S}};
      p.complete = true;
      p.signature = FuchsianSignature{0, {2, 5}, 1};
    } else if (D == 13) {
      Mat2K B = ints(qi(-5, -4, disc), qi(6, 5, disc), qi(-4, -4, disc), qi(7, 4, disc));
      Mat2K C = ints(qi(-4, -4, disc), qi(5, 4, disc), qi(-5, -4, disc), qi(6, 4, disc));
      p.generators = {{"T", T}, {"S", S}, {"B", B}, {"C", C}};
      p.complete = true;
      p.signature = FuchsianSignature{0, {2}, 3};
    } else if (D == 17) {
      Mat2K B = ints(qi(-3, -2, disc), qi(4, 3, disc), qi(-2, -2, disc), qi(5, 2, disc));
      Mat2K C = ints(qi(-2, -2, disc), qi(3, 2, disc), qi(-3, -2, disc), qi(4, 2, disc));
      p.generators = {{"T", T}, {"B", B}, {"S", S}, {"C", C}};
      p.complete = true;
      p.signature = FuchsianSignature{0, {2}, 3};
    } else {
      p.generators = {{"T", T}, {"S", S}, {"L", second_parabolic_odd(disc)},
                      {"E", compute_E(disc, spin)}};
      p.complete = false;
    }
  } else if (D % 8 == 1 && spin == Spin::even) {
    Mat2K T = ints(one, w - one, zero, one);
    Mat2K Z = ints(one, zero, w + one, one);
    p.eta_plus = w - one;
    p.eta_minus = w + one;
    Mat2K L = second_parabolic_even(disc);
    p.generators = {{"T", T}, {"Z", Z}, {"L", L}};
    if (D > 17) p.generators.push_back({"Ltilde", third_parabolic_even(disc)});
    p.generators.push_back({"E", compute_E(disc, spin)});
    if (D == 17) {
      // The group has one order-2 class but no printed elliptic generator;
      // T Z^-1 L is an order-2 word in the listed parabolics.
      Mat2K S0 = T * Z.adjugate() * L;
      if (!(S0.trace_elt() == QuadRat::zero(disc)))
        throw std::logic_error("derived elliptic word is not order 2");
      p.generators.push_back({"S", S0});
      p.complete = true;
      p.signature = FuchsianSignature{0, {2}, 3};
    }
  } else {  // D = 0 mod 4
    Mat2K T = ints(one, w + one, zero, one);
    Mat2K Z = ints(one, zero, w, one);
    p.eta_plus = w + one;
    p.eta_minus = w;
    p.generators = {{"T", T}, {"Z", Z}};
    if (D > 16) p.generators.push_back({"L", second_parabolic_even_disc(disc)});
    p.complete = false;
  }
  p.eta_star = p.eta_plus * p.eta_minus;
  if (disc.fundamental) p.chi = chi_teich(disc, spin);
  return p;
}

ValidationReport validate_presentation(const VeechPresentation& p) {
  ValidationReport rep;
  QuadRat one = QuadRat::one(p.disc);
  for (const auto& g : p.generators) {
    if (!g.m.is_integral()) rep.fail(g.label + ": entries not in O_D");
    if (g.m.det() != one) rep.fail(g.label + ": determinant != 1");
    if (g.label == "S") {
      if (!(g.m.trace_elt() == QuadRat::zero(p.disc))) rep.fail("S: trace != 0");
      if (!g.m.is_elliptic()) rep.fail("S: not elliptic");
    } else {
      if (!g.m.is_parabolic()) rep.fail(g.label + ": not parabolic (trace != +-2)");
    }
  }
  if (!(p.eta_star == p.eta_plus * p.eta_minus)) rep.fail("eta_star != eta_plus * eta_minus");
  if (const Mat2K* T = p.find("T")) {
    if (!(T->e01.num == p.eta_plus && T->e01.is_integral())) rep.fail("eta_plus != T[0][1]");
  }
  if (p.complete && (p.disc.D == 13 || p.disc.D == 17)) {
    // No parabolic generator may have a small root inside SL2(O_D).
    for (const auto& g : p.generators) {
      if (!g.m.is_parabolic()) continue;
      for (long n = 2; n <= 5; ++n) {
        Mat2K diff = g.m - Mat2K::identity(p.disc);
        QuadRat scale(QuadInt::integer(1, p.disc), Int(n));
        Mat2K root = Mat2K::identity(p.disc) + scale * diff;
        if (root.is_in_sl2_od())
          rep.fail(g.label + ": parabolic root of degree " + std::to_string(n) +
                   " lies in SL2(O_D)");
      }
    }
  }
  return rep;
}

}  // namespace teich
