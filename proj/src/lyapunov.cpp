#include "teich/lyapunov.hpp"

namespace teich {

std::string family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::genus2_L: return "genus2_L";
    case CurveFamily::genus3_S: return "genus3_S";
    case CurveFamily::genus4_X: return "genus4_X";
  }
  return "?";
}

Rat chen_moeller_sum(const std::string& component) {
  if (component == "odd") return Rat(13, 7);
  if (component == "even") return Rat(14, 7);
  if (component == "hyp") return Rat(15, 7);
  throw std::invalid_argument("unknown stratum component " + component);
}

Rat ekz_relation(const std::vector<long long>& odd_orders) {
  Rat sum(0);
  for (long long dj : odd_orders) {
    if (dj < -1 || dj % 2 == 0)
      throw std::invalid_argument("zero orders must be odd integers >= -1");
    sum += Rat(1, static_cast<long>(dj + 2));
  }
  Rat r = Rat(1, 4) * sum;
  r.canonicalize();
  return r;
}

ExponentProfile exponent_profile(CurveFamily family) {
  ExponentProfile p;
  p.family = family;
  p.top = Rat(1);
  switch (family) {
    case CurveFamily::genus2_L:
      p.second = Rat(1, 3);
      p.sum_positive = Rat(4, 3);
      p.stratum_component = "OmegaM2(2)";
      break;
    case CurveFamily::genus3_S:
      p.second = Rat(1, 5);
      p.sum_positive = Rat(6, 5);
      p.stratum_component = "OmegaM3(4)";
      break;
    case CurveFamily::genus4_X: {
      // Prym-bundle sum from the double-cover exponent relation combined with
      // the non-varying sum for the even component:
      //   2 * sum(Prym) - sum(even) = (1/4)(1/1 + 1/7).
      Rat rel = ekz_relation({-1, 5});
      p.sum_positive = (chen_moeller_sum("even") + rel) / 2;
      p.sum_positive.canonicalize();
      p.second = p.sum_positive - Rat(1);
      p.second.canonicalize();
      p.stratum_component = "OmegaM4(6)^even";
      break;
    }
  }
  return p;
}

TwistVerdict not_twist_verdict(CurveFamily a, CurveFamily b) {
  return exponent_profile(a).second == exponent_profile(b).second
             ? TwistVerdict::indistinguishable
             : TwistVerdict::distinct;
}

Discriminant prym_discriminant(CurveFamily family, long long n, LPolygonConvention convention) {
  long long D;
  switch (family) {
    case CurveFamily::genus2_L:
      D = (convention == LPolygonConvention::statement) ? n : 1 + 4 * n;
      break;
    case CurveFamily::genus3_S:
      D = 1 + 2 * n;
      break;
    case CurveFamily::genus4_X:
      D = 1 + n;
      break;
    default:
      throw std::logic_error("unreachable");
  }
  return order_context(D);  // validity gate: D >= 5, 0/1 mod 4, non-square
}

}  // namespace teich
