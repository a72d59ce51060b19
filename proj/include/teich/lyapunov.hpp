#pragma once

#include <string>
#include <vector>

#include "teich/quadratic.hpp"

namespace teich {

enum class CurveFamily { genus2_L, genus3_S, genus4_X };
std::string family_name(CurveFamily f);

struct ExponentProfile {
  CurveFamily family;
  Rat top;           // always 1
  Rat second;
  Rat sum_positive;  // sum of the two exponents of the Prym bundle
  std::string stratum_component;
};

// Sum-of-exponents constants per connected component of the genus-4 stratum
// with a single order-6 zero.
Rat chen_moeller_sum(const std::string& component);  // "odd", "even", "hyp"

// (1/4) sum 1/(d_j + 2) over the listed odd zero orders (>= -1).
Rat ekz_relation(const std::vector<long long>& odd_orders);

ExponentProfile exponent_profile(CurveFamily family);

enum class TwistVerdict { distinct, indistinguishable };
// Twists preserve the exponent pair, so differing second exponents certify
// that neither family is a twist of the other.
TwistVerdict not_twist_verdict(CurveFamily a, CurveFamily b);

enum class LPolygonConvention { statement, sidelength };

// Discriminant of the Prym family generated by the n-th polygon: S_n -> 1+2n,
// X_n -> 1+n; L_n depends on the convention (n, or 1+4n from the printed side
// lengths), which must be chosen explicitly.
Discriminant prym_discriminant(CurveFamily family, long long n,
                               LPolygonConvention convention = LPolygonConvention::statement);

}  // namespace teich
