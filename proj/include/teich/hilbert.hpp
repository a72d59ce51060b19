#pragma once

#include <optional>
#include <vector>

#include "teich/quadratic.hpp"

namespace teich {

enum class Spin { odd, even };

// Euler characteristic of the Hilbert modular surface X_D by Siegel's
// formula: (1/30) sum  sigma_1((D - b^2)/4) over |b| < sqrt(D), b^2 = D mod 4.
Rat chi_hilbert(const Discriminant& disc);

// Euler characteristic of the genus-2 Weierstrass curve of discriminant D:
// -(9/2) chi(X_D), or -(9/4) chi(X_D) when D = 1 mod 8 (either spin).
Rat chi_teich(const Discriminant& disc, std::optional<Spin> spin);

struct EllipticCount {
  Rat value;
  bool integral;  // the class-number table can produce non-integral values;
                  // those are surfaced, not patched
};

// Number of order-2 orbifold points of the Weierstrass curve, from the
// class-number table keyed on D mod 16. Requires D > 8.
EllipticCount e2_weierstrass(const Discriminant& disc);

struct FuchsianSignature {
  long long genus = 0;
  std::vector<long long> periods;  // orders of the elliptic generators
  long long cusps = 0;
};

// chi = 2 - 2g - sum(1 - 1/m_i) - s  (Riemann-Hurwitz).
Rat chi_of_signature(const FuchsianSignature& sig);

// Inverse solve for the genus; throws when the genus is not a non-negative
// integer.
long long genus_from_chi(const Rat& chi, const std::vector<long long>& periods, long long cusps);

}  // namespace teich
