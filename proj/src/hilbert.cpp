#include "teich/hilbert.hpp"

namespace teich {

Rat chi_hilbert(const Discriminant& disc) {
  if (!disc.fundamental)
    throw std::invalid_argument("chi_hilbert requires a fundamental discriminant");
  Int D = ll(disc.D);
  Int total = 0;
  // Both signs of b counted; b = 0 contributes once when it qualifies.
  for (Int b = (D % 2 == 0 ? 0 : 1); b * b < D; b += 2) {
    Int term = sigma1((D - b * b) / 4);
    total += (b == 0) ? term : 2 * term;
  }
  Rat chi(total, 30);
  chi.canonicalize();
  return chi;
}

Rat chi_teich(const Discriminant& disc, std::optional<Spin> spin) {
  bool mod8 = (disc.D % 8 == 1);
  if (mod8 && !spin)
    throw std::invalid_argument("spin required when D = 1 mod 8");
  if (!mod8 && spin && *spin == Spin::even)
    throw std::invalid_argument("even spin exists only for D = 1 mod 8");
  Rat factor = mod8 ? Rat(-9, 4) : Rat(-9, 2);
  Rat chi = factor * chi_hilbert(disc);
  chi.canonicalize();
  return chi;
}

EllipticCount e2_weierstrass(const Discriminant& disc) {
  if (disc.D <= 8) throw std::invalid_argument("e2_weierstrass requires D > 8");
  long long m = disc.D % 16;
  Rat v;
  switch (m) {
    case 1: case 5: case 9: case 13:
      v = Rat(1, 4) * class_numbers(disc, ClassNumberMode::imaginary, -4 * disc.D);
      break;
    case 0:
      v = Rat(1, 2) * (class_numbers(disc, ClassNumberMode::imaginary, -disc.D) +
                       2 * class_numbers(disc, ClassNumberMode::imaginary, -disc.D / 4));
      break;
    case 4:
      v = Rat(0);
      break;
    case 8:
      v = Rat(1, 2) * class_numbers(disc, ClassNumberMode::imaginary, -disc.D);
      break;
    case 12:
      v = Rat(1, 2) * (class_numbers(disc, ClassNumberMode::imaginary, -disc.D) +
                       3 * class_numbers(disc, ClassNumberMode::imaginary, -disc.D / 4));
      break;
    default:
      throw std::logic_error("unreachable: D mod 16");
  }
  v.canonicalize();
  return {v, v.get_den() == 1};
}

Rat chi_of_signature(const FuchsianSignature& sig) {
  if (sig.cusps < 0) throw std::invalid_argument("negative cusp count");
  Rat chi(ll(2 - 2 * sig.genus - sig.cusps));
  for (long long m : sig.periods) {
    if (m < 2) throw std::invalid_argument("elliptic period must be >= 2");
    chi -= Rat(ll(m - 1), ll(m));
  }
  chi.canonicalize();
  return chi;
}

long long genus_from_chi(const Rat& chi, const std::vector<long long>& periods,
                         long long cusps) {
  Rat rest(ll(2 - cusps));
  for (long long m : periods) {
    if (m < 2) throw std::invalid_argument("elliptic period must be >= 2");
    rest -= Rat(ll(m - 1), ll(m));
  }
  Rat twog = rest - chi;
  twog.canonicalize();
  if (twog.get_den() != 1 || twog.get_num() % 2 != 0 || twog < 0)
    throw std::domain_error("signature does not close up: genus not a non-negative integer");
  return Int(twog.get_num() / 2).get_si();
}

}  // namespace teich
