#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teich/hilbert.hpp"
#include "teich/matrix.hpp"

namespace teich {

struct LabeledMat {
  std::string label;  // one of T, S, Z, L, Ltilde, E, B, C
  Mat2K m;
};

// Labeled generator matrices of the Veech group of the genus-2 Weierstrass
// curve of discriminant D (and spin, when D = 1 mod 8). `complete` is set
// only where a full generating set is known: D in {5, 13, 17} odd spin and
// D = 17 even spin. eta_plus/eta_minus are the off-diagonal entries of the
// horizontal and vertical parabolics T and Z; eta_star their product.
struct VeechPresentation {
  Discriminant disc;
  Spin spin = Spin::odd;
  std::vector<LabeledMat> generators;
  bool complete = false;
  QuadInt eta_plus, eta_minus, eta_star;
  std::optional<Rat> chi;                       // needs a fundamental discriminant
  std::optional<FuchsianSignature> signature;   // known for D in {5, 13, 17}

  const Mat2K* find(const std::string& label) const;
};

VeechPresentation presentation(const Discriminant& disc, Spin spin);

// Parabolic fixing the cusp (1,1): E = (1-e, e; -e, 1+e) where e is the
// least common Z-multiple of the two cylinder modulus ratios at that cusp.
// Defined for D = 1 mod 4.
Mat2K compute_E(const Discriminant& disc, Spin spin);
QuadInt compute_E_entry(const Discriminant& disc, Spin spin);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(const std::string& msg) { ok = false; violations.push_back(msg); }
};

// det/integrality/trace checks, eta consistency, and (for the complete
// presentations) the check that no parabolic generator has an n-th root in
// SL2(O_D) for small n.
ValidationReport validate_presentation(const VeechPresentation& p);

}  // namespace teich
