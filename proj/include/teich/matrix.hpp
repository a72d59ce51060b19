#pragma once

#include <map>
#include <optional>
#include <vector>

#include "teich/quadratic.hpp"

namespace teich {

// 2x2 matrix over K with exact entries.
struct Mat2K {
  QuadRat e00, e01, e10, e11;

  Mat2K() = default;
  Mat2K(QuadRat a, QuadRat b, QuadRat c, QuadRat d)
      : e00(std::move(a)), e01(std::move(b)), e10(std::move(c)), e11(std::move(d)) {}

  static Mat2K identity(Discriminant d);
  static Mat2K of_ints(QuadInt a, QuadInt b, QuadInt c, QuadInt d);

  Discriminant disc() const { return e00.disc(); }
  QuadRat det() const { return e00 * e11 - e01 * e10; }
  QuadRat trace_elt() const { return e00 + e11; }
  Mat2K conj() const { return {e00.conj(), e01.conj(), e10.conj(), e11.conj()}; }
  Mat2K transpose() const { return {e00, e10, e01, e11}; }
  // Adjugate; equals the inverse for determinant 1.
  Mat2K adjugate() const { return {e11, -e01, -e10, e00}; }
  Mat2K inverse() const;
  Mat2K operator-() const { return {-e00, -e01, -e10, -e11}; }

  bool operator==(const Mat2K& o) const {
    return e00 == o.e00 && e01 == o.e01 && e10 == o.e10 && e11 == o.e11;
  }
  bool operator!=(const Mat2K& o) const { return !(*this == o); }

  bool is_integral() const {
    return e00.is_integral() && e01.is_integral() && e10.is_integral() && e11.is_integral();
  }
  bool is_in_sl2_od() const { return is_integral() && det() == QuadRat::one(disc()); }

  // Trace classification in the identity embedding, sign-exact.
  bool is_parabolic() const;
  bool is_elliptic() const;
  bool is_hyperbolic() const;
};

Mat2K operator*(const Mat2K& x, const Mat2K& y);
Mat2K operator*(const QuadRat& s, const Mat2K& m);
Mat2K operator+(const Mat2K& x, const Mat2K& y);
Mat2K operator-(const Mat2K& x, const Mat2K& y);
Mat2K pow(Mat2K base, long e);

// --- residue rings and the projective line ---------------------------------

// O_D / n O_D with canonical representatives by HNF reduction.
struct ResidueRing {
  Discriminant disc;
  QuadInt modulus;          // nonzero; trivial ring when modulus is a unit
  std::array<Int, 3> hnf;   // lattice n*O_D: columns (d0,0),(c,d1)
  Int cardinality;          // |N(n)|

  struct PrimePower {
    QuadInt pi;        // prime element generating the ideal
    int exp;           // exponent in n
    Int residue_norm;  // |O/pi|
  };
  std::vector<PrimePower> factors;  // from factor_element (up to units)
  Int unit_exponent = 0;            // exponent Lambda of (O/n)^*; 0 for trivial ring

  explicit ResidueRing(QuadInt n);

  bool trivial() const { return cardinality == 1; }
  QuadInt reduce(const QuadInt& x) const;
  QuadInt add(const QuadInt& x, const QuadInt& y) const { return reduce(x + y); }
  QuadInt mul(const QuadInt& x, const QuadInt& y) const { return reduce(x * y); }
  QuadInt pow(QuadInt base, Int e) const;
  // Inverse mod n, or nullopt when not invertible.
  std::optional<QuadInt> inverse(const QuadInt& x) const;
  // All residues (cardinality of them); used by small enumerations only.
  std::vector<QuadInt> residues() const;
  // Unit list, precomputed at construction where point canonicalization can
  // need it (moduli with several prime factors); rings are then safely
  // shareable read-only.
  const std::vector<QuadInt>& units() const { return units_; }

 private:
  std::vector<QuadInt> units_;
};

// Point of P^1(O_D/n): unimodular pair (c : d) up to units, stored canonically.
struct ProjPoint {
  QuadInt c, d;

  bool operator==(const ProjPoint& o) const { return c == o.c && d == o.d; }
  bool operator<(const ProjPoint& o) const {
    return std::tie(c.a, c.b, d.a, d.b) < std::tie(o.c.a, o.c.b, o.d.a, o.d.b);
  }
};

// Canonical form: scale by the inverse of the last unit coordinate scanning
// d then c; ties broken by the lexicographically least unit multiple.
ProjPoint canonical_point(const ResidueRing& ring, const QuadInt& c, const QuadInt& d);

// True iff (c, d, n) generate the unit ideal.
bool is_unimodular_pair(const ResidueRing& ring, const QuadInt& c, const QuadInt& d);

// Enumerates P^1(O_D/n) via prime-power lists and CRT.
std::vector<ProjPoint> proj_line(const ResidueRing& ring);

enum class ActSide { row_right, column_left };

// row_right: (c,d) -> (c,d)*M  (tracks Hecke Gamma_0(m) cosets);
// column_left: (c,d)^T -> M*(c,d)^T (tracks the transposed-type cosets).
ProjPoint act_point(const ResidueRing& ring, const ProjPoint& pt, const Mat2K& M, ActSide side);

// --- congruence-subgroup index formulas -------------------------------------

enum class IndexKind { principal, hecke0 };

// principal(n): N(n)^3 prod(1 - 1/N(p)^2); hecke0(n): N(n) prod(1 + 1/N(p)).
Int index_formula(const Discriminant& disc, IndexKind kind, const QuadInt& n);
// Product of the two hecke0 indexes; requires (m,n) coprime as ideals.
Int index_formula_pair(const Discriminant& disc, const QuadInt& m, const QuadInt& n);

// Exhaustive count of SL2 over the residue ring. Serial reference and the
// OpenMP kernel; both require cardinality <= 10^4.
Int sl2_residue_count_serial(const ResidueRing& ring);
Int sl2_residue_count(const ResidueRing& ring);

}  // namespace teich
