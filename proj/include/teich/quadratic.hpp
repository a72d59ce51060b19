#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "teich/int_types.hpp"

namespace teich {

// Real quadratic order O_D = Z + Zw, w = (1+sqrt(D))/2 for D = 1 mod 4 and
// w = sqrt(D)/2 for D = 0 mod 4.
struct Discriminant {
  long long D = 0;
  long long conductor = 1;
  bool fundamental = true;

  // 1 if D = 1 mod 4, else 0; equals tr(w), and w = (s + sqrt(D))/2.
  int s() const { return static_cast<int>(D % 4 == 1 ? 1 : 0); }
  // w^2 = s*w + wsq_const, wsq_const = (D - s^2)/4.
  Int wsq_const() const { return ll((D - s() * s()) / 4); }

  bool operator==(const Discriminant& o) const { return D == o.D; }
};

// Validates D and computes conductor/fundamentality by square-factor
// extraction. Rejects D < 5, D = 2,3 mod 4 and perfect squares.
Discriminant order_context(long long D);

enum class Embedding { identity, conjugate };

// Element a + b*w of O_D.
struct QuadInt {
  Int a, b;
  Discriminant disc;

  QuadInt() = default;
  QuadInt(Int a_, Int b_, Discriminant d) : a(std::move(a_)), b(std::move(b_)), disc(d) {}

  static QuadInt integer(const Int& n, Discriminant d) { return {n, 0, d}; }
  static QuadInt w(Discriminant d) { return {0, 1, d}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadInt& o) const { return a == o.a && b == o.b && disc == o.disc; }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  QuadInt operator-() const { return {-a, -b, disc}; }
  QuadInt conj() const {
    // w^sigma = s - w.
    return {a + Int(disc.s()) * b, -b, disc};
  }
  Int trace() const { return 2 * a + Int(disc.s()) * b; }
  // Signed norm N(x) = x * x^sigma = a^2 + s*a*b - b^2*(D - s^2)/4.
  Int norm() const { return a * a + Int(disc.s()) * a * b - b * b * disc.wsq_const(); }
  Int norm_abs() const { return abs(norm()); }
  bool is_unit() const { return norm_abs() == 1; }
  Int content() const { return gcd(a, b); }
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const Int& n, const QuadInt& x);

// Exact sign of an embedding of x; -1, 0 or +1. No floating point.
int sign_embedding(const QuadInt& x, Embedding e);
// Compares x with the rational c in the given embedding: sign(x - c).
int cmp_embedding(const QuadInt& x, const Rat& c, Embedding e);
// floor(sigma_e(x)) computed by integer square-root bracketing.
Int floor_embedding(const QuadInt& x, Embedding e);
bool is_totally_positive(const QuadInt& x);

// True iff d divides x in O_D; quot receives x/d when so.
bool divides(const QuadInt& d, const QuadInt& x, QuadInt* quot = nullptr);
QuadInt div_exact(const QuadInt& x, const QuadInt& d);
QuadInt pow(QuadInt base, unsigned long e);

// Element of K = Q(sqrt(D)): num/den, reduced, den > 0.
struct QuadRat {
  QuadInt num;
  Int den = 1;

  QuadRat() = default;
  QuadRat(QuadInt n, Int d);
  explicit QuadRat(const QuadInt& n) : num(n), den(1) {}
  static QuadRat of(const Rat& r, Discriminant d);
  static QuadRat zero(Discriminant d) { return QuadRat(QuadInt::integer(0, d)); }
  static QuadRat one(Discriminant d) { return QuadRat(QuadInt::integer(1, d)); }

  Discriminant disc() const { return num.disc; }
  bool is_zero() const { return num.is_zero(); }
  bool is_integral() const { return den == 1; }
  bool operator==(const QuadRat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const QuadRat& o) const { return !(*this == o); }

  QuadRat operator-() const { return QuadRat(-num, den); }
  QuadRat conj() const { return QuadRat(num.conj(), den); }
  Rat trace() const { return make_rat(num.trace(), den); }
  Rat norm() const { return make_rat(num.norm(), den * den); }
  QuadRat inv() const;
};

QuadRat operator+(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x, const QuadRat& y);
QuadRat operator*(const QuadRat& x, const QuadRat& y);
QuadRat operator/(const QuadRat& x, const QuadRat& y);

int sign_embedding(const QuadRat& x, Embedding e);
int cmp_embedding(const QuadRat& x, const Rat& c, Embedding e);
Int floor_embedding(const QuadRat& x, Embedding e);
bool is_totally_positive(const QuadRat& x);

enum class SplitKind { split, inert, ramified, conductor };

// One prime ideal above a rational prime p. hnf is the column-style
// Hermite basis of the ideal as a lattice in coordinates (1, w):
// columns (d0, 0) and (c, d1), 0 <= c < d0.
struct PrimeIdealFactor {
  Int p;
  SplitKind kind = SplitKind::inert;
  std::optional<QuadInt> generator;  // present when h_D = 1 and found
  std::array<Int, 3> hnf = {1, 0, 1};  // d0, c, d1
  Int residue_norm = 1;
};

std::string split_kind_name(SplitKind k);

// Splitting behaviour of a rational prime, with generators for the factors
// found by norm-box search when the class number is 1.
std::vector<PrimeIdealFactor> splitting_type(const Discriminant& disc, const Int& p);

struct ElementFactor {
  PrimeIdealFactor ideal;
  int exponent = 0;
};

// Prime-ideal factorization of a nonzero element; fundamental D only.
std::vector<ElementFactor> factor_element(const QuadInt& n);

struct UnitDescription {
  QuadInt fundamental_unit;
  int unit_norm = 1;  // +1 or -1
};

// Smallest unit > 1 (identity embedding), by Pell-style search.
UnitDescription fundamental_unit(const Discriminant& disc);

enum class ClassNumberMode { real, narrow, imaginary };

// real/narrow: class numbers of the order of discriminant D via reduced
// indefinite forms. imaginary: class number of discriminant -E (argument
// minus_e = -E < 0), halved for E in {3,4}.
Rat class_numbers(const Discriminant& disc, ClassNumberMode mode, long long minus_e = 0);

// --- ideal-lattice helpers -------------------------------------------------

// Column-style HNF basis of the lattice spanned by the given coordinate
// columns: returns (d0, c, d1) with columns (d0,0),(c,d1), d0,d1 > 0,
// 0 <= c < d0. Zero lattice is rejected.
std::array<Int, 3> hnf_of_columns(const std::vector<std::array<Int, 2>>& cols);

// HNF of the ideal generated by the given elements (as a Z-lattice).
std::array<Int, 3> ideal_hnf(const std::vector<QuadInt>& gens);

// |O_D / (gens)| = d0*d1 of the HNF; 1 iff the ideal is all of O_D.
Int ideal_norm(const std::vector<QuadInt>& gens);

// True iff the ideals (x) and (y) are coprime (works for any class number).
bool ideals_coprime(const QuadInt& x, const QuadInt& y);

// True iff (x) = (y) as ideals.
bool same_ideal(const QuadInt& x, const QuadInt& y);

// Generator of the ideal spanned by gens (requires it to be principal;
// succeeds for h_D = 1). Deterministic tie-break: smallest (|a|+|b|, a, b),
// flipped to the totally positive associate when one exists.
QuadInt ideal_generator(const std::vector<QuadInt>& gens);

// gcd of two elements as the generator of (x) + (y).
QuadInt gcd_element(const QuadInt& x, const QuadInt& y);

// Canonical associate of x (same deterministic rule as ideal_generator).
QuadInt canonical_associate(const QuadInt& x);

}  // namespace teich
