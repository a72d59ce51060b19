#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace teich {

// All exact arithmetic runs on GMP integers/rationals. Element coordinates
// stay small for table-sized inputs but word products and norm searches
// overflow 64 bits quickly.
using Int = mpz_class;
using Rat = mpq_class;

inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division (round toward -inf); denominator must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_euclid(const Int& a, const Int& b) {
  Int r, m(abs(b));
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// mpz_class has no long long constructor; on this platform long is 64-bit.
inline Int ll(long long v) { return Int(static_cast<long>(v)); }

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer too large for long");
  return n.get_si();
}

// Trial-division factorization; inputs here are desk scale.
inline std::vector<std::pair<Int, int>> factor_int(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("factor_int(0)");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) { n /= p; ++e; }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime_int(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Sum of positive divisors.
inline Int sigma1(const Int& n) {
  Int s = 1;
  for (const auto& [p, e] : factor_int(n)) {
    Int pk = 1, geom = 1;
    for (int i = 0; i < e; ++i) { pk *= p; geom += pk; }
    s *= geom;
  }
  return s;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace teich
