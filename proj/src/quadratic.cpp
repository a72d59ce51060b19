#include "teich/quadratic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace teich {

Discriminant order_context(long long D) {
  if (D < 5) throw std::invalid_argument("discriminant must be >= 5");
  long long r = D % 4;
  if (r != 0 && r != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
  if (is_square(ll(D))) throw std::invalid_argument("discriminant must not be a square");
  Discriminant d;
  d.D = D;
  // Largest f with D = f^2 * E, E a discriminant.
  long long f = 1;
  for (long long g = 2; g * g * 5 <= D; ++g) {
    if (D % (g * g) != 0) continue;
    long long E = D / (g * g);
    long long er = E % 4;
    if (er == 0 || er == 1) f = std::max(f, g);
  }
  d.conductor = f;
  d.fundamental = (f == 1);
  return d;
}

static void check_same_disc(const Discriminant& x, const Discriminant& y) {
  if (!(x == y)) throw std::invalid_argument("discriminant mismatch");
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  check_same_disc(x.disc, y.disc);
  return {x.a + y.a, x.b + y.b, x.disc};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  check_same_disc(x.disc, y.disc);
  return {x.a - y.a, x.b - y.b, x.disc};
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  check_same_disc(x.disc, y.disc);
  // (a1 + b1 w)(a2 + b2 w) with w^2 = s w + t.
  Int s(x.disc.s()), t = x.disc.wsq_const();
  Int bb = x.b * y.b;
  return {x.a * y.a + t * bb, x.a * y.b + x.b * y.a + s * bb, x.disc};
}

QuadInt operator*(const Int& n, const QuadInt& x) { return {n * x.a, n * x.b, x.disc}; }

// sign of A + B*sqrt(D), exact.
static int sign_surd(const Int& A, const Int& B, const Int& D) {
  if (B == 0) return sgn(A);
  if (A == 0) return sgn(B);
  if (sgn(A) == sgn(B)) return sgn(A);
  // Opposite signs: compare A^2 against B^2 D.
  Int lhs = A * A, rhs = B * B * D;
  if (lhs == rhs) throw std::logic_error("sqrt(D) rational; invalid discriminant");
  return (lhs > rhs) ? sgn(A) : sgn(B);
}

int sign_embedding(const QuadInt& x, Embedding e) {
  // 2x = (2a + s b) + b sqrt(D) in the identity embedding.
  Int A = 2 * x.a + Int(x.disc.s()) * x.b;
  Int B = (e == Embedding::identity) ? x.b : -x.b;
  return sign_surd(A, B, ll(x.disc.D));
}

int cmp_embedding(const QuadInt& x, const Rat& c, Embedding e) {
  // sign of (A + B sqrt(D))/2 - p/q  =  sign of (q A - 2 p) + q B sqrt(D), q > 0.
  Int A = 2 * x.a + Int(x.disc.s()) * x.b;
  Int B = (e == Embedding::identity) ? x.b : -x.b;
  Int p = c.get_num(), q = c.get_den();
  return sign_surd(q * A - 2 * p, q * B, ll(x.disc.D));
}

Int floor_embedding(const QuadInt& x, Embedding e) {
  Int A = 2 * x.a + Int(x.disc.s()) * x.b;
  Int B = (e == Embedding::identity) ? x.b : -x.b;
  Int D = ll(x.disc.D);
  // B*sqrt(D) lies strictly between g and g+1 (irrational unless B = 0).
  Int g;
  if (B == 0) {
    g = 0;
  } else if (B > 0) {
    g = isqrt(B * B * D);
  } else {
    g = -isqrt(B * B * D) - 1;
  }
  Int q = floor_div(A + g, Int(2));
  // Value is in [(A+g)/2, (A+g+1)/2]; adjust by direct comparison.
  while (cmp_embedding(x, Rat(q + 1), e) >= 0) q += 1;
  while (cmp_embedding(x, Rat(q), e) < 0) q -= 1;
  return q;
}

bool is_totally_positive(const QuadInt& x) {
  return sign_embedding(x, Embedding::identity) > 0 &&
         sign_embedding(x, Embedding::conjugate) > 0;
}

bool divides(const QuadInt& d, const QuadInt& x, QuadInt* quot) {
  if (d.is_zero()) return x.is_zero();
  // x/d = x * conj(d) / N(d).
  QuadInt num = x * d.conj();
  Int nd = d.norm();
  if (num.a % nd != 0 || num.b % nd != 0) return false;
  if (quot) *quot = {num.a / nd, num.b / nd, x.disc};
  return true;
}

QuadInt div_exact(const QuadInt& x, const QuadInt& d) {
  QuadInt q;
  if (!divides(d, x, &q)) throw std::domain_error("non-exact quadratic division");
  return q;
}

QuadInt pow(QuadInt base, unsigned long e) {
  QuadInt r = QuadInt::integer(1, base.disc);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QuadRat::QuadRat(QuadInt n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) { den = -den; num = -num; }
  Int g = gcd(gcd(num.a, num.b), den);
  if (g > 1) { num.a /= g; num.b /= g; den /= g; }
}

QuadRat QuadRat::of(const Rat& r, Discriminant d) {
  return QuadRat(QuadInt::integer(r.get_num(), d), r.get_den());
}

QuadRat QuadRat::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // 1/(n/d) = d * conj(n) / N(n).
  QuadInt c = num.conj();
  Int nn = num.norm();
  QuadRat r(QuadInt(den * c.a, den * c.b, num.disc), abs(nn));
  if (nn < 0) r.num = -r.num;
  return r;
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
  check_same_disc(x.num.disc, y.num.disc);
  return QuadRat(QuadInt(x.num.a * y.den + y.num.a * x.den, x.num.b * y.den + y.num.b * x.den,
                         x.num.disc),
                 x.den * y.den);
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) { return x + (-y); }

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  return QuadRat(x.num * y.num, x.den * y.den);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inv(); }

int sign_embedding(const QuadRat& x, Embedding e) { return sign_embedding(x.num, e); }

int cmp_embedding(const QuadRat& x, const Rat& c, Embedding e) {
  return cmp_embedding(x.num, c * Rat(x.den), e);
}

Int floor_embedding(const QuadRat& x, Embedding e) {
  Int A = 2 * x.num.a + Int(x.num.disc.s()) * x.num.b;
  Int B = (e == Embedding::identity) ? x.num.b : -x.num.b;
  Int D = ll(x.num.disc.D);
  Int g;
  if (B == 0) g = 0;
  else if (B > 0) g = isqrt(B * B * D);
  else g = -isqrt(B * B * D) - 1;
  Int q = floor_div(A + g, 2 * x.den);
  while (cmp_embedding(x, Rat(q + 1), e) >= 0) q += 1;
  while (cmp_embedding(x, Rat(q), e) < 0) q -= 1;
  return q;
}

bool is_totally_positive(const QuadRat& x) { return is_totally_positive(x.num); }

std::string split_kind_name(SplitKind k) {
  switch (k) {
    case SplitKind::split: return "split";
    case SplitKind::inert: return "inert";
    case SplitKind::ramified: return "ramified";
    case SplitKind::conductor: return "conductor";
  }
  return "?";
}

std::array<Int, 3> hnf_of_columns(const std::vector<std::array<Int, 2>>& cols) {
  // Reduce the column set to upper-triangular form: first find a column
  // combo (cc, dd) with dd = gcd of all second coordinates.
  std::vector<std::array<Int, 2>> v = cols;
  Int cc = 0, dd = 0;
  for (auto& col : v) {
    if (col[1] == 0) continue;
    if (dd == 0) { cc = col[0]; dd = col[1]; continue; }
    // Replace (cc,dd),(col0,col1) by combo with second coord gcd(dd,col1).
    Int g, u, w;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), dd.get_mpz_t(), col[1].get_mpz_t());
    Int nc = u * cc + w * col[0];
    cc = nc;
    dd = g;
  }
  if (dd == 0) throw std::domain_error("rank-deficient lattice is not an ideal");
  if (dd < 0) { dd = -dd; cc = -cc; }
  // First-coordinate lattice after killing second coords.
  Int d0 = 0;
  for (auto& col : v) {
    Int k = col[1] / dd;
    d0 = gcd(d0, col[0] - k * cc);
  }
  if (d0 == 0) throw std::domain_error("rank-1 lattice is not an ideal");
  if (d0 < 0) d0 = -d0;
  Int c = mod_euclid(cc, d0);
  return {d0, c, dd};
}

std::array<Int, 3> ideal_hnf(const std::vector<QuadInt>& gens) {
  if (gens.empty()) throw std::domain_error("empty generator list");
  Discriminant d = gens.front().disc;
  QuadInt w = QuadInt::w(d);
  std::vector<std::array<Int, 2>> cols;
  for (const auto& g : gens) {
    cols.push_back({g.a, g.b});
    QuadInt gw = g * w;
    cols.push_back({gw.a, gw.b});
  }
  return hnf_of_columns(cols);
}

Int ideal_norm(const std::vector<QuadInt>& gens) {
  auto h = ideal_hnf(gens);
  return h[0] * h[2];
}

bool ideals_coprime(const QuadInt& x, const QuadInt& y) {
  if (x.is_zero() || y.is_zero()) return x.is_unit() || y.is_unit();
  return ideal_norm({x, y}) == 1;
}

bool same_ideal(const QuadInt& x, const QuadInt& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  QuadInt q;
  return divides(x, y, &q) && q.is_unit();
}

static UnitDescription pell_unit(const Discriminant& disc);

QuadInt canonical_associate(const QuadInt& x) {
  if (x.is_zero()) return x;
  UnitDescription u = pell_unit(x.disc);
  // Walk +-eps^k toward the minimum of (|a|+|b|, a, b); the height function
  // is convex in k so a local minimum is global.
  auto key = [](const QuadInt& z) { return std::make_tuple(Int(abs(z.a) + abs(z.b)), z.a, z.b); };
  QuadInt best = x;
  QuadInt epsi = u.fundamental_unit;
  QuadInt inv_eps = epsi.conj();  // eps^-1 up to sign: eps * conj(eps) = N(eps) = +-1
  if (u.unit_norm == -1) inv_eps = -inv_eps;
  for (int dir = 0; dir < 2; ++dir) {
    QuadInt step = dir == 0 ? epsi : inv_eps;
    QuadInt cur = x;
    for (int i = 0; i < 64; ++i) {
      cur = cur * step;
      if (key(cur) < key(best)) best = cur;
      if (abs(cur.a) + abs(cur.b) > 4 * (abs(best.a) + abs(best.b)) + 16) break;
    }
  }
  QuadInt neg = -best;
  if (key(neg) < key(best)) best = neg;
  // Prefer the totally positive associate when one exists (norm > 0).
  if (best.norm() > 0 && !is_totally_positive(best)) {
    if (is_totally_positive(-best)) best = -best;
  }
  if (!is_totally_positive(best) && sign_embedding(best, Embedding::identity) < 0) best = -best;
  return best;
}

QuadInt ideal_generator(const std::vector<QuadInt>& gens) {
  if (gens.empty()) throw std::domain_error("empty generator list");
  Discriminant d = gens.front().disc;
  std::vector<QuadInt> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return QuadInt::integer(0, d);
  auto h = ideal_hnf(nz);
  Int target = h[0] * h[2];
  // Search lattice elements i*(d0,0) + j*(c,d1) with |N| = target.
  QuadInt v1(h[0], Int(0), d), v2(h[1], h[2], d);
  for (Int bound = 4;; bound *= 2) {
    QuadInt best = QuadInt::integer(0, d);
    auto key = [](const QuadInt& z) { return std::make_tuple(Int(abs(z.a) + abs(z.b)), z.a, z.b); };
    bool found = false;
    for (Int j = -bound; j <= bound; ++j) {
      for (Int i = -bound; i <= bound; ++i) {
        QuadInt cand = Int(i) * v1 + Int(j) * v2;
        if (cand.is_zero()) continue;
        if (cand.norm_abs() != target) continue;
        if (!found || key(cand) < key(best)) { best = cand; found = true; }
      }
    }
    if (found) {
      // Normalize as canonical_associate does for determinism.
      QuadInt neg = -best;
      auto key2 = [](const QuadInt& z) { return std::make_tuple(Int(abs(z.a) + abs(z.b)), z.a, z.b); };
      if (key2(neg) < key2(best)) best = neg;
      if (best.norm() > 0 && !is_totally_positive(best) && is_totally_positive(-best)) best = -best;
      if (!is_totally_positive(best) && sign_embedding(best, Embedding::identity) < 0) best = -best;
      return best;
    }
    if (bound > 8192) throw std::runtime_error("ideal generator search bound exceeded (non-principal ideal or h_D > 1?)");
  }
}

QuadInt gcd_element(const QuadInt& x, const QuadInt& y) { return ideal_generator({x, y}); }

std::vector<PrimeIdealFactor> splitting_type(const Discriminant& disc, const Int& p) {
  if (!is_prime_int(p)) throw std::invalid_argument("splitting_type: p must be prime");
  std::vector<PrimeIdealFactor> out;
  if (disc.conductor > 1 && ll(disc.conductor) % p == 0) {
    PrimeIdealFactor f;
    f.p = p;
    f.kind = SplitKind::conductor;
    f.residue_norm = p * p;
    f.hnf = {p, 0, p};
    out.push_back(f);
    return out;
  }
  SplitKind kind;
  Int D = ll(disc.D);
  if (p == 2) {
    long long m8 = disc.D % 8;
    if (disc.D % 2 == 0) kind = SplitKind::ramified;
    else if (m8 == 5) kind = SplitKind::inert;
    else kind = SplitKind::split;  // D = 1 mod 8
  } else {
    Int Dm = D % p;
    int leg = mpz_legendre(Dm.get_mpz_t(), p.get_mpz_t());
    kind = leg == 0 ? SplitKind::ramified : (leg == 1 ? SplitKind::split : SplitKind::inert);
  }

  auto make = [&](SplitKind k, const Int& rn) {
    PrimeIdealFactor f;
    f.p = p;
    f.kind = k;
    f.residue_norm = rn;
    return f;
  };

  if (kind == SplitKind::inert) {
    PrimeIdealFactor f = make(kind, p * p);
    f.generator = QuadInt::integer(p, disc);
    f.hnf = {p, 0, p};
    out.push_back(f);
    return out;
  }

  // Roots of x^2 - s x - t mod p pin down the prime ideals (p, w - r) even
  // when they are not principal.
  std::vector<Int> roots;
  {
    Int s(disc.s()), t = disc.wsq_const();
    for (Int r = 0; r < p; ++r)
      if ((r * r - s * r - t) % p == 0) roots.push_back(r);
  }

  // Element generators: search |N(a+bw)| = p over a bounded box (succeeds
  // for the class-number-1 orders this artifact computes with).
  std::optional<QuadInt> gen;
  for (Int bound = 4; bound <= 512; bound *= 2) {
    QuadInt best = QuadInt::integer(0, disc);
    bool found = false;
    auto key = [](const QuadInt& z) { return std::make_tuple(Int(abs(z.a) + abs(z.b)), z.a, z.b); };
    for (Int b = -bound; b <= bound; ++b) {
      for (Int a = -bound; a <= bound; ++a) {
        QuadInt cand(a, b, disc);
        if (cand.is_zero()) continue;
        if (cand.norm_abs() != p) continue;
        if (!found || key(cand) < key(best)) { best = cand; found = true; }
      }
    }
    if (found) {
      if (best.norm() > 0 && !is_totally_positive(best) && is_totally_positive(-best)) best = -best;
      if (!is_totally_positive(best) && sign_embedding(best, Embedding::identity) < 0) best = -best;
      gen = best;
      break;
    }
  }

  auto hnf_of_root = [&](const Int& r) {
    QuadInt w_minus_r(-r, 1, disc);
    return ideal_hnf({QuadInt::integer(p, disc), w_minus_r});
  };

  if (kind == SplitKind::ramified) {
    PrimeIdealFactor f = make(kind, p);
    if (gen) { f.generator = *gen; f.hnf = ideal_hnf({*gen}); }
    else if (!roots.empty()) f.hnf = hnf_of_root(roots.front());
    out.push_back(f);
    return out;
  }

  // Split: the pair of conjugate factors.
  PrimeIdealFactor f1 = make(kind, p), f2 = make(kind, p);
  if (gen) {
    f1.generator = *gen;
    f1.hnf = ideal_hnf({*gen});
    QuadInt g2 = gen->conj();
    if (g2.norm() > 0 && !is_totally_positive(g2) && is_totally_positive(-g2)) g2 = -g2;
    if (!is_totally_positive(g2) && sign_embedding(g2, Embedding::identity) < 0) g2 = -g2;
    f2.generator = g2;
    f2.hnf = ideal_hnf({g2});
  } else if (roots.size() == 2) {
    f1.hnf = hnf_of_root(roots[0]);
    f2.hnf = hnf_of_root(roots[1]);
  }
  out.push_back(f1);
  out.push_back(f2);
  return out;
}

std::vector<ElementFactor> factor_element(const QuadInt& n) {
  if (n.is_zero()) throw std::invalid_argument("factor_element(0)");
  const Discriminant& disc = n.disc;
  if (!disc.fundamental)
    throw std::invalid_argument("factor_element requires a fundamental discriminant");
  std::vector<ElementFactor> out;
  Int N = n.norm_abs();
  for (const auto& [p, e] : factor_int(N)) {
    auto facs = splitting_type(disc, p);
    for (const auto& f : facs) {
      if (!f.generator) throw std::runtime_error("factor_element: missing ideal generator");
      int cnt = 0;
      QuadInt cur = n;
      QuadInt q;
      while (divides(*f.generator, cur, &q)) { cur = q; ++cnt; }
      if (cnt > 0) out.push_back({f, cnt});
    }
    (void)e;
  }
  // Consistency: product of residue norms matches |N(n)|.
  Int prod = 1;
  for (const auto& ef : out)
    for (int i = 0; i < ef.exponent; ++i) prod *= ef.ideal.residue_norm;
  if (prod != N) throw std::runtime_error("factor_element: residue-norm bookkeeping failed");
  return out;
}

// Pell-style search valid for any quadratic order O_D.
static UnitDescription pell_unit(const Discriminant& disc) {
  Int D = ll(disc.D);
  int s = disc.s();
  // For each b > 0 test whether a exists with |N(a+bw)| = 1:
  //   D = 1 mod 4: a = (-b +- sqrt(b^2 D +- 4))/2
  //   D = 0 mod 4: a^2 = (D/4) b^2 +- 1
  for (Int b = 1; b <= 10000000; ++b) {
    std::vector<QuadInt> cands;
    if (s == 1) {
      for (int sign = -1; sign <= 1; sign += 2) {
        Int t = b * b * D + 4 * sign;
        if (t < 0 || !is_square(t)) continue;
        Int r = isqrt(t);
        for (int pm = -1; pm <= 1; pm += 2) {
          Int twice_a = -b + pm * r;
          if (twice_a % 2 != 0) continue;
          cands.emplace_back(twice_a / 2, b, disc);
        }
      }
    } else {
      Int d4 = D / 4;
      for (int sign = -1; sign <= 1; sign += 2) {
        Int t = d4 * b * b + sign;
        if (t < 0 || !is_square(t)) continue;
        Int a = isqrt(t);
        cands.emplace_back(a, b, disc);
        cands.emplace_back(-a, b, disc);
      }
    }
    std::optional<QuadInt> best;
    for (auto& c : cands) {
      if (c.norm_abs() != 1) continue;
      QuadInt v = c;
      if (cmp_embedding(v, Rat(1), Embedding::identity) <= 0) v = -v;
      if (cmp_embedding(v, Rat(1), Embedding::identity) <= 0) continue;
      if (!best || cmp_embedding(v - *best, Rat(0), Embedding::identity) < 0) best = v;
    }
    if (best) {
      UnitDescription u;
      u.fundamental_unit = *best;
      u.unit_norm = best->norm() > 0 ? 1 : -1;
      return u;
    }
  }
  throw std::runtime_error("fundamental unit search bound exceeded");
}

UnitDescription fundamental_unit(const Discriminant& disc) {
  if (!disc.fundamental)
    throw std::invalid_argument("fundamental_unit requires a fundamental discriminant");
  return pell_unit(disc);
}

namespace {

// Reduced indefinite form cycles, counting proper (narrow) classes.
struct Form {
  Int a, b, c;
  bool operator<(const Form& o) const {
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
  }
  bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
};

bool indefinite_reduced(const Form& f, const Int& D) {
  // |sqrt(D) - 2|a|| < b < sqrt(D), exact via squares.
  if (f.b <= 0) return false;
  if (f.b * f.b >= D) return false;
  Int t = 2 * abs(f.a);
  // |sqrt(D) - t| < b  <=>  (sqrt(D)-t)^2 < b^2  <=>  D + t^2 - b^2 < 2 t sqrt(D).
  Int lhs = D + t * t - f.b * f.b;
  if (lhs < 0) return true;
  return lhs * lhs < 4 * t * t * D;
}

Form rho_step(const Form& f, const Int& D) {
  // (a,b,c) -> (c, r, (r^2-D)/(4c)) with r = -b mod 2|c| and
  // sqrt(D) - 2|c| < r < sqrt(D).
  Int twoc = 2 * abs(f.c);
  Int r = mod_euclid(-f.b, twoc);
  // Bring r into the window (sqrt(D)-2|c|, sqrt(D)): exact comparisons.
  auto below_sqrtD = [&](const Int& x) {
    if (x < 0) return true;
    return x * x < D;
  };
  while (!below_sqrtD(r)) r -= twoc;
  while (below_sqrtD(r + twoc)) r += twoc;
  Int cc = (r * r - D) / (4 * f.c);
  return {f.c, r, cc};
}

long count_indefinite_form_cycles(const Int& D) {
  std::set<Form> forms;
  Int sq = isqrt(D);
  for (Int b = (D % 2 == 0 ? 0 : 1); b <= sq; b += 2) {
    if (b == 0) continue;
    Int m = b * b - D;
    if (m % 4 != 0) continue;
    Int ac = m / 4;  // negative
    for (Int a = 1; a * a <= abs(ac); ++a) {
      if (ac % a != 0) continue;
      Int c = ac / a;
      for (const Form& f : {Form{a, b, c}, Form{-a, b, -c}, Form{c, b, a}, Form{-c, b, -a}}) {
        if (gcd(gcd(f.a, f.b), f.c) != 1) continue;  // proper classes: primitive forms
        if (indefinite_reduced(f, D)) forms.insert(f);
      }
    }
  }
  long cycles = 0;
  std::set<Form> seen;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    ++cycles;
    Form cur = f;
    do {
      seen.insert(cur);
      cur = rho_step(cur, D);
    } while (!(cur == f));
  }
  return cycles;
}

long count_imaginary_classes(const Int& E) {
  // Reduced positive definite primitive forms of discriminant -E:
  // |b| <= a <= c, b >= 0 when |b| = a or a = c.
  long count = 0;
  for (Int a = 1; 3 * a * a <= E; ++a) {
    for (Int b = -a; b <= a; ++b) {
      Int t = b * b + E;
      if (t % (4 * a) != 0) continue;
      Int c = t / (4 * a);
      if (c < a) continue;
      if ((abs(b) == a || a == c) && b < 0) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

Rat class_numbers(const Discriminant& disc, ClassNumberMode mode, long long minus_e) {
  switch (mode) {
    case ClassNumberMode::narrow:
      return Rat(count_indefinite_form_cycles(ll(disc.D)));
    case ClassNumberMode::real: {
      long hplus = count_indefinite_form_cycles(ll(disc.D));
      UnitDescription u = pell_unit(disc);
      if (u.unit_norm == -1) return Rat(hplus);
      if (hplus % 2 != 0) throw std::logic_error("narrow class number parity violated");
      return Rat(hplus / 2);
    }
    case ClassNumberMode::imaginary: {
      if (minus_e >= 0) throw std::invalid_argument("imaginary mode needs -E < 0");
      long long E = -minus_e;
      long long r = E % 4;
      if (r != 0 && r != 3) throw std::invalid_argument("-E must be 0 or 1 mod 4");
      Rat h(count_imaginary_classes(ll(E)));
      if (E == 3 || E == 4) h /= 2;
      return h;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace teich
