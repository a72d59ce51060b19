#include "teich/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace teich {

Mat2K Mat2K::identity(Discriminant d) {
  return {QuadRat::one(d), QuadRat::zero(d), QuadRat::zero(d), QuadRat::one(d)};
}

Mat2K Mat2K::of_ints(QuadInt a, QuadInt b, QuadInt c, QuadInt d) {
  return {QuadRat(a), QuadRat(b), QuadRat(c), QuadRat(d)};
}

Mat2K Mat2K::inverse() const {
  QuadRat dt = det();
  if (dt.is_zero()) throw std::domain_error("singular matrix");
  QuadRat inv = dt.inv();
  Mat2K adj = adjugate();
  return {inv * adj.e00, inv * adj.e01, inv * adj.e10, inv * adj.e11};
}

bool Mat2K::is_parabolic() const {
  QuadRat t = trace_elt();
  return t == QuadRat::of(Rat(2), disc()) || t == QuadRat::of(Rat(-2), disc());
}

bool Mat2K::is_elliptic() const {
  // |tr| < 2 in the identity embedding.
  QuadRat t = trace_elt();
  return cmp_embedding(t, Rat(2), Embedding::identity) < 0 &&
         cmp_embedding(t, Rat(-2), Embedding::identity) > 0;
}

bool Mat2K::is_hyperbolic() const {
  QuadRat t = trace_elt();
  return cmp_embedding(t, Rat(2), Embedding::identity) > 0 ||
         cmp_embedding(t, Rat(-2), Embedding::identity) < 0;
}

Mat2K operator*(const Mat2K& x, const Mat2K& y) {
  return {x.e00 * y.e00 + x.e01 * y.e10, x.e00 * y.e01 + x.e01 * y.e11,
          x.e10 * y.e00 + x.e11 * y.e10, x.e10 * y.e01 + x.e11 * y.e11};
}

Mat2K operator*(const QuadRat& s, const Mat2K& m) {
  return {s * m.e00, s * m.e01, s * m.e10, s * m.e11};
}

Mat2K operator+(const Mat2K& x, const Mat2K& y) {
  return {x.e00 + y.e00, x.e01 + y.e01, x.e10 + y.e10, x.e11 + y.e11};
}

Mat2K operator-(const Mat2K& x, const Mat2K& y) {
  return {x.e00 - y.e00, x.e01 - y.e01, x.e10 - y.e10, x.e11 - y.e11};
}

Mat2K pow(Mat2K base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  Mat2K r = Mat2K::identity(base.disc());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

ResidueRing::ResidueRing(QuadInt n) : disc(n.disc), modulus(std::move(n)) {
  if (modulus.is_zero()) throw std::invalid_argument("zero modulus");
  hnf = ideal_hnf({modulus});
  cardinality = hnf[0] * hnf[2];
  if (cardinality != modulus.norm_abs())
    throw std::logic_error("residue ring cardinality mismatch");
  if (!trivial() && disc.fundamental) {
    try {
      std::vector<PrimePower> found;
      for (const auto& ef : factor_element(modulus)) {
        if (!ef.ideal.generator) throw std::runtime_error("non-principal factor");
        found.push_back({*ef.ideal.generator, ef.exponent, ef.ideal.residue_norm});
      }
      factors = std::move(found);
      // Exponent of the unit group: lcm over components of q^(e-1) (q - 1).
      unit_exponent = 1;
      for (const auto& f : factors) {
        Int phi = f.residue_norm - 1;
        for (int i = 1; i < f.exp; ++i) phi *= f.residue_norm;
        unit_exponent = lcm(unit_exponent, phi);
      }
    } catch (const std::exception&) {
      // Class number > 1: no element factorization; inverses fall back to
      // the bounded scan.
      factors.clear();
      unit_exponent = 0;
    }
  }
  // Point canonicalization can need the unit list only when the modulus has
  // several prime factors (for a prime power every unimodular pair has a
  // unit coordinate).
  if (!trivial() && factors.size() != 1 && cardinality <= 100000) {
    for (const auto& r : residues())
      if (inverse(r)) units_.push_back(r);
  }
}

QuadInt ResidueRing::reduce(const QuadInt& x) const {
  // Columns (d0, 0) and (c, d1): reduce b mod d1, then a mod d0.
  Int k = floor_div(x.b, hnf[2]);
  Int b = x.b - k * hnf[2];
  Int a = mod_euclid(x.a - k * hnf[1], hnf[0]);
  return {a, b, disc};
}

QuadInt ResidueRing::pow(QuadInt base, Int e) const {
  QuadInt r = reduce(QuadInt::integer(1, disc));
  base = reduce(base);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
    base = mul(base, base);
    e /= 2;
  }
  return r;
}

std::optional<QuadInt> ResidueRing::inverse(const QuadInt& x) const {
  if (trivial()) return reduce(QuadInt::integer(0, disc));
  QuadInt xr = reduce(x);
  if (unit_exponent > 0) {
    QuadInt cand = pow(xr, unit_exponent - 1);
    if (mul(cand, xr) == reduce(QuadInt::integer(1, disc))) return cand;
    return std::nullopt;
  }
  // No factorization available: bounded brute force.
  if (cardinality > 100000) throw std::runtime_error("residue ring too large for inverse scan");
  QuadInt one = reduce(QuadInt::integer(1, disc));
  for (const auto& u : residues())
    if (mul(u, xr) == one) return u;
  return std::nullopt;
}

std::vector<QuadInt> ResidueRing::residues() const {
  std::vector<QuadInt> out;
  out.reserve(cardinality.get_ui());
  for (Int b = 0; b < hnf[2]; ++b)
    for (Int a = 0; a < hnf[0]; ++a) out.emplace_back(a, b, disc);
  return out;
}

bool is_unimodular_pair(const ResidueRing& ring, const QuadInt& c, const QuadInt& d) {
  if (ring.trivial()) return true;
  std::vector<QuadInt> gens = {ring.modulus};
  if (!c.is_zero()) gens.push_back(c);
  if (!d.is_zero()) gens.push_back(d);
  if (gens.size() == 1) return false;
  return ideal_norm(gens) == 1;
}

ProjPoint canonical_point(const ResidueRing& ring, const QuadInt& c, const QuadInt& d) {
  QuadInt cr = ring.reduce(c), dr = ring.reduce(d);
  if (ring.trivial()) return {cr, dr};
  if (auto inv = ring.inverse(dr)) {
    return {ring.mul(cr, *inv), ring.reduce(QuadInt::integer(1, ring.disc))};
  }
  if (auto inv = ring.inverse(cr)) {
    return {ring.reduce(QuadInt::integer(1, ring.disc)), ring.mul(dr, *inv)};
  }
  // Neither coordinate is a unit (possible for composite moduli): take the
  // least representative over all unit multiples.
  ProjPoint best{cr, dr};
  for (const auto& u : ring.units()) {
    ProjPoint cand{ring.mul(u, cr), ring.mul(u, dr)};
    if (cand < best) best = cand;
  }
  return best;
}

namespace {

std::vector<ProjPoint> proj_line_prime_power(const ResidueRing& ring, const QuadInt& pi,
                                             int k) {
  // Representatives: (1:0); (x:1) for all x mod pi^k; and for second
  // coordinate pi^j (j = 1..k-1) the numerators a_1 + a_2 pi + ... up to
  // pi^(k-j-1) with a_1 a unit digit -- (N-1) N^(k-j-1) classes per stratum.
  const Discriminant d = ring.disc;
  std::vector<ProjPoint> pts;
  QuadInt one = QuadInt::integer(1, d), zero = QuadInt::integer(0, d);
  pts.push_back(canonical_point(ring, one, zero));
  for (const auto& x : ring.residues()) pts.push_back(canonical_point(ring, x, one));
  ResidueRing small(pi);
  std::vector<QuadInt> digits = small.residues();
  std::vector<QuadInt> unit_digits;
  for (const auto& u : digits)
    if (small.inverse(u)) unit_digits.push_back(u);
  QuadInt pi_pow = one;
  for (int j = 1; j < k; ++j) {
    pi_pow = pi_pow * pi;  // pi^j
    std::vector<QuadInt> xs = unit_digits;
    QuadInt shift = QuadInt::integer(1, d);
    for (int t = 1; t < k - j; ++t) {
      shift = shift * pi;  // pi^t
      std::vector<QuadInt> next;
      next.reserve(xs.size() * digits.size());
      for (const auto& base : xs)
        for (const auto& dig : digits) next.push_back(base + dig * shift);
      xs = std::move(next);
    }
    for (const auto& x : xs) pts.push_back(canonical_point(ring, x, pi_pow));
  }
  return pts;
}

}  // namespace

std::vector<ProjPoint> proj_line(const ResidueRing& ring) {
  const Discriminant d = ring.disc;
  if (ring.trivial()) {
    return {ProjPoint{ring.reduce(QuadInt::integer(0, d)), ring.reduce(QuadInt::integer(0, d))}};
  }
  if (ring.factors.empty())
    throw std::runtime_error("proj_line needs the modulus factorization (h_D = 1, fundamental D)");
  // CRT: combine component points with idempotents e_i = M_i * (M_i^-1 mod pi_i^e_i).
  std::vector<std::vector<ProjPoint>> comp;
  std::vector<QuadInt> idem;
  for (const auto& f : ring.factors) {
    QuadInt pik = pow(f.pi, static_cast<unsigned long>(f.exp));
    ResidueRing comp_ring(pik);
    comp.push_back(proj_line_prime_power(comp_ring, f.pi, f.exp));
    QuadInt cof = div_exact(ring.modulus, pik);
    auto inv = comp_ring.inverse(cof);
    if (!inv) throw std::logic_error("CRT cofactor not invertible");
    idem.push_back(ring.mul(cof, *inv));
  }
  std::vector<ProjPoint> pts;
  std::vector<size_t> sel(comp.size(), 0);
  while (true) {
    QuadInt c = QuadInt::integer(0, d), dd = QuadInt::integer(0, d);
    for (size_t i = 0; i < comp.size(); ++i) {
      c = ring.add(c, ring.mul(comp[i][sel[i]].c, idem[i]));
      dd = ring.add(dd, ring.mul(comp[i][sel[i]].d, idem[i]));
    }
    pts.push_back(canonical_point(ring, c, dd));
    size_t i = 0;
    while (i < comp.size()) {
      if (++sel[i] < comp[i].size()) break;
      sel[i++] = 0;
    }
    if (i == comp.size()) break;
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

ProjPoint act_point(const ResidueRing& ring, const ProjPoint& pt, const Mat2K& M, ActSide side) {
  if (!M.is_integral()) throw std::invalid_argument("act_point needs an integral matrix");
  QuadInt m00 = M.e00.num, m01 = M.e01.num, m10 = M.e10.num, m11 = M.e11.num;
  if (side == ActSide::row_right) {
    // (c, d) * M
    return canonical_point(ring, pt.c * m00 + pt.d * m10, pt.c * m01 + pt.d * m11);
  }
  // M * (c, d)^T
  return canonical_point(ring, m00 * pt.c + m01 * pt.d, m10 * pt.c + m11 * pt.d);
}

Int index_formula(const Discriminant& disc, IndexKind kind, const QuadInt& n) {
  if (!(n.disc == disc)) throw std::invalid_argument("index_formula: discriminant mismatch");
  if (n.is_zero()) throw std::invalid_argument("index_formula: zero level");
  Int N = n.norm_abs();
  if (N == 1) return 1;
  auto factors = factor_element(n);
  // Collect distinct prime residue norms.
  std::vector<Int> qs;
  for (const auto& ef : factors) qs.push_back(ef.ideal.residue_norm);
  Rat idx;
  if (kind == IndexKind::principal) {
    idx = Rat(N * N * N);
    for (const auto& q : qs) idx *= Rat(q * q - 1, q * q);
  } else {
    idx = Rat(N);
    for (const auto& q : qs) idx *= Rat(q + 1, q);
  }
  idx.canonicalize();
  if (idx.get_den() != 1) throw std::logic_error("index formula not integral");
  return idx.get_num();
}

Int index_formula_pair(const Discriminant& disc, const QuadInt& m, const QuadInt& n) {
  if (!ideals_coprime(m, n)) throw std::invalid_argument("index_formula_pair: (m,n) not coprime");
  return index_formula(disc, IndexKind::hecke0, m) * index_formula(disc, IndexKind::hecke0, n);
}

namespace {

// int64 fast path for the brute-force counter; coordinates stay below the
// HNF diagonal (<= 10^4) so products fit comfortably.
struct SmallRing {
  long long d0, c, d1;  // HNF
  long long s, t;       // w^2 = s*w + t

  explicit SmallRing(const ResidueRing& r) {
    d0 = to_long(r.hnf[0]);
    c = to_long(r.hnf[1]);
    d1 = to_long(r.hnf[2]);
    s = r.disc.s();
    t = to_long(r.disc.wsq_const());
  }
  inline std::pair<long long, long long> reduce(long long a, long long b) const {
    long long k = b >= 0 ? b / d1 : -((-b + d1 - 1) / d1);
    b -= k * d1;
    a -= k * c;
    a %= d0;
    if (a < 0) a += d0;
    return {a, b};
  }
  inline std::pair<long long, long long> mul(long long a1, long long b1, long long a2,
                                             long long b2) const {
    long long bb = b1 * b2;
    return reduce(a1 * a2 + t * bb, a1 * b2 + b1 * a2 + s * bb);
  }
};

}  // namespace

static Int sl2_count_impl(const ResidueRing& ring, bool parallel) {
  if (ring.cardinality > 10000) throw std::invalid_argument("residue ring too large (guard 10^4)");
  if (ring.trivial()) return 1;
  SmallRing R(ring);
  const long long n0 = R.d0, n1 = R.d1;
  const long long card = n0 * n1;
  auto elem = [&](long long idx) {
    return std::pair<long long, long long>{idx % n0, idx / n0};
  };
  long long one_a = 1 % n0, one_b = 0;
  long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static) if (parallel)
  for (long long ai = 0; ai < card; ++ai) {
    auto [aa, ab] = elem(ai);
    for (long long bi = 0; bi < card; ++bi) {
      auto [ba, bb] = elem(bi);
      for (long long ci = 0; ci < card; ++ci) {
        auto [ca, cb] = elem(ci);
        auto bc = R.mul(ba, bb, ca, cb);
        for (long long di = 0; di < card; ++di) {
          auto [da, db] = elem(di);
          auto ad = R.mul(aa, ab, da, db);
          auto det = R.reduce(ad.first - bc.first, ad.second - bc.second);
          if (det.first == one_a && det.second == one_b) ++total;
        }
      }
    }
  }
  return ll(total);
}

Int sl2_residue_count_serial(const ResidueRing& ring) { return sl2_count_impl(ring, false); }
Int sl2_residue_count(const ResidueRing& ring) { return sl2_count_impl(ring, true); }

}  // namespace teich
