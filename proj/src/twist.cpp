#include "teich/twist.hpp"

#include <map>
#include <mutex>

#include "teich/textio.hpp"

namespace teich {

namespace {

bool h_one(const Discriminant& disc) {
  static std::mutex mu;
  static std::map<long long, bool> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(disc.D);
    if (it != cache.end()) return it->second;
  }
  bool one = class_numbers(disc, ClassNumberMode::real) == Rat(1);
  std::lock_guard<std::mutex> lock(mu);
  cache[disc.D] = one;
  return one;
}

bool h_plus_one(const Discriminant& disc) {
  static std::mutex mu;
  static std::map<long long, bool> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(disc.D);
    if (it != cache.end()) return it->second;
  }
  bool one = class_numbers(disc, ClassNumberMode::narrow) == Rat(1);
  std::lock_guard<std::mutex> lock(mu);
  cache[disc.D] = one;
  return one;
}

QuadInt content_of(const std::vector<QuadInt>& entries) {
  std::vector<QuadInt> nz;
  for (const auto& e : entries)
    if (!e.is_zero()) nz.push_back(e);
  if (nz.empty()) throw std::invalid_argument("zero matrix");
  return ideal_generator(nz);
}

QuadInt two_prime_of(const Discriminant& disc) {
  auto facs = splitting_type(disc, Int(2));
  if (disc.D % 8 == 1) {
    for (const auto& f : facs)
      if (f.generator && divides(*f.generator, QuadInt::w(disc))) return *f.generator;
    throw std::logic_error("no common prime divisor of 2 and w");
  }
  if (!facs.front().generator) throw std::logic_error("missing generator for 2");
  return *facs.front().generator;
}

}  // namespace

TwistSpec normalize_twist(const Mat2K& M, const Discriminant& disc) {
  // The decomposition M = N L works for any invertible M; total positivity
  // of the determinant only matters for the twist interpretation and is
  // checked by the volume/classification layers.
  QuadRat dt = M.det();
  if (dt.is_zero()) throw std::invalid_argument("singular twist matrix");
  if (!h_one(disc)) throw std::invalid_argument("normalize_twist requires h_D = 1");

  // Clear denominators and remove the content.
  Int den = lcm(lcm(M.e00.den, M.e01.den), lcm(M.e10.den, M.e11.den));
  QuadRat den_r = QuadRat::of(Rat(den), disc);
  Mat2K W = den_r * M;  // integral now
  QuadInt a = W.e00.num, b = W.e01.num, c = W.e10.num, d = W.e11.num;
  QuadInt g = content_of({a, b, c, d});
  QuadRat ginv = QuadRat(g).inv();
  a = (ginv * QuadRat(a)).num; b = (ginv * QuadRat(b)).num;
  c = (ginv * QuadRat(c)).num; d = (ginv * QuadRat(d)).num;

  QuadInt one = QuadInt::integer(1, disc), zero = QuadInt::integer(0, disc);
  Mat2K N = Mat2K::identity(disc);
  if (!c.is_zero()) {
    if (a.is_zero()) {
      // Swap rows with S = (0,-1;1,0): S^-1 * (0,b;c,d) is upper triangular.
      N = Mat2K::of_ints(zero, -one, one, zero);
    } else {
      QuadInt q = gcd_element(a, c);
      QuadInt atil = div_exact(a, q), ctil = div_exact(c, q);
      // Find f with (ctil*f + 1)/atil integral, scanning the residue system
      // mod atil. Guaranteed by (atil, ctil) = 1 and h_D = 1.
      ResidueRing ring(atil);
      std::optional<QuadInt> f;
      if (ring.trivial()) {
        f = zero;
      } else {
        for (const auto& r : ring.residues()) {
          if (divides(atil, ctil * r + one)) { f = r; break; }
        }
      }
      if (!f) throw std::logic_error("residue scan failed; (a/q, c/q) not coprime?");
      QuadInt h = div_exact(ctil * *f + one, atil);
      N = Mat2K::of_ints(atil, *f, ctil, h);
    }
  }
  Mat2K L = N.adjugate() * Mat2K::of_ints(a, b, c, d);
  if (!L.e10.is_zero()) throw std::logic_error("normalization did not clear lower-left");
  // Remove the content of (m, x, n) as well.
  QuadInt m0 = L.e00.num, x0 = L.e01.num, n0 = L.e11.num;
  QuadInt g2 = content_of({m0, x0, n0});
  QuadRat g2r(g2);
  Mat2K Lred = g2r.inv() * L;
  // Deterministic associates: scale by the unit making m canonical.
  QuadInt mred = Lred.e00.num;
  QuadInt mcanon = canonical_associate(mred);
  QuadRat u = QuadRat(mcanon) / QuadRat(mred);
  if (!(u.is_integral() && u.num.is_unit()))
    throw std::logic_error("canonical associate is not a unit multiple");
  Mat2K Lfin = u * Lred;

  TwistSpec spec;
  spec.original = M;
  spec.normalized = Lfin;
  spec.unimodular_left_factor = N;
  // original = N * normalized * scale.
  spec.content_removed = QuadRat(g * g2) / (QuadRat(u.num) * den_r);
  // Exact round-trip check.
  Mat2K back = spec.content_removed * (N * Lfin);
  if (!(back == M)) throw std::logic_error("twist normalization round-trip failed");
  return spec;
}

VolumeResult twist_volume(const TwistSpec& spec, const Discriminant& disc, Spin spin) {
  VolumeResult res;
  QuadInt m = spec.m(), n = spec.n();
  QuadInt mn = m * n;
  VeechPresentation pres = presentation(disc, spin);

  bool fund = disc.fundamental;
  bool h1 = h_one(disc);
  if (fund) res.applicability.insert("fundamental discriminant");
  if (h1) res.applicability.insert("h_D = 1");
  bool exact = false;
  if (fund && h1) {
    if (disc.D % 8 == 5) {
      res.applicability.insert("D = 5 mod 8");
      exact = true;
    } else {
      bool eta_ok = ideals_coprime(m, pres.eta_star) && ideals_coprime(n, pres.eta_star);
      if (eta_ok) res.applicability.insert("(m, eta*) = (n, eta*) = 1");
      bool cov_ok = false;
      if (disc.D % 8 == 1) {
        QuadInt pi2 = two_prime_of(disc);
        QuadInt crit = (spin == Spin::odd) ? pi2 : pi2.conj();
        if (spin == Spin::odd && disc.D % 16 == 9) {
          cov_ok = true;
          res.applicability.insert("D = 9 mod 16, odd spin");
        } else if (ideals_coprime(mn, crit)) {
          cov_ok = true;
          res.applicability.insert(spin == Spin::odd ? "det coprime to pi_2"
                                                     : "det coprime to conj(pi_2)");
        }
      } else {  // D = 0 mod 4
        QuadInt pi2t = two_prime_of(disc);
        if (ideals_coprime(mn, pi2t)) {
          cov_ok = true;
          res.applicability.insert("det coprime to the ramified prime over 2");
        }
      }
      exact = eta_ok && cov_ok;
    }
  }

  if (exact) {
    res.degree = index_formula(disc, IndexKind::hecke0, mn);
    res.status = VolumeStatus::exact;
  } else {
    CosetAction act = build_action(pres, mn, QuadInt::integer(1, disc));
    res.degree = act.orbit_size;
    res.status = VolumeStatus::conditional_lower_bound;
  }
  res.chi = Rat(res.degree) * chi_teich(disc, spin);
  res.chi.canonicalize();
  res.volume_over_pi = Rat(2) * abs(res.chi);
  return res;
}

std::string classification_name(ClassificationVerdict v) {
  switch (v) {
    case ClassificationVerdict::same: return "same";
    case ClassificationVerdict::different: return "different";
    case ClassificationVerdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

// Determinants agree up to a unit square eps^(2k), |k| <= 6? Returns the k.
std::optional<long> unit_square_match(const QuadInt& dm, const QuadInt& dn,
                                      const Discriminant& disc) {
  if (dm.norm_abs() != dn.norm_abs()) return std::nullopt;
  UnitDescription u = fundamental_unit(disc);
  QuadRat ratio = QuadRat(dm) / QuadRat(dn);
  QuadRat eps2 = QuadRat(u.fundamental_unit * u.fundamental_unit);
  QuadRat cur = QuadRat::one(disc);
  for (long k = 0; k <= 6; ++k) {
    if (ratio == cur) return k;
    if (ratio == cur.inv()) return -k;
    cur = cur * eps2;
  }
  return std::nullopt;
}

// BFS over the image of the generators in SL2(O_D / det) looking for a word
// W with N W adj(M) = 0 mod det entrywise; then J = N W M^-1 is integral of
// determinant 1. Words are recorded as generator letters.
struct ModMatrix {
  QuadInt a, b, c, d;
  std::string key(const ResidueRing& r) const {
    (void)r;
    return a.a.get_str() + "," + a.b.get_str() + ";" + b.a.get_str() + "," + b.b.get_str() +
           ";" + c.a.get_str() + "," + c.b.get_str() + ";" + d.a.get_str() + "," + d.b.get_str();
  }
};

ModMatrix reduce_mat(const ResidueRing& r, const Mat2K& M) {
  return {r.reduce(M.e00.num), r.reduce(M.e01.num), r.reduce(M.e10.num), r.reduce(M.e11.num)};
}

ModMatrix mul_mod(const ResidueRing& r, const ModMatrix& x, const ModMatrix& y) {
  return {r.reduce(x.a * y.a + x.b * y.c), r.reduce(x.a * y.b + x.b * y.d),
          r.reduce(x.c * y.a + x.d * y.c), r.reduce(x.c * y.b + x.d * y.d)};
}

}  // namespace

ClassificationResult classification(const TwistSpec& Mspec, const TwistSpec& Nspec,
                                    const Discriminant& disc, Spin spin, int max_word_length) {
  if (disc.D % 8 != 5 || !disc.fundamental || !h_plus_one(disc))
    throw std::invalid_argument(
        "classification requires D = 5 mod 8 fundamental with narrow class number 1");
  ClassificationResult res;
  QuadInt dm = (Mspec.normalized.det()).num;
  QuadInt dn = (Nspec.normalized.det()).num;

  auto k = unit_square_match(dm, dn, disc);
  if (!k) {
    res.verdict = ClassificationVerdict::different;
    res.reason = "determinants differ by no unit square";
    return res;
  }
  if (Mspec.normalized == Nspec.normalized) {
    res.verdict = ClassificationVerdict::same;
    res.reason = "identical normalized twists";
    return res;
  }

  // Rescale M by eps^-k so the determinants agree exactly; unit scaling
  // preserves integrality.
  UnitDescription u = fundamental_unit(disc);
  Mat2K M = Mspec.normalized;
  if (*k != 0) {
    QuadRat eps = QuadRat(u.fundamental_unit);
    QuadRat step = *k > 0 ? eps.inv() : eps;
    for (long i = 0; i < (*k > 0 ? *k : -*k); ++i) M = step * M;
  }
  const Mat2K& N = Nspec.normalized;
  if (!(M.det() == N.det())) throw std::logic_error("determinant rescale failed");
  if (!M.is_integral()) throw std::logic_error("unit rescale lost integrality");
  QuadInt det = M.det().num;

  bool det_prime = false;
  if (det.norm_abs() > 1) {
    auto facs = factor_element(det);
    det_prime = (facs.size() == 1 && facs.front().exponent == 1);
  }

  // Constructive witness: search SL2(O_D/det) for a generator word whose
  // product W satisfies N W M^-1 integral.
  VeechPresentation pres = presentation(disc, spin);
  ResidueRing ring(det);
  ModMatrix target_n = reduce_mat(ring, N);
  ModMatrix target_madj = reduce_mat(ring, M.adjugate());
  auto is_witness_mod = [&](const ModMatrix& wbar) {
    ModMatrix prod = mul_mod(ring, mul_mod(ring, target_n, wbar), target_madj);
    QuadInt z = ring.reduce(QuadInt::integer(0, disc));
    return prod.a == z && prod.b == z && prod.c == z && prod.d == z;
  };

  struct Node {
    ModMatrix mat;
    std::vector<WordLetter> word;
  };
  std::vector<Mat2K> gens, adjs;
  for (const auto& g : pres.generators) {
    gens.push_back(g.m);
    adjs.push_back(g.m.adjugate());
  }
  std::map<std::string, int> seen;
  std::vector<Node> queue;
  queue.push_back({reduce_mat(ring, Mat2K::identity(disc)), {}});
  seen[queue[0].mat.key(ring)] = 0;
  std::optional<std::vector<WordLetter>> found;
  if (is_witness_mod(queue[0].mat)) found = queue[0].word;
  for (size_t head = 0; head < queue.size() && !found; ++head) {
    Node cur = queue[head];
    if (static_cast<int>(cur.word.size()) >= max_word_length) continue;
    for (size_t gi = 0; gi < gens.size() && !found; ++gi) {
      for (int dir = 0; dir < 2 && !found; ++dir) {
        ModMatrix img = mul_mod(ring, cur.mat, reduce_mat(ring, dir == 0 ? gens[gi] : adjs[gi]));
        std::string key = img.key(ring);
        if (seen.count(key)) continue;
        seen[key] = 1;
        Node next{img, cur.word};
        next.word.push_back({static_cast<int>(gi), dir == 1});
        if (is_witness_mod(img)) found = next.word;
        queue.push_back(std::move(next));
      }
    }
  }

  if (found) {
    Mat2K W = Mat2K::identity(disc);
    for (const auto& l : *found) W = W * (l.inverse ? adjs[l.gen] : gens[l.gen]);
    Mat2K J = N * W * M.inverse();
    if (!J.is_in_sl2_od()) throw std::logic_error("witness verification failed");
    res.verdict = ClassificationVerdict::same;
    res.reason = det_prime ? "prime determinant (theorem) with constructive witness"
                           : "constructive witness";
    res.witness_word = found;
    res.witness_product = W;
    res.witness_conjugator = J;
    return res;
  }
  if (det_prime) {
    res.verdict = ClassificationVerdict::same;
    res.reason = "prime determinant (theorem); witness search exhausted";
    return res;
  }
  res.verdict = ClassificationVerdict::unknown;
  res.reason = "witness search exhausted (conjectural case)";
  return res;
}

bool twisting_stabilizer_check(const Mat2K& M, const Discriminant& disc) {
  if (disc.D % 8 != 5 || !disc.fundamental || !h_plus_one(disc))
    throw std::invalid_argument(
        "twisting_stabilizer_check requires D = 5 mod 8 fundamental with h_D^+ = 1");
  // Clear denominators and unit content; stabilizing twists are exactly the
  // K*-multiples of SL2(O_D), i.e. content-free integral with det in eps^2Z.
  Int den = lcm(lcm(M.e00.den, M.e01.den), lcm(M.e10.den, M.e11.den));
  Mat2K W = QuadRat::of(Rat(den), disc) * M;
  QuadInt g = ideal_generator({W.e00.num, W.e01.num, W.e10.num, W.e11.num});
  Mat2K Wn = QuadRat(g).inv() * W;
  QuadRat dt = Wn.det();
  if (!dt.is_integral() || !dt.num.is_unit()) return false;
  return unit_square_match(dt.num, QuadInt::integer(1, disc), disc).has_value();
}

}  // namespace teich
