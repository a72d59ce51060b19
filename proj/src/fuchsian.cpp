#include "teich/fuchsian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "teich/textio.hpp"

namespace teich {

const Mat2K* GroupSpec::find(const std::string& label) const {
  for (const auto& g : generators)
    if (g.label == label) return &g.m;
  return nullptr;
}

ExactPoint moebius(const Mat2K& M, const ExactPoint& z) {
  const QuadRat &a = M.e00, &b = M.e01, &c = M.e10, &d = M.e11;
  QuadRat cxd = c * z.re + d;
  QuadRat den = cxd * cxd + c * c * z.im * z.im;
  if (den.is_zero()) throw std::domain_error("Moebius image of the pole");
  QuadRat re = ((a * z.re + b) * cxd + a * c * z.im * z.im) / den;
  QuadRat im = M.det() * z.im / den;
  if (!(sign_embedding(im, Embedding::identity) > 0))
    throw std::domain_error("Moebius image left the upper half plane");
  return {re, im};
}

QuadRat cosh_distance(const ExactPoint& x, const ExactPoint& y) {
  QuadRat dr = x.re - y.re, di = x.im - y.im;
  QuadRat two = QuadRat::of(Rat(2), x.re.disc());
  return QuadRat::one(x.re.disc()) + (dr * dr + di * di) / (two * x.im * y.im);
}

ExactPoint elliptic_fixed_point(const Mat2K& M) {
  if (!(M.trace_elt() == QuadRat::zero(M.disc())))
    throw std::invalid_argument("exact fixed points need a trace-0 (order-2) element");
  QuadRat c = M.e10;
  if (c.is_zero()) throw std::invalid_argument("elliptic element with c = 0?");
  QuadRat cabs = sign_embedding(c, Embedding::identity) > 0 ? c : -c;
  QuadRat two = QuadRat::of(Rat(2), M.disc());
  return {(M.e00 - M.e11) / (two * c), cabs.inv()};
}

namespace {

std::string point_key(const ExactPoint& p) {
  return to_string(p.re) + "|" + to_string(p.im);
}

Mat2K label_product(const GroupSpec& g, const std::vector<std::pair<std::string, long>>& word) {
  Mat2K prod = Mat2K::identity(g.disc);
  for (const auto& [label, e] : word) {
    const Mat2K* m = g.find(label);
    if (!m) throw std::logic_error("unknown generator label " + label);
    prod = prod * pow(*m, e);
  }
  return prod;
}

}  // namespace

ReduceResult reduce_and_decide(const Mat2K& X, const GroupSpec& group) {
  if (!group.domain) throw std::invalid_argument("group has no fundamental-domain data");
  if (!(X.det() == QuadRat::one(group.disc)))
    throw std::invalid_argument("reduce_and_decide expects determinant 1");
  const FundamentalDomainSpec& dom = *group.domain;
  const Discriminant d = group.disc;
  const QuadRat s = dom.strip_width;
  QuadRat half = s / QuadRat::of(Rat(2), d);

  // Label for the strip translation z -> z + s.
  std::string a_label;
  Mat2K A = Mat2K::of_ints(QuadInt::integer(1, d), s.num, QuadInt::integer(0, d),
                           QuadInt::integer(1, d));
  if (s.den == 1) {
    for (const auto& g : group.generators)
      if (g.m == A) a_label = g.label;
  }
  if (a_label.empty()) throw std::invalid_argument("domain strip translation is not a generator");

  // Base point i*u with rational u above every bounding circle.
  Int u = 2;
  for (const auto& circ : dom.circles) {
    Int r = floor_embedding(circ.radius_sq(), Embedding::identity);
    while (u * u <= r + 1) u += 1;
  }
  ExactPoint z0{QuadRat::zero(d), QuadRat::of(Rat(u), d)};

  // The point is driven toward z0 by transformations g_1, g_2, ...; when it
  // arrives, X = +- g_1^-1 g_2^-1 ... g_m^-1, so each application appends its
  // inverse letters (letters reversed, exponents negated) to the word.
  ExactPoint y = moebius(X, z0);
  ReduceResult res;
  const long cap = 100000;
  while (true) {
    if (++res.reduction_steps > cap) throw std::runtime_error("reduction cap hit: malformed domain?");
    // Translate into the strip [-s/2, s/2).
    QuadRat shifted = (y.re + half) / s;
    Int k = floor_embedding(shifted, Embedding::identity);
    if (k != 0) {
      long kk = to_long(k);
      y.re = y.re - QuadRat::of(Rat(k), d) * s;
      res.word.emplace_back(a_label, kk);  // inverse of A^-k
    }
    // Strictly below a bounding circle?
    const DomainCircle* hit = nullptr;
    for (const auto& circ : dom.circles) {
      QuadRat cyd = circ.gen.e10 * y.re + circ.gen.e11;
      QuadRat mod2 = cyd * cyd + circ.gen.e10 * circ.gen.e10 * y.im * y.im;
      if (cmp_embedding(mod2, Rat(1), Embedding::identity) < 0) { hit = &circ; break; }
    }
    if (!hit) break;
    QuadRat before = y.im;
    y = moebius(hit->gen, y);
    if (!(sign_embedding(y.im - before, Embedding::identity) > 0))
      throw std::logic_error("imaginary part did not strictly increase");
    for (auto it = hit->word.rbegin(); it != hit->word.rend(); ++it)
      res.word.emplace_back(it->first, -it->second);
  }

  if (y == z0) {
    res.member = true;
    Mat2K prod = label_product(group, res.word);
    if (!(prod == X || prod == -X))
      throw std::logic_error("recovered word does not reproduce the input matrix");
    res.word_product = prod;
  } else {
    res.member = false;
    res.word.clear();
    res.final_point = y;
  }
  return res;
}

// --- built-in groups --------------------------------------------------------

namespace {

GroupSpec veech_builtin(const Discriminant& disc) {
  VeechPresentation pres = presentation(disc, Spin::odd);
  GroupSpec g;
  g.name = "L" + std::to_string(disc.D);
  g.disc = disc;
  g.generators = pres.generators;
  FundamentalDomainSpec dom;
  dom.strip_width = QuadRat(pres.eta_plus);
  const Mat2K* S = pres.find("S");
  dom.circles.push_back({*S, {{"S", 1}}});
  if (const Mat2K* B = pres.find("B")) {
    const Mat2K* T = pres.find("T");
    dom.circles.push_back({B->adjugate(), {{"B", -1}}});
    dom.circles.push_back({(*B) * (*T), {{"B", 1}, {"T", 1}}});
  }
  g.domain = dom;
  g.elliptic_reps.push_back({*S, 2});
  if (disc.D == 5) {
    const Mat2K* T = pres.find("T");
    g.elliptic_reps.push_back({(*S) * (*T), 5});
  }
  return g;
}

}  // namespace

GroupSpec builtin_group(const std::string& name, const Discriminant& disc) {
  if (name == "modular") {
    GroupSpec g;
    g.name = "modular";
    g.disc = disc;
    QuadInt one = QuadInt::integer(1, disc), zero = QuadInt::integer(0, disc);
    Mat2K T1 = Mat2K::of_ints(one, one, zero, one);
    Mat2K S = Mat2K::of_ints(zero, -one, one, zero);
    g.generators = {{"T", T1}, {"S", S}};
    FundamentalDomainSpec dom;
    dom.strip_width = QuadRat::one(disc);
    dom.circles.push_back({S, {{"S", 1}}});
    g.domain = dom;
    g.elliptic_reps.push_back({S, 2});
    return g;
  }
  if (name == "L5" || name == "L13" || name == "L17") {
    long long want = std::stoll(name.substr(1));
    if (disc.D != want) throw std::invalid_argument("builtin " + name + " needs --disc " + std::to_string(want));
    return veech_builtin(disc);
  }
  throw std::invalid_argument("unknown builtin group " + name);
}

GroupSpec builtin_group(const std::string& name) {
  if (name == "L5") return veech_builtin(order_context(5));
  if (name == "L13") return veech_builtin(order_context(13));
  if (name == "L17") return veech_builtin(order_context(17));
  throw std::invalid_argument("builtin " + name + " needs a discriminant");
}

GroupSpec parse_group_file(const std::string& text) {
  GroupSpec g;
  std::istringstream in(text);
  std::string line;
  bool have_disc = false;
  std::optional<QuadRat> strip;
  std::vector<Mat2K> circle_mats;
  int synth = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "disc") {
      long long D;
      ls >> D;
      g.disc = order_context(D);
      have_disc = true;
      continue;
    }
    if (!have_disc) throw std::invalid_argument("group file must start with `disc <D>`");
    if (kw == "gen") {
      std::string label, rest;
      ls >> label;
      std::getline(ls, rest);
      g.generators.push_back({label, parse_matrix(rest, g.disc)});
    } else if (kw == "strip") {
      std::string rest;
      std::getline(ls, rest);
      strip = parse_quadrat(rest, g.disc);
    } else if (kw == "circle") {
      std::string rest;
      std::getline(ls, rest);
      circle_mats.push_back(parse_matrix(rest, g.disc));
    } else if (kw == "elliptic") {
      std::string rest;
      std::getline(ls, rest);
      auto pos = rest.find_last_of(' ');
      int order = std::stoi(rest.substr(pos + 1));
      g.elliptic_reps.push_back({parse_matrix(rest.substr(0, pos), g.disc), order});
    } else {
      throw std::invalid_argument("unknown group-file keyword " + kw);
    }
  }
  if (strip) {
    FundamentalDomainSpec dom;
    dom.strip_width = *strip;
    for (const auto& m : circle_mats) {
      std::vector<std::pair<std::string, long>> word;
      for (const auto& gen : g.generators) {
        if (gen.m == m) { word = {{gen.label, 1}}; break; }
        if (gen.m.adjugate() == m) { word = {{gen.label, -1}}; break; }
      }
      if (word.empty()) {
        std::string label = "G" + std::to_string(synth++);
        g.generators.push_back({label, m});
        word = {{label, 1}};
      }
      dom.circles.push_back({m, word});
    }
    g.domain = dom;
  } else if (!circle_mats.empty()) {
    throw std::invalid_argument("circles given without a strip width");
  }
  return g;
}

// --- commensurability search -------------------------------------------------

namespace {

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int num = x.get_num(), den = x.get_den();
  if (!is_square(num) || !is_square(den)) return std::nullopt;
  return make_rat(isqrt(num), isqrt(den));
}

// Square root in K when it exists.
std::optional<QuadRat> sqrt_in_K(const QuadRat& x) {
  const Discriminant d = x.disc();
  Rat x1 = make_rat(x.num.a, x.den), x2 = make_rat(x.num.b, x.den);
  Rat s(d.s()), D(ll(d.D)), t(d.wsq_const());
  auto make = [&](const Rat& p, const Rat& q) -> std::optional<QuadRat> {
    // candidate p + q w: reconstruct as a QuadRat
    Rat pd = p, qd = q;
    Int den = lcm(pd.get_den(), qd.get_den());
    QuadInt num(pd.get_num() * (den / pd.get_den()), qd.get_num() * (den / qd.get_den()), d);
    QuadRat cand(num, den);
    if (cand * cand == x) return cand;
    return std::nullopt;
  };
  if (x2 == 0) {
    if (auto p = rat_sqrt(x1)) {
      if (auto r = make(*p, Rat(0))) return r;
    }
    // p = -q s / 2, q^2 = 4 x1 / D.
    Rat q2 = 4 * x1 / D;
    if (auto q = rat_sqrt(q2)) {
      if (auto r = make(-*q * s / 2, *q)) return r;
      if (auto r = make(*q * s / 2, -*q)) return r;
    }
    return std::nullopt;
  }
  // D Q^2 - (2 s x2 + 4 x1) Q + x2^2 = 0 with Q = q^2.
  Rat A = D, B = -(2 * s * x2 + 4 * x1), C = x2 * x2;
  Rat disc_q = B * B - 4 * A * C;
  auto sq = rat_sqrt(disc_q);
  if (!sq) return std::nullopt;
  for (int pm = -1; pm <= 1; pm += 2) {
    Rat Q = (-B + pm * *sq) / (2 * A);
    auto q = rat_sqrt(Q);
    if (!q || *q == 0) continue;
    Rat p = (x2 - Q * s) / (2 * *q);
    if (auto r = make(p, *q)) return r;
    if (auto r = make(-p, -*q)) return r;
  }
  return std::nullopt;
}

// Solve M x = zi, M y = zk for M = (al, be; ga, de) up to scale: kernel of a
// 4x4 K-linear system. Returns nullopt unless the kernel is 1-dimensional.
std::optional<Mat2K> solve_two_point_map(const ExactPoint& x, const ExactPoint& zi,
                                         const ExactPoint& y, const ExactPoint& zk,
                                         const Discriminant& d) {
  // For target w = wr + i wi and source p = pr + i pi:
  //   al pr + be - wr (ga pr + de) + wi ga pi        = 0  (real part)
  //   al pi        - wi (ga pr + de) - wr ga pi      = 0  (imag part)
  auto rows = [&](const ExactPoint& p, const ExactPoint& w,
                  std::vector<std::array<QuadRat, 4>>& out) {
    QuadRat zero = QuadRat::zero(d);
    out.push_back({p.re, QuadRat::one(d), w.im * p.im - w.re * p.re, -w.re});
    out.push_back({p.im, zero, -(w.im * p.re + w.re * p.im), -w.im});
  };
  std::vector<std::array<QuadRat, 4>> mtx;
  rows(x, zi, mtx);
  rows(y, zk, mtx);
  // Gaussian elimination over K.
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int piv = -1;
    for (int r = rank; r < 4; ++r)
      if (!mtx[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(mtx[rank], mtx[piv]);
    QuadRat inv = mtx[rank][col].inv();
    for (int c = 0; c < 4; ++c) mtx[rank][c] = inv * mtx[rank][c];
    for (int r = 0; r < 4; ++r) {
      if (r == rank || mtx[r][col].is_zero()) continue;
      QuadRat f = mtx[r][col];
      for (int c = 0; c < 4; ++c) mtx[r][c] = mtx[r][c] - f * mtx[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != 3) return std::nullopt;
  int free_col = 0;
  for (int c = 0; c < 4; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
  std::array<QuadRat, 4> v{QuadRat::zero(d), QuadRat::zero(d), QuadRat::zero(d),
                           QuadRat::zero(d)};
  v[free_col] = QuadRat::one(d);
  for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -mtx[r][free_col];
  Mat2K M(v[0], v[1], v[2], v[3]);
  if (M.det().is_zero()) return std::nullopt;
  return M;
}

}  // namespace

CommensurabilityResult commensurability_search(const GroupSpec& H, const GroupSpec& G,
                                               int tessellation_depth) {
  CommensurabilityResult res;
  if (!G.domain) throw std::invalid_argument("G needs fundamental-domain data");

  // Order-2 anchors in H.
  std::vector<ExactPoint> h_points;
  for (const auto& e : H.elliptic_reps)
    if (e.order == 2 && e.m.trace_elt() == QuadRat::zero(H.disc))
      h_points.push_back(elliptic_fixed_point(e.m));
  if (h_points.empty())
    throw std::invalid_argument("H has no order-2 elliptic data (unsupported)");
  ExactPoint x = h_points.front();
  // Second anchor: images of x under the generators (conjugate elliptics).
  std::optional<ExactPoint> y;
  for (const auto& g : H.generators) {
    ExactPoint cand = moebius(g.m, x);
    if (cand == x) continue;
    if (!y || cmp_embedding(cosh_distance(x, cand) - cosh_distance(x, *y), Rat(0),
                            Embedding::identity) < 0)
      y = cand;
  }
  for (size_t i = 1; i < h_points.size(); ++i) {
    if (h_points[i] == x) continue;
    if (!y || cmp_embedding(cosh_distance(x, h_points[i]) - cosh_distance(x, *y), Rat(0),
                            Embedding::identity) < 0)
      y = h_points[i];
  }
  if (!y) throw std::invalid_argument("could not find a second elliptic point of H");
  QuadRat target = cosh_distance(x, *y);

  // G anchors of order 2.
  std::vector<ExactPoint> g_reps;
  for (const auto& e : G.elliptic_reps)
    if (e.order == 2 && e.m.trace_elt() == QuadRat::zero(G.disc))
      g_reps.push_back(elliptic_fixed_point(e.m));
  if (g_reps.empty()) throw std::invalid_argument("G has no order-2 elliptic data");

  std::vector<Mat2K> gens;
  for (const auto& g : G.generators) {
    gens.push_back(g.m);
    gens.push_back(g.m.adjugate());
  }

  for (const ExactPoint& zi : g_reps) {
    // Tessellate the orbit of the G elliptic points inside the ball around zi.
    QuadRat expand_bound =
        QuadRat::of(Rat(4), G.disc) * target + QuadRat::of(Rat(8), G.disc);
    std::map<std::string, ExactPoint> ball;
    std::vector<ExactPoint> frontier;
    for (const auto& p : g_reps) {
      if (cmp_embedding(cosh_distance(zi, p) - expand_bound, Rat(0), Embedding::identity) > 0)
        continue;
      if (ball.emplace(point_key(p), p).second) frontier.push_back(p);
    }
    int stale = 0;
    for (int depth = 0; depth < tessellation_depth && !frontier.empty(); ++depth) {
      std::vector<ExactPoint> next;
      bool found_inside = false;
      for (const auto& p : frontier) {
        for (const auto& g : gens) {
          ExactPoint img = moebius(g, p);
          if (cmp_embedding(cosh_distance(zi, img) - expand_bound, Rat(0),
                            Embedding::identity) > 0)
            continue;
          if (!ball.emplace(point_key(img), img).second) continue;
          next.push_back(img);
          if (cmp_embedding(cosh_distance(zi, img) - target, Rat(0), Embedding::identity) <= 0)
            found_inside = true;
        }
      }
      stale = found_inside ? 0 : stale + 1;
      if (stale >= 2) break;
      frontier = std::move(next);
    }
    if (!frontier.empty() && stale < 2) res.search_complete = false;

    for (const auto& [key, zk] : ball) {
      if (!(cosh_distance(zi, zk) == target)) continue;
      auto M = solve_two_point_map(x, zi, *y, zk, G.disc);
      if (!M) continue;
      ++res.candidates_tested;
      // Orientation-reversing candidates are not conjugations inside PSL2(R).
      if (!(sign_embedding(M->det(), Embedding::identity) > 0)) continue;
      if (!(moebius(*M, x) == zi) || !(moebius(*M, *y) == zk)) continue;
      // Verify M h M^-1 in G for every generator h of H (scale-free form).
      QuadRat det = M->det();
      bool ok = true;
      std::vector<Mat2K> images;
      for (const auto& h : H.generators) {
        Mat2K J = (*M) * h.m * M->adjugate();
        J = det.inv() * J;
        if (!(J.det() == QuadRat::one(G.disc))) { ok = false; break; }
        auto verdict = reduce_and_decide(J, G);
        if (!verdict.member) { ok = false; break; }
        images.push_back(J);
      }
      if (!ok) continue;
      // Normalize by a K square root of the determinant when possible.
      Conjugator conj;
      conj.generator_images = images;
      if (auto s = sqrt_in_K(det)) {
        conj.m = s->inv() * (*M);
        conj.normalized = true;
      } else {
        conj.m = *M;
        conj.normalized = false;
      }
      res.verified.push_back(conj);
    }
  }
  return res;
}

TraceTestResult discreteness_trace_test(const Mat2K& V, const Mat2K& W) {
  const Discriminant d = V.disc();
  if (!V.is_parabolic()) throw std::invalid_argument("V must be parabolic");
  Mat2K comm = V * W * V.inverse() * W.inverse();
  QuadRat t = comm.trace_elt();
  if (t == QuadRat::of(Rat(2), d))
    throw std::invalid_argument("<V, W> is elementary (commutator trace 2)");
  TraceTestResult res;
  if (cmp_embedding(t, Rat(3), Embedding::identity) < 0) {
    res.passes = false;
    res.detail = "tr[V,W] < 3";
    return res;
  }
  if (cmp_embedding(t, Rat(6), Embedding::identity) >= 0) {
    res.passes = true;
    res.detail = "tr[V,W] >= 6";
    return res;
  }
  // 3 <= t < 6: must be 4 + 2cos(2pi/q). The value 2cos(2pi/q) lies in K
  // only for q in {1,2,3,4,6} (rational) and, per field, q in {5,10} for
  // D = 5, q = 8 for D = 8, q = 12 for D = 12.
  struct Cand { int q; QuadRat val; };
  std::vector<Cand> cands = {{3, QuadRat::of(Rat(3), d)},
                             {4, QuadRat::of(Rat(4), d)},
                             {6, QuadRat::of(Rat(5), d)}};
  QuadRat w(QuadInt::w(d));
  if (d.D == 5) {
    cands.push_back({5, QuadRat::of(Rat(3), d) + w});   // 4 + (w - 1)
    cands.push_back({10, QuadRat::of(Rat(4), d) + w});  // 4 + w
  } else if (d.D == 8 || d.D == 12) {
    cands.push_back({d.D == 8 ? 8 : 12, QuadRat::of(Rat(4), d) + w});
  }
  for (const auto& c : cands) {
    if (t == c.val) {
      res.passes = true;
      res.q = c.q;
      res.detail = "tr[V,W] = 4 + 2cos(2pi/" + std::to_string(c.q) + ")";
      return res;
    }
  }
  res.passes = false;
  res.detail = "3 <= tr[V,W] < 6 matches no 4 + 2cos(2pi/q)";
  return res;
}

Mat2K parabolic_root(const Mat2K& P, long k) {
  if (k < 2) throw std::invalid_argument("root degree must be >= 2");
  const Discriminant d = P.disc();
  Mat2K Q = P;
  QuadRat two = QuadRat::of(Rat(2), d);
  if (Q.trace_elt() == -two) Q = -Q;
  if (!(Q.trace_elt() == two)) throw std::invalid_argument("parabolic_root needs trace +-2");
  QuadRat scale = QuadRat(QuadInt::integer(1, d), Int(k));
  return Mat2K::identity(d) + scale * (Q - Mat2K::identity(d));
}

}  // namespace teich
