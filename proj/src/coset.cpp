#include "teich/coset.hpp"

#include <map>
#include <mutex>
#include <set>

#include "teich/textio.hpp"

namespace teich {

std::string verdict_name(MaximalityVerdict v) {
  switch (v) {
    case MaximalityVerdict::proven_equal: return "proven_equal";
    case MaximalityVerdict::equal_observed: return "equal_observed";
    case MaximalityVerdict::lower_bound: return "lower_bound";
  }
  return "?";
}

namespace {

std::string pair_key(const PairPoint& p) {
  return p.row.c.a.get_str() + "," + p.row.c.b.get_str() + "," + p.row.d.a.get_str() + "," +
         p.row.d.b.get_str() + "|" + p.col.c.a.get_str() + "," + p.col.c.b.get_str() + "," +
         p.col.d.a.get_str() + "," + p.col.d.b.get_str();
}

// Right action on coset pairs: row by M, column by adj(M) = M^-1; this keeps
// the stabilizer of the base pair at Gamma_0(m) n Gamma^{D,0}(n).
PairPoint apply_pair(const ResidueRing& rm, const ResidueRing& rn, const PairPoint& p,
                     const Mat2K& M, const Mat2K& adjM) {
  return {act_point(rm, p.row, M, ActSide::row_right),
          act_point(rn, p.col, adjM, ActSide::column_left)};
}

// Class number h_D = 1 test, memoized per discriminant. Table cells query
// this concurrently, so the memo is locked.
bool h_is_one(const Discriminant& disc) {
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

// The common prime divisor of 2 and w (D = 1 mod 8), or of 2 (D = 0 mod 4).
QuadInt two_prime(const Discriminant& disc) {
  auto facs = splitting_type(disc, Int(2));
  if (disc.D % 8 == 1) {
    for (const auto& f : facs) {
      if (!f.generator) continue;
      if (divides(*f.generator, QuadInt::w(disc))) return *f.generator;
    }
    throw std::logic_error("no common prime divisor of 2 and w");
  }
  if (disc.D % 4 == 0 && facs.front().generator) return *facs.front().generator;
  throw std::logic_error("two_prime undefined for this discriminant");
}

// Hypotheses under which the orbit size is the provably maximal index of
// Gamma^D(m,n) in SL2(O_D) intersected with the Veech group.
bool index_proven_maximal(const VeechPresentation& p, const QuadInt& m, const QuadInt& n) {
  const Discriminant& d = p.disc;
  if (!d.fundamental || !h_is_one(d)) return false;
  if (d.D % 8 == 5) return true;
  bool coprime_eta = ideals_coprime(m, p.eta_star) && ideals_coprime(n, p.eta_star);
  if (coprime_eta) return true;
  if (p.spin == Spin::odd && d.D % 4 == 1) {
    if (d.D % 16 != 1) return true;  // includes D = 9 mod 16
    QuadInt pi2 = two_prime(d);
    return ideals_coprime(m, pi2) && ideals_coprime(n, pi2);
  }
  return false;
}

}  // namespace

std::vector<int> CosetAction::perm_of(const Mat2K& M) const {
  Mat2K adjM = M.adjugate();
  std::map<std::string, int> index;
  for (size_t i = 0; i < points.size(); ++i) index[pair_key(points[i])] = static_cast<int>(i);
  std::vector<int> out(points.size(), -1);
  for (size_t i = 0; i < points.size(); ++i) {
    PairPoint img = apply_pair(*ring_m, *ring_n, points[i], M, adjM);
    auto it = index.find(pair_key(img));
    out[i] = (it == index.end()) ? -1 : it->second;
  }
  return out;
}

CosetAction build_action(const Discriminant& disc, Spin spin, const QuadInt& m,
                         const QuadInt& n) {
  return build_action(presentation(disc, spin), m, n);
}

CosetAction build_action(const VeechPresentation& pres, const QuadInt& m, const QuadInt& n) {
  if (m.is_zero() || n.is_zero()) throw std::invalid_argument("zero level");
  if (!ideals_coprime(m, n)) throw std::invalid_argument("(m, n) must be coprime ideals");
  CosetAction act;
  act.pres = pres;
  act.level_m = m;
  act.level_n = n;
  act.ring_m = std::make_shared<ResidueRing>(m);
  act.ring_n = std::make_shared<ResidueRing>(n);

  const Discriminant& d = pres.disc;
  QuadInt zero = QuadInt::integer(0, d), one = QuadInt::integer(1, d);
  PairPoint base{canonical_point(*act.ring_m, zero, one), canonical_point(*act.ring_n, zero, one)};

  std::vector<Mat2K> gens, adjs;
  for (const auto& g : pres.generators) {
    gens.push_back(g.m);
    adjs.push_back(g.m.adjugate());
  }

  std::map<std::string, int> index;
  act.points.push_back(base);
  act.words.push_back({});
  index[pair_key(base)] = 0;
  for (size_t head = 0; head < act.points.size(); ++head) {
    PairPoint cur = act.points[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      for (int dir = 0; dir < 2; ++dir) {
        const Mat2K& M = dir == 0 ? gens[gi] : adjs[gi];
        const Mat2K& A = dir == 0 ? adjs[gi] : gens[gi];
        PairPoint img = apply_pair(*act.ring_m, *act.ring_n, cur, M, A);
        std::string key = pair_key(img);
        if (index.emplace(key, static_cast<int>(act.points.size())).second) {
          act.points.push_back(img);
          auto word = act.words[head];
          word.push_back({static_cast<int>(gi), dir == 1});
          act.words.push_back(std::move(word));
        }
      }
    }
  }
  act.orbit_size = ll(static_cast<long long>(act.points.size()));

  // Permutations of the orbit per generator.
  act.perms.assign(gens.size(), {});
  act.inv_perms.assign(gens.size(), {});
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    act.perms[gi].resize(act.points.size());
    act.inv_perms[gi].resize(act.points.size());
    for (size_t i = 0; i < act.points.size(); ++i) {
      PairPoint img = apply_pair(*act.ring_m, *act.ring_n, act.points[i], gens[gi], adjs[gi]);
      act.perms[gi][i] = index.at(pair_key(img));
      PairPoint inv = apply_pair(*act.ring_m, *act.ring_n, act.points[i], adjs[gi], gens[gi]);
      act.inv_perms[gi][i] = index.at(pair_key(inv));
    }
  }

  try {
    act.maximal_index = index_formula_pair(d, m, n);
  } catch (const std::exception&) {
    act.maximal_index = 0;  // no closed form (e.g. class number > 1)
  }
  if (act.maximal_index > 0 && act.orbit_size == act.maximal_index) {
    act.verdict = index_proven_maximal(pres, m, n) ? MaximalityVerdict::proven_equal
                                                   : MaximalityVerdict::equal_observed;
  } else {
    act.verdict = MaximalityVerdict::lower_bound;
    if (pres.complete)
      act.verdict_note =
          "orbit is the exact subgroup index; it is smaller than the SL2(O_D) index";
    else
      act.verdict_note = "incomplete presentation: orbit is a lower bound";
  }
  return act;
}

namespace {

struct ParabolicClass {
  std::string label;
  std::string cusp;
};

std::vector<ParabolicClass> parabolic_classes(const VeechPresentation& p) {
  if (p.disc.D == 5) return {{"T", "infinity"}};
  // Odd spin: S swaps 0 and infinity, so the three cusp classes are
  // infinity (T), w/2 (B) and 1 (C = E). Even spin: 0 is its own class (Z);
  // the cylinder parabolic L lies over the same cusp class as E.
  if (p.spin == Spin::odd) return {{"T", "infinity"}, {"B", "w/2"}, {"C", "1"}};
  return {{"T", "infinity"}, {"Z", "0"}, {"E", "1"}};
}

}  // namespace

CurveInvariants subgroup_invariants(const CosetAction& action) {
  CurveInvariants inv;
  inv.index = action.orbit_size;
  inv.exact = action.pres.complete;
  const Discriminant& d = action.pres.disc;

  if (const Mat2K* S = action.pres.find("S")) {
    auto perm = action.perm_of(*S);
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == static_cast<int>(i)) ++inv.e2;
  }
  if (d.D == 5) {
    const Mat2K* S = action.pres.find("S");
    const Mat2K* T = action.pres.find("T");
    if (S && T) {
      auto perm = action.perm_of((*S) * (*T));
      for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == static_cast<int>(i)) ++inv.e5;
    }
  }

  if (!action.pres.complete) {
    // Cusp/genus bookkeeping needs the full parabolic class list, which is
    // only known for the complete presentations; everything reported here is
    // a bound and the caller sees exact = false.
    if (action.pres.chi) {
      inv.chi = Rat(action.orbit_size) * (*action.pres.chi);
      inv.chi.canonicalize();
      inv.volume_over_pi = Rat(2) * abs(inv.chi);
    }
    return inv;
  }

  for (const auto& pc : parabolic_classes(action.pres)) {
    const Mat2K* P = action.pres.find(pc.label);
    if (!P) continue;
    auto perm = action.perm_of(*P);
    CuspClass cls;
    cls.parent_label = pc.label;
    cls.parent_cusp = pc.cusp;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        if (perm[j] < 0) throw std::logic_error("parabolic permutation left the orbit");
        j = static_cast<size_t>(perm[j]);
        ++len;
      }
      cls.widths.push_back(len);
      ++cls.count;
    }
    std::sort(cls.widths.begin(), cls.widths.end());
    // Covering-degree bookkeeping: widths over each parent cusp sum to the index.
    long long total = 0;
    for (long long wdt : cls.widths) total += wdt;
    if (ll(total) != inv.index)
      throw std::logic_error("cusp width sum != index over cusp " + cls.parent_cusp);
    inv.total_cusps += cls.count;
    inv.cusps.push_back(std::move(cls));
  }

  if (action.pres.chi) {
    inv.chi = Rat(action.orbit_size) * (*action.pres.chi);
    inv.chi.canonicalize();
    inv.volume_over_pi = Rat(2) * abs(inv.chi);
    std::vector<long long> periods(inv.e2, 2);
    for (long long i = 0; i < inv.e5; ++i) periods.push_back(5);
    inv.genus = genus_from_chi(inv.chi, periods, inv.total_cusps);
  }
  return inv;
}

namespace {

std::vector<QuadInt> table_grid(const Discriminant& disc, int range) {
  // Order: 1..range, then a + b*w for b = 1..range-1, a = 0..range-1.
  std::vector<QuadInt> grid;
  for (int a = 1; a <= range; ++a) grid.push_back(QuadInt::integer(a, disc));
  for (int b = 1; b < range; ++b)
    for (int a = 0; a < range; ++a) grid.emplace_back(Int(a), Int(b), disc);
  return grid;
}

IndexTable emit_table_impl(const Discriminant& disc, Spin spin, int range, bool parallel) {
  if (range < 1) throw std::invalid_argument("range must be positive");
  VeechPresentation pres = presentation(disc, spin);
  IndexTable table;
  table.elements = table_grid(disc, range);
  const int n = static_cast<int>(table.elements.size());
  table.cells.assign(n, std::vector<std::string>(n));
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const QuadInt& nn = table.elements[row];  // row label: n
      const QuadInt& mm = table.elements[col];  // column label: m
      // No exception may escape the parallel region.
      try {
        if (!ideals_coprime(mm, nn)) {
          table.cells[row][col] = "-";
        } else {
          CosetAction act = build_action(pres, mm, nn);
          table.cells[row][col] = act.orbit_size.get_str();
        }
      } catch (const std::exception&) {
        table.cells[row][col] = "error";
      }
    }
  }
  return table;
}

}  // namespace

IndexTable emit_table_serial(const Discriminant& disc, Spin spin, int range) {
  return emit_table_impl(disc, spin, range, false);
}

IndexTable emit_table(const Discriminant& disc, Spin spin, int range) {
  return emit_table_impl(disc, spin, range, true);
}

}  // namespace teich
