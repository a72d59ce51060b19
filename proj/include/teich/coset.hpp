#pragma once

#include <memory>
#include <string>
#include <vector>

#include "teich/veech.hpp"

namespace teich {

// Coset label for Gamma^D(m,n) = Gamma_0(m) n Gamma^{D,0}(n): a pair of
// projective points, row component mod m and column component mod n.
struct PairPoint {
  ProjPoint row, col;
  bool operator==(const PairPoint& o) const { return row == o.row && col == o.col; }
};

enum class MaximalityVerdict { proven_equal, equal_observed, lower_bound };
std::string verdict_name(MaximalityVerdict v);

// One BFS letter: generator index into the presentation, inverted or not.
struct WordLetter {
  int gen = -1;
  bool inverse = false;
};

struct CosetAction {
  VeechPresentation pres;
  QuadInt level_m, level_n;
  std::shared_ptr<ResidueRing> ring_m, ring_n;
  std::vector<PairPoint> points;      // points[0] is the base coset
  // perms[g][i]: image of point i under generator g (and under its inverse).
  std::vector<std::vector<int>> perms, inv_perms;
  // BFS tree: words[i] reaches points[i] from the base.
  std::vector<std::vector<WordLetter>> words;
  Int orbit_size = 0;
  Int maximal_index = 0;
  MaximalityVerdict verdict = MaximalityVerdict::lower_bound;
  std::string verdict_note;

  // Permutation of the orbit induced by an arbitrary integral matrix of the
  // group; -1 entries mean the image left the orbit (incomplete data).
  std::vector<int> perm_of(const Mat2K& M) const;
};

// Orbit of the base coset ((0:1) mod m, (0:1) mod n) under all generators
// and inverses. Requires (m,n) coprime as ideals and mn != 0.
CosetAction build_action(const Discriminant& disc, Spin spin, const QuadInt& m,
                         const QuadInt& n);
CosetAction build_action(const VeechPresentation& pres, const QuadInt& m, const QuadInt& n);

struct CuspClass {
  std::string parent_label;        // generator representing the parent cusp
  std::string parent_cusp;         // human-readable parent cusp name
  long long count = 0;             // cusps of the subgroup over this one
  std::vector<long long> widths;   // cycle lengths, sorted
};

struct CurveInvariants {
  Int index = 1;       // a lower bound when the presentation is incomplete
  Rat chi;
  Rat volume_over_pi;  // volume = (this) * pi
  long long e2 = 0;
  long long e5 = 0;    // only for D = 5
  std::vector<CuspClass> cusps;  // empty for incomplete presentations
  long long total_cusps = 0;
  long long genus = -1;  // -1: not derivable (incomplete presentation)
  bool exact = true;     // false: bounds only (incomplete presentation)
};

// Elliptic/cusp/genus data of the subgroup cut out by the action. Exact for
// complete presentations; flagged as bounds otherwise.
CurveInvariants subgroup_invariants(const CosetAction& action);

// Table of orbit sizes over the element grid 1..range, w..w+range-1, ...,
// (range-1)w + range-1 (row = n, column = m); "-" marks non-coprime pairs.
struct IndexTable {
  std::vector<QuadInt> elements;          // grid labels, in order
  std::vector<std::vector<std::string>> cells;  // cells[row][col]
};

IndexTable emit_table_serial(const Discriminant& disc, Spin spin, int range);
IndexTable emit_table(const Discriminant& disc, Spin spin, int range);

}  // namespace teich
