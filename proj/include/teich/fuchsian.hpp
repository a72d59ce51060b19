#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teich/veech.hpp"

namespace teich {

// Point of the upper half plane with coordinates in K; Moebius images of
// such points under matrices over K stay exact.
struct ExactPoint {
  QuadRat re, im;  // im > 0
  bool operator==(const ExactPoint& o) const { return re == o.re && im == o.im; }
};

ExactPoint moebius(const Mat2K& M, const ExactPoint& z);
// cosh of the hyperbolic distance, rational in the coordinates.
QuadRat cosh_distance(const ExactPoint& x, const ExactPoint& y);
// Fixed point of a trace-0 (order-2) elliptic matrix: (a-d)/2c + i/|c|.
ExactPoint elliptic_fixed_point(const Mat2K& M);

// One bounding isometric circle |cz + d| = 1 of the limit Dirichlet domain,
// together with the group word for the element that generates it.
struct DomainCircle {
  Mat2K gen;                                          // the element to apply
  std::vector<std::pair<std::string, long>> word;     // gen as labeled word
  QuadRat center() const { return -(gen.e11 / gen.e10); }
  QuadRat radius_sq() const { return (gen.e10 * gen.e10).inv(); }
};

struct FundamentalDomainSpec {
  QuadRat strip_width;  // minimal translation z -> z + s; half-width s/2
  std::vector<DomainCircle> circles;
};

struct EllipticRep {
  Mat2K m;
  int order = 2;
};

struct GroupSpec {
  std::string name;
  Discriminant disc;
  std::vector<LabeledMat> generators;
  std::optional<FundamentalDomainSpec> domain;
  std::vector<EllipticRep> elliptic_reps;

  const Mat2K* find(const std::string& label) const;
};

// Built-in groups: "L5", "L13", "L17" (odd-spin Veech groups with their
// Dirichlet domains) and "modular" (SL2(Z) over the given order).
GroupSpec builtin_group(const std::string& name, const Discriminant& disc);
GroupSpec builtin_group(const std::string& name);

// Line-oriented group file: `disc <D>`, `gen <label> <matrix>`, `strip <s>`,
// `circle <matrix>`, `elliptic <matrix> <order>`.
GroupSpec parse_group_file(const std::string& text);

struct ReduceResult {
  bool member = false;
  std::vector<std::pair<std::string, long>> word;  // product equals +-X when member
  std::optional<Mat2K> word_product;
  std::optional<ExactPoint> final_point;  // reduced point when not a member
  long reduction_steps = 0;
};

// Point-reduction membership test for a non-cocompact cofinite group with
// known fundamental-domain data; the imaginary part strictly increases at
// every circle application.
ReduceResult reduce_and_decide(const Mat2K& X, const GroupSpec& group);

struct Conjugator {
  Mat2K m;             // entries in K; conjugation is scale-invariant
  bool normalized;     // true when det(m) = 1 after dividing by a K square root
  std::vector<Mat2K> generator_images;  // M h M^-1 for the generators of H
};

struct CommensurabilityResult {
  std::vector<Conjugator> verified;
  bool search_complete = true;  // false when the tessellation bound was hit
  long candidates_tested = 0;
};

// Elliptic-anchored search for M with M H M^-1 <= G; both groups must have
// order-2 elliptic data and G needs fundamental-domain data.
CommensurabilityResult commensurability_search(const GroupSpec& H, const GroupSpec& G,
                                               int tessellation_depth = 10);

struct TraceTestResult {
  bool passes = false;
  std::optional<int> q;  // matched rotation order when 3 <= t < 6
  std::string detail;
};

// Discreteness test for <V, W> with V parabolic: t = tr[V,W] must be >= 3,
// and in [3,6) must equal 4 + 2cos(2pi/q) for an integer q.
TraceTestResult discreteness_trace_test(const Mat2K& V, const Mat2K& W);

// k-th root of a parabolic matrix (trace +2 after sign normalization):
// identity + (P - identity)/k.
Mat2K parabolic_root(const Mat2K& P, long k);

}  // namespace teich
