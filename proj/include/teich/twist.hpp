#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teich/coset.hpp"

namespace teich {

// Decomposition M = N * L * scale with N in SL2(O_D), L = (m, x; 0, n)
// integral with unit content, and scale in K.
struct TwistSpec {
  Mat2K original;
  Mat2K normalized;            // upper triangular, entries in O_D, content a unit
  Mat2K unimodular_left_factor;
  QuadRat content_removed;     // the scalar factor

  QuadInt m() const { return normalized.e00.num; }
  QuadInt x() const { return normalized.e01.num; }
  QuadInt n() const { return normalized.e11.num; }
};

// Requires det(M) totally positive and h_D = 1.
TwistSpec normalize_twist(const Mat2K& M, const Discriminant& disc);

enum class VolumeStatus { exact, conditional_lower_bound };

struct VolumeResult {
  Int degree = 1;          // covering degree (observed orbit size when conditional)
  Rat chi;
  Rat volume_over_pi;      // volume = (this) * pi
  std::set<std::string> applicability;  // satisfied hypotheses
  VolumeStatus status = VolumeStatus::exact;
};

VolumeResult twist_volume(const TwistSpec& spec, const Discriminant& disc, Spin spin);

enum class ClassificationVerdict { same, different, unknown };
std::string classification_name(ClassificationVerdict v);

struct ClassificationResult {
  ClassificationVerdict verdict = ClassificationVerdict::unknown;
  std::string reason;
  // Witness: a word W in the presentation generators with N W M^-1 in
  // SL2(O_D), when found constructively.
  std::optional<std::vector<WordLetter>> witness_word;
  std::optional<Mat2K> witness_product;  // the group element W
  std::optional<Mat2K> witness_conjugator;  // J = N W M^-1
};

// Classification of the twisted curves of two normalized twists; requires
// h_D^+ = 1 and D = 5 mod 8 for the theorem-backed branches.
ClassificationResult classification(const TwistSpec& M, const TwistSpec& N,
                                    const Discriminant& disc, Spin spin,
                                    int max_word_length = 14);

// True iff the twist by M fixes the curve, i.e. M lies in K* . SL2(O_D).
// Requires D = 5 mod 8 fundamental with narrow class number 1.
bool twisting_stabilizer_check(const Mat2K& M, const Discriminant& disc);

}  // namespace teich
