#pragma once

#include <optional>
#include <string_view>

#include "permlab/analysis.hpp"

namespace permlab {

enum class LabelingKind {
  worst,
  distance_one,
  cyclic_optimal,
  from_pair,
  searched,
};

std::string_view to_string(LabelingKind kind);
std::optional<LabelingKind> labeling_kind_from_string(std::string_view text);

/// A conjugator together with the minimal distance it achieves on the code it
/// was issued for. Re-checkable: achieved_distance = min_distance(relabel(C, label)).
struct LabelingCertificate {
  Permutation label;
  int achieved_distance = 0;
  LabelingKind kind = LabelingKind::searched;
};

/// The conjugate code l C l^{-1}. Preserves size, group status, and the
/// multiset of cycle types; usually changes the minimal distance.
PermutationCode relabel(const PermutationCode& code, const Permutation& label);

/// A single n-cycle (a_0,...,a_{n-1}) whose cyclically adjacent entries differ
/// by at most 2, hence of weight <= 2. Closed form: 1, 2, ascending evens,
/// then descending odds down to 3.
Permutation snake_cycle(int n);

/// A weight <= 2 permutation of the given cycle type: one snake cycle per
/// block of consecutive integers.
Permutation low_weight_representative(const CycleType& type);

/// A conjugator l with conjugate(l, f) == g. Requires equal cycle types.
Permutation conjugator_onto(const Permutation& f, const Permutation& g);

/// A labeling with relabeled minimal distance <= 2: conjugates the smallest
/// non-identity element (or difference-set element when the identity is
/// absent) onto its low-weight representative. Requires |C| >= 2.
LabelingCertificate worst_labeling(const PermutationCode& code);

/// A labeling of minimal distance exactly 1, built from an involution of the
/// difference set by mapping its 2-cycles onto consecutive label pairs.
/// Absent iff the difference set has no involution (then L_min = 2).
std::optional<LabelingCertificate> distance_one_labeling(const PermutationCode& code);

/// The optimal labeling of the cyclic group generated by a single n-cycle.
/// Achieves exactly n - k with k = ceil((sqrt(4n-3)-1)/2). Requires n >= 2.
LabelingCertificate cyclic_optimal_labeling(const Permutation& generator);

}  // namespace permlab
