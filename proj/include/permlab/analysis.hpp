#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "permlab/code.hpp"

namespace permlab {

/// The distinct quotients {g h^{-1} : g,h in C, g != h}. For group codes this
/// is just C without the identity. Never contains the identity and is closed
/// under inversion. Sorted for determinism.
struct DifferenceSet {
  int degree = 0;
  bool source_is_group = false;
  std::vector<Permutation> elements;
};

/// Materializes the difference set. Requires |C| >= 2. Non-group codes larger
/// than kGroupCheckLimit are rejected (the pairwise quotient is quadratic).
DifferenceSet difference_set(const PermutationCode& code);

/// Minimal pairwise Chebyshev distance, computed as the minimum weight over
/// the difference set. Requires |C| >= 2.
int min_distance(const PermutationCode& code);

/// I(C): the involutions among the difference set. Exactly these elements can
/// be relabeled down to weight 1.
std::vector<Permutation> involution_set(const PermutationCode& code);
std::vector<Permutation> involution_set(const DifferenceSet& diff);

/// E(g) for an involution g: one edge of K_n per 2-cycle.
struct InvolutionEdges {
  Permutation involution;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
};
InvolutionEdges edge_set(const Permutation& g);

/// Minimum number of non-fixed points among the non-identity elements of a
/// group code. Requires a group with |C| >= 2.
int minimal_degree(const PermutationCode& code);

/// Histogram cycle_count -> multiplicity over the difference set; the compact
/// input the probabilistic bound needs.
std::map<int, std::int64_t> cycle_count_histogram(const DifferenceSet& diff);

}  // namespace permlab
