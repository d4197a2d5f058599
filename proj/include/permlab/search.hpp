#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permlab/labeling.hpp"

namespace permlab {

/// Simple undirected graph on vertices {1..n}, no loops or multi-edges.
class Graph {
 public:
  explicit Graph(int n);
  static Graph complete(int n);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adjacency_;
};

/// Disjoint index sets witnessing the neighboring condition: every
/// non-identity difference element sends some point of one set into the other.
struct NeighboringPair {
  std::vector<int> a;  // sorted ascending
  std::vector<int> b;  // sorted ascending

  int order() const { return static_cast<int>(a.size() + b.size()); }
};

/// Node/time limits for the backtracking searches. Zero means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;
};

/// Result of an exact search. When `exhaustive` is set the value is exact and
/// the witness (if any) re-verifies to it; otherwise `value` is the best bound
/// established before the budget ran out. `infinite` marks an exhaustive
/// search that proved no qualifying structure exists (O(C) = infinity).
struct SearchOutcome {
  std::optional<int> value;
  bool exhaustive = false;
  bool infinite = false;
  std::uint64_t nodes_explored = 0;
  std::optional<Permutation> witness_label;
  std::optional<std::vector<int>> witness_path;
  std::optional<NeighboringPair> witness_pair;
};

/// Exact L_max: the largest minimal distance over all relabelings. Top-down
/// binary descent on the target distance, each step a backtracking
/// feasibility search assigning extreme labels first; prunes a target d as
/// soon as some difference element cannot reach displacement d any more.
/// Practical exhaustively up to n ~ 9. `threads` splits the root branches.
SearchOutcome exact_lmax(const PermutationCode& code,
                         const SearchBudget& budget = {}, int threads = 1);

/// Exact L_min: the smallest minimal distance over all relabelings; always 1
/// or 2. Searches, per difference element, for a labeling squeezing all of
/// its displacement pairs to at most d.
SearchOutcome exact_lmin(const PermutationCode& code,
                         const SearchBudget& budget = {});

/// Decides L_max(C) >= 2 through the Hamiltonian-path characterization: finds
/// a path in K_n that avoids at least one edge of E(g) for every involution g
/// of the difference set. value is 1 (yes) or 0 (no); on success the witness
/// path and the labeling l(a_i) = i are attached.
SearchOutcome two_distance(const PermutationCode& code,
                           const SearchBudget& budget = {});

/// The reduction from HAMILTONIAN-PATH: transpositions of the non-edges of G
/// plus the identity. |C| = C(n,2) - |E| + 1, requires n >= 2.
PermutationCode hamiltonian_to_code(const Graph& g);

/// Backtracking Hamiltonian-path decision with path witness. Exact and
/// practical up to n ~ 15.
SearchOutcome hamiltonian_path_exists(const Graph& g,
                                      const SearchBudget& budget = {});

/// Checks the neighboring condition for disjoint A, B against the difference
/// set of the code. Rejects overlapping sets.
bool neighboring_pair_check(const PermutationCode& code,
                            const std::vector<int>& a,
                            const std::vector<int>& b);

/// Smallest |A|+|B| over neighboring pairs, enumerated by increasing order up
/// to `cap` (and |A| <= |B|, anchored to halve the symmetric enumeration).
/// Exhaustive when the full order range [2, n] was covered; then `infinite`
/// marks O(C) = infinity.
SearchOutcome min_neighboring_order(const PermutationCode& code, int cap);

/// The labeling sending A to the lowest |A| labels and B to the highest |B|:
/// achieves minimal distance >= n - |A| - |B| + 1. Rejects non-neighboring pairs.
LabelingCertificate labeling_from_pair(const PermutationCode& code,
                                       const NeighboringPair& pair);

}  // namespace permlab
