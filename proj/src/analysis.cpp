#include "permlab/analysis.hpp"

#include <algorithm>
#include <unordered_set>

namespace permlab {

DifferenceSet difference_set(const PermutationCode& code) {
  if (code.size() < 2) {
    throw std::invalid_argument("difference set needs at least two codewords");
  }
  DifferenceSet diff;
  diff.degree = code.degree();
  diff.source_is_group = code.is_group();
  if (code.is_group()) {
    const Permutation id = Permutation::identity(code.degree());
    for (const auto& g : code.elements()) {
      if (g != id) diff.elements.push_back(g);
    }
    return diff;
  }
  if (code.size() > kGroupCheckLimit) {
    throw std::invalid_argument(
        "difference set of a non-group code is limited to " +
        std::to_string(kGroupCheckLimit) + " codewords");
  }
  std::vector<Permutation> inverses;
  inverses.reserve(code.size());
  for (const auto& h : code.elements()) inverses.push_back(inverse(h));
  std::unordered_set<Permutation> seen;
  for (const auto& g : code.elements()) {
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (g == code.elements()[j]) continue;
      seen.insert(compose(g, inverses[j]));
    }
  }
  diff.elements.assign(seen.begin(), seen.end());
  std::sort(diff.elements.begin(), diff.elements.end());
  return diff;
}

int min_distance(const PermutationCode& code) {
  if (code.size() < 2) {
    throw std::invalid_argument("minimal distance needs at least two codewords");
  }
  const DifferenceSet diff = difference_set(code);
  int best = code.degree();
  for (const auto& f : diff.elements) {
    best = std::min(best, weight(f));
  }
  return best;
}

std::vector<Permutation> involution_set(const DifferenceSet& diff) {
  std::vector<Permutation> involutions;
  for (const auto& f : diff.elements) {
    if (is_involution(f)) involutions.push_back(f);
  }
  return involutions;
}

std::vector<Permutation> involution_set(const PermutationCode& code) {
  return involution_set(difference_set(code));
}

InvolutionEdges edge_set(const Permutation& g) {
  if (!is_involution(g)) {
    throw std::invalid_argument("edge set is defined for involutions only");
  }
  InvolutionEdges result{g, {}};
  for (int u = 1; u <= g.degree(); ++u) {
    const int v = g(u);
    if (u < v) result.edges.emplace_back(u, v);
  }
  return result;
}

int minimal_degree(const PermutationCode& code) {
  if (!code.is_group() || code.size() < 2) {
    throw std::invalid_argument("minimal degree needs a group with |C| >= 2");
  }
  int best = code.degree();
  const Permutation id = Permutation::identity(code.degree());
  for (const auto& g : code.elements()) {
    if (g == id) continue;
    int moved = 0;
    for (int i = 1; i <= g.degree(); ++i) {
      if (g(i) != i) ++moved;
    }
    best = std::min(best, moved);
  }
  return best;
}

std::map<int, std::int64_t> cycle_count_histogram(const DifferenceSet& diff) {
  std::map<int, std::int64_t> histogram;
  for (const auto& f : diff.elements) {
    ++histogram[cycle_count(f)];
  }
  return histogram;
}

}  // namespace permlab
