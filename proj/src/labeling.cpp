#include "permlab/labeling.hpp"

#include <algorithm>

#include "permlab/bounds.hpp"

namespace permlab {

std::string_view to_string(LabelingKind kind) {
  switch (kind) {
    case LabelingKind::worst: return "worst";
    case LabelingKind::distance_one: return "distance-one";
    case LabelingKind::cyclic_optimal: return "cyclic-optimal";
    case LabelingKind::from_pair: return "from-pair";
    case LabelingKind::searched: return "searched";
  }
  return "unknown";
}

std::optional<LabelingKind> labeling_kind_from_string(std::string_view text) {
  if (text == "worst") return LabelingKind::worst;
  if (text == "distance-one") return LabelingKind::distance_one;
  if (text == "cyclic-optimal") return LabelingKind::cyclic_optimal;
  if (text == "from-pair") return LabelingKind::from_pair;
  if (text == "searched") return LabelingKind::searched;
  return std::nullopt;
}

PermutationCode relabel(const PermutationCode& code, const Permutation& label) {
  if (label.degree() != code.degree()) {
    throw std::invalid_argument("relabel: degree mismatch");
  }
  std::vector<Permutation> conjugated;
  conjugated.reserve(code.size());
  for (const auto& f : code.elements()) {
    conjugated.push_back(conjugate(label, f));
  }
  // Conjugation is an automorphism of S_n, so group status carries over.
  return PermutationCode(std::move(conjugated), code.is_group());
}

Permutation snake_cycle(int n) {
  if (n < 1) throw std::invalid_argument("snake cycle needs n >= 1");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n));
  entries.push_back(1);
  if (n >= 2) entries.push_back(2);
  for (int v = 4; v <= n; v += 2) entries.push_back(v);
  for (int v = (n % 2 == 1) ? n : n - 1; v >= 3; v -= 2) entries.push_back(v);
  return Permutation::from_cycles(n, {entries});
}

Permutation low_weight_representative(const CycleType& type) {
  const int n = type.degree();
  if (n < 1 || std::any_of(type.lengths.begin(), type.lengths.end(),
                           [](int len) { return len < 1; })) {
    throw std::invalid_argument("cycle type must consist of positive lengths");
  }
  std::vector<int> lengths = type.lengths;
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  std::vector<std::vector<int>> cycles;
  int offset = 0;
  for (int len : lengths) {
    const Permutation snake = snake_cycle(len);
    std::vector<int> block = cycle_decomposition(snake).front();
    for (int& v : block) v += offset;
    cycles.push_back(std::move(block));
    offset += len;
  }
  return Permutation::from_cycles(n, cycles);
}

Permutation conjugator_onto(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("conjugator_onto: degree mismatch");
  }
  if (cycle_type(f) != cycle_type(g)) {
    throw std::invalid_argument("conjugator_onto: cycle types differ");
  }
  auto order_cycles = [](std::vector<std::vector<int>> cycles) {
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) {
                       if (a.size() != b.size()) return a.size() > b.size();
                       return a.front() < b.front();
                     });
    return cycles;
  };
  const auto from = order_cycles(cycle_decomposition(f));
  const auto to = order_cycles(cycle_decomposition(g));
  std::vector<int> images(static_cast<std::size_t>(f.degree()), 0);
  for (std::size_t c = 0; c < from.size(); ++c) {
    for (std::size_t i = 0; i < from[c].size(); ++i) {
      images[static_cast<std::size_t>(from[c][i]) - 1] = to[c][i];
    }
  }
  return Permutation(std::move(images));
}

LabelingCertificate worst_labeling(const PermutationCode& code) {
  if (code.size() < 2) {
    throw std::invalid_argument("worst labeling needs at least two codewords");
  }
  const Permutation id = Permutation::identity(code.degree());
  Permutation pivot = id;
  if (code.contains_identity()) {
    // Elements are sorted, so the first non-identity one is canonical.
    for (const auto& f : code.elements()) {
      if (f != id) {
        pivot = f;
        break;
      }
    }
  } else {
    pivot = difference_set(code).elements.front();
  }
  const Permutation target = low_weight_representative(cycle_type(pivot));
  const Permutation label = conjugator_onto(pivot, target);
  const int achieved = min_distance(relabel(code, label));
  return LabelingCertificate{label, achieved, LabelingKind::worst};
}

std::optional<LabelingCertificate> distance_one_labeling(
    const PermutationCode& code) {
  if (code.size() < 2) {
    throw std::invalid_argument("distance-one labeling needs at least two codewords");
  }
  const auto involutions = involution_set(code);
  if (involutions.empty()) return std::nullopt;
  const Permutation& pivot = involutions.front();
  const int n = code.degree();
  // Send the j-th 2-cycle to the adjacent pair {2j-1, 2j}; fixed points take
  // the remaining labels in order.
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  int next_label = 1;
  for (const auto& [u, v] : edge_set(pivot).edges) {
    images[static_cast<std::size_t>(u) - 1] = next_label++;
    images[static_cast<std::size_t>(v) - 1] = next_label++;
  }
  for (int i = 1; i <= n; ++i) {
    if (images[static_cast<std::size_t>(i) - 1] == 0) {
      images[static_cast<std::size_t>(i) - 1] = next_label++;
    }
  }
  const Permutation label{std::move(images)};
  const int achieved = min_distance(relabel(code, label));
  if (achieved != 1) {
    throw std::logic_error("distance-one construction failed to reach 1");
  }
  return LabelingCertificate{label, achieved, LabelingKind::distance_one};
}

namespace {

// The three labeling rules for a transitive cyclic group written as the cycle
// (a_1,...,a_n): prefix labels 1..k in order, the top labels n-k+1..n at the
// triangular positions m(2k-m+1)/2 + 1, and the middle labels on the leftover
// positions in ascending order.
Permutation cyclic_rules_labeling(const std::vector<int>& cycle, long long k) {
  const int n = static_cast<int>(cycle.size());
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  auto assign = [&](long long position, int value) {
    const int point = cycle[static_cast<std::size_t>(position) - 1];
    images[static_cast<std::size_t>(point) - 1] = value;
  };
  for (long long i = 1; i <= k; ++i) {
    assign(i, static_cast<int>(i));
  }
  for (long long i = n - k + 1; i <= n; ++i) {
    const long long m = n + 1 - i;
    assign(m * (2 * k - m + 1) / 2 + 1, static_cast<int>(i));
  }
  int next_label = static_cast<int>(k) + 1;
  for (long long j = 1; j <= n; ++j) {
    const int point = cycle[static_cast<std::size_t>(j) - 1];
    if (images[static_cast<std::size_t>(point) - 1] == 0) {
      images[static_cast<std::size_t>(point) - 1] = next_label++;
    }
  }
  return Permutation(std::move(images));
}

}  // namespace

LabelingCertificate cyclic_optimal_labeling(const Permutation& generator) {
  const int n = generator.degree();
  if (n < 2) {
    throw std::invalid_argument("cyclic optimal labeling needs n >= 2");
  }
  auto cycles = cycle_decomposition(generator);
  if (cycles.size() != 1) {
    throw std::invalid_argument("cyclic optimal labeling needs a single n-cycle");
  }
  const long long k = cyclic_k(n);
  const int target = static_cast<int>(n - k);
  const PermutationCode group = cyclic_group(generator);

  // The rules assume the orientation used in their derivation; if the given
  // generator has the opposite one, its inverse does not.
  for (const Permutation& candidate : {generator, inverse(generator)}) {
    const auto cycle = cycle_decomposition(candidate).front();
    const Permutation label = cyclic_rules_labeling(cycle, k);
    const int achieved = min_distance(relabel(group, label));
    if (achieved >= target) {
      return LabelingCertificate{label, achieved, LabelingKind::cyclic_optimal};
    }
  }
  throw std::logic_error("cyclic labeling rules missed the target distance");
}

}  // namespace permlab
