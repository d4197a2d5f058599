#include "permlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace permlab {

namespace {

using Clock = std::chrono::steady_clock;

// Node accounting shared by every backtracker; safe to share across workers.
struct BudgetState {
  explicit BudgetState(const SearchBudget& budget)
      : max_nodes(budget.max_nodes),
        deadline(budget.max_seconds > 0.0
                     ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(
                                              budget.max_seconds))
                     : Clock::time_point::max()) {}

  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exceeded{false};

  // Counts one node; returns false once the budget is blown.
  bool tick() {
    const std::uint64_t count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes != 0 && count > max_nodes) {
      exceeded.store(true, std::memory_order_relaxed);
    } else if ((count & 1023u) == 0 && Clock::now() > deadline) {
      exceeded.store(true, std::memory_order_relaxed);
    }
    return !exceeded.load(std::memory_order_relaxed);
  }
};

std::vector<std::vector<int>> zero_based_images(
    const std::vector<Permutation>& elements) {
  std::vector<std::vector<int>> images;
  images.reserve(elements.size());
  for (const auto& f : elements) {
    std::vector<int> row(f.images().size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = f.images()[i] - 1;
    images.push_back(std::move(row));
  }
  return images;
}

// Feasibility search for "some labeling displaces every difference element by
// at least d". Assigns label values extremes-first (1, n, 2, n-1, ...); after
// each assignment every difference element must either already have a pair at
// displacement >= d or still own a pair that could reach d with the remaining
// label window.
class LmaxFeasibility {
 public:
  LmaxFeasibility(int n, int d,
                  const std::vector<std::vector<std::pair<int, int>>>& pairs,
                  BudgetState& budget)
      : n_(n),
        d_(d),
        pairs_(pairs),
        budget_(budget),
        label_of_(static_cast<std::size_t>(n), -1) {}

  // Explores the subtree rooted at "label 1 goes to point root". Returns true
  // when a witness was found; aborted() distinguishes budget exhaustion.
  bool run_root(int root) {
    label_of_[static_cast<std::size_t>(root)] = 0;
    first_point_ = root;
    bool ok = budget_.tick() && viable(1) && dfs(1);
    if (!budget_.tick()) aborted_ = true;
    label_of_[static_cast<std::size_t>(root)] = -1;
    return ok;
  }

  bool aborted() const { return aborted_; }

  Permutation witness() const {
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (int q = 0; q < n_; ++q) {
      images[static_cast<std::size_t>(q)] =
          witness_labels_[static_cast<std::size_t>(q)] + 1;
    }
    return Permutation(std::move(images));
  }

 private:
  bool dfs(int step) {
    if (step == n_) {
      witness_labels_ = label_of_;
      return true;
    }
    const int value = (step % 2 == 0) ? step / 2 : n_ - 1 - step / 2;
    for (int q = 0; q < n_; ++q) {
      if (label_of_[static_cast<std::size_t>(q)] != -1) continue;
      // Reversal symmetry: only explore labelings with l^{-1}(1) < l^{-1}(n).
      if (value == n_ - 1 && q < first_point_) continue;
      label_of_[static_cast<std::size_t>(q)] = value;
      if (!budget_.tick()) {
        aborted_ = true;
        label_of_[static_cast<std::size_t>(q)] = -1;
        return false;
      }
      if (viable(step + 1) && dfs(step + 1)) return true;
      label_of_[static_cast<std::size_t>(q)] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  // `assigned` labels are consumed from both ends, so the unused ones form the
  // window [low, high].
  bool viable(int assigned) const {
    const int low = (assigned + 1) / 2;
    const int high = n_ - 1 - assigned / 2;
    for (const auto& element_pairs : pairs_) {
      bool alive = false;
      for (const auto& [i, j] : element_pairs) {
        const int li = label_of_[static_cast<std::size_t>(i)];
        const int lj = label_of_[static_cast<std::size_t>(j)];
        int reach;
        if (li >= 0 && lj >= 0) {
          reach = std::abs(li - lj);
        } else if (li >= 0) {
          reach = std::max(li - low, high - li);
        } else if (lj >= 0) {
          reach = std::max(lj - low, high - lj);
        } else {
          reach = high - low;
        }
        if (reach >= d_) {
          alive = true;
          break;
        }
      }
      if (!alive) return false;
    }
    return true;
  }

  int n_;
  int d_;
  const std::vector<std::vector<std::pair<int, int>>>& pairs_;
  BudgetState& budget_;
  std::vector<int> label_of_;
  std::vector<int> witness_labels_;
  int first_point_ = 0;
  bool aborted_ = false;
};

enum class Feasibility { yes, no, aborted };

struct FeasibilityResult {
  Feasibility state = Feasibility::no;
  std::optional<Permutation> witness;
};

FeasibilityResult lmax_feasible(
    int n, int d, const std::vector<std::vector<std::pair<int, int>>>& pairs,
    BudgetState& budget, int threads) {
  const int branch_count = n;
  if (threads <= 1) {
    LmaxFeasibility search(n, d, pairs, budget);
    for (int root = 0; root < branch_count; ++root) {
      if (search.run_root(root)) {
        return {Feasibility::yes, search.witness()};
      }
      if (search.aborted()) return {Feasibility::aborted, std::nullopt};
    }
    return {Feasibility::no, std::nullopt};
  }

  // Root branches (which point receives label 1) are independent; workers pull
  // them from a shared index. The witness from the smallest succeeding branch
  // is reported so the outcome does not depend on scheduling.
  std::atomic<int> next_branch{0};
  std::atomic<int> best_branch{branch_count};
  std::atomic<bool> any_aborted{false};
  std::vector<std::optional<Permutation>> witnesses(
      static_cast<std::size_t>(branch_count));
  std::mutex witness_mutex;

  auto worker = [&]() {
    LmaxFeasibility search(n, d, pairs, budget);
    while (true) {
      const int branch = next_branch.fetch_add(1);
      if (branch >= branch_count) return;
      if (branch > best_branch.load()) continue;
      if (search.run_root(branch)) {
        std::scoped_lock lock(witness_mutex);
        witnesses[static_cast<std::size_t>(branch)] = search.witness();
        int current = best_branch.load();
        while (branch < current &&
               !best_branch.compare_exchange_weak(current, branch)) {
        }
      } else if (search.aborted()) {
        any_aborted.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  const int worker_count = std::min(threads, branch_count);
  pool.reserve(static_cast<std::size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  const int winner = best_branch.load();
  if (winner < branch_count) {
    return {Feasibility::yes, witnesses[static_cast<std::size_t>(winner)]};
  }
  if (any_aborted.load()) return {Feasibility::aborted, std::nullopt};
  return {Feasibility::no, std::nullopt};
}

std::vector<std::vector<std::pair<int, int>>> displacement_pairs(
    const std::vector<std::vector<int>>& diff0) {
  std::vector<std::vector<std::pair<int, int>>> pairs;
  pairs.reserve(diff0.size());
  for (const auto& u : diff0) {
    std::vector<std::pair<int, int>> element_pairs;
    for (int i = 0; i < static_cast<int>(u.size()); ++i) {
      if (u[static_cast<std::size_t>(i)] != i) {
        element_pairs.emplace_back(i, u[static_cast<std::size_t>(i)]);
      }
    }
    pairs.push_back(std::move(element_pairs));
  }
  return pairs;
}

}  // namespace

SearchOutcome exact_lmax(const PermutationCode& code, const SearchBudget& budget,
                         int threads) {
  const DifferenceSet diff = difference_set(code);
  const int n = code.degree();
  const auto pairs = displacement_pairs(zero_based_images(diff.elements));
  BudgetState budget_state(budget);

  SearchOutcome outcome;
  // Distance 1 is free: distinct permutations stay distinct under any
  // labeling, so the identity already witnesses d >= 1.
  int confirmed = 1;
  Permutation witness = Permutation::identity(n);
  bool aborted = false;

  int lo = 1;
  int hi = n - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    const FeasibilityResult result =
        lmax_feasible(n, mid, pairs, budget_state, threads);
    if (result.state == Feasibility::yes) {
      lo = mid;
      confirmed = mid;
      witness = *result.witness;
    } else if (result.state == Feasibility::no) {
      hi = mid - 1;
    } else {
      aborted = true;
      break;
    }
  }

  outcome.value = confirmed;
  outcome.exhaustive = !aborted;
  outcome.witness_label = witness;
  outcome.nodes_explored = budget_state.nodes.load();
  return outcome;
}

namespace {

// Tries to label the support of one difference element so that every
// displacement pair lands within d: equivalently, embeds each of its cycles
// as a closed walk of distinct labels stepping by at most d.
class SqueezeSearch {
 public:
  SqueezeSearch(int n, int d, const std::vector<std::vector<int>>& cycles,
                BudgetState& budget)
      : n_(n), d_(d), budget_(budget),
        label_of_(static_cast<std::size_t>(n) + 1, 0),
        label_used_(static_cast<std::size_t>(n) + 1, 0) {
    for (const auto& cycle : cycles) {
      if (cycle.size() < 2) continue;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        sequence_.push_back(cycle[i]);
        cycle_start_.push_back(i == 0);
        cycle_head_.push_back(cycle.front());
        closes_cycle_.push_back(i + 1 == cycle.size());
      }
    }
  }

  std::optional<Permutation> run() {
    if (!dfs(0)) return std::nullopt;
    // Fixed points of the element are unconstrained; hand them the leftover
    // labels in order.
    int next = 1;
    std::vector<int> images(static_cast<std::size_t>(n_));
    for (int point = 1; point <= n_; ++point) {
      int label = label_of_[static_cast<std::size_t>(point)];
      if (label == 0) {
        while (label_used_[static_cast<std::size_t>(next)]) ++next;
        label = next;
        label_used_[static_cast<std::size_t>(next)] = 1;
      }
      images[static_cast<std::size_t>(point) - 1] = label;
    }
    return Permutation(std::move(images));
  }

  bool aborted() const { return aborted_; }

 private:
  bool dfs(std::size_t idx) {
    if (idx == sequence_.size()) return true;
    const int point = sequence_[idx];
    const bool starts = cycle_start_[idx];
    const int prev_label =
        starts ? 0 : label_of_[static_cast<std::size_t>(sequence_[idx - 1])];
    const int lo = starts ? 1 : std::max(1, prev_label - d_);
    const int hi = starts ? n_ : std::min(n_, prev_label + d_);
    for (int label = lo; label <= hi; ++label) {
      if (label_used_[static_cast<std::size_t>(label)]) continue;
      if (closes_cycle_[idx]) {
        const int head_label =
            label_of_[static_cast<std::size_t>(cycle_head_[idx])];
        if (std::abs(label - head_label) > d_) continue;
      }
      label_of_[static_cast<std::size_t>(point)] = label;
      label_used_[static_cast<std::size_t>(label)] = 1;
      if (!budget_.tick()) {
        aborted_ = true;
      } else if (dfs(idx + 1)) {
        return true;
      }
      label_of_[static_cast<std::size_t>(point)] = 0;
      label_used_[static_cast<std::size_t>(label)] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  int n_;
  int d_;
  BudgetState& budget_;
  std::vector<int> sequence_;
  std::vector<char> cycle_start_;
  std::vector<int> cycle_head_;
  std::vector<char> closes_cycle_;
  std::vector<int> label_of_;
  std::vector<char> label_used_;
  bool aborted_ = false;
};

}  // namespace

SearchOutcome exact_lmin(const PermutationCode& code, const SearchBudget& budget) {
  const DifferenceSet diff = difference_set(code);
  const int n = code.degree();
  BudgetState budget_state(budget);
  SearchOutcome outcome;

  // The minimum over all labelings equals the smallest d some single
  // difference element can be squeezed to; d = 2 always terminates the loop.
  for (int d = 1; d <= 2; ++d) {
    for (const auto& element : diff.elements) {
      SqueezeSearch search(n, d, cycle_decomposition(element), budget_state);
      auto witness = search.run();
      if (witness) {
        outcome.value = d;
        outcome.exhaustive = true;
        outcome.witness_label = std::move(witness);
        outcome.nodes_explored = budget_state.nodes.load();
        return outcome;
      }
      if (search.aborted()) {
        outcome.exhaustive = false;
        outcome.nodes_explored = budget_state.nodes.load();
        return outcome;
      }
    }
  }
  throw std::logic_error("no labeling of distance <= 2 found");
}

namespace {

// Path search over the constrained vertices, with interchangeable blanks
// standing in for the vertices no involution touches. A blank between two
// constrained vertices breaks their adjacency; leading, trailing, and doubled
// blanks are never needed, so those branches are skipped.
class TwoDistanceSearch {
 public:
  TwoDistanceSearch(int n, const std::vector<InvolutionEdges>& involutions,
                    BudgetState& budget)
      : n_(n), budget_(budget) {
    std::vector<char> constrained(static_cast<std::size_t>(n) + 1, 0);
    total_.reserve(involutions.size());
    for (std::size_t gi = 0; gi < involutions.size(); ++gi) {
      total_.push_back(static_cast<int>(involutions[gi].edges.size()));
      for (const auto& [u, v] : involutions[gi].edges) {
        constrained[static_cast<std::size_t>(u)] = 1;
        constrained[static_cast<std::size_t>(v)] = 1;
        incidence_[{u, v}].push_back(static_cast<int>(gi));
      }
    }
    for (int v = 1; v <= n; ++v) {
      if (constrained[static_cast<std::size_t>(v)]) vertices_.push_back(v);
    }
    adjacent_.assign(involutions.size(), 0);
    used_.assign(static_cast<std::size_t>(n) + 1, 0);
    blanks_left_ = n - static_cast<int>(vertices_.size());
  }

  std::optional<std::vector<int>> run() {
    if (!dfs()) return std::nullopt;
    // Blanks and the unplaced tail take the unconstrained vertices in order.
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n_));
    std::vector<char> in_path(static_cast<std::size_t>(n_) + 1, 0);
    for (int token : tokens_) {
      if (token != 0) {
        path.push_back(token);
        in_path[static_cast<std::size_t>(token)] = 1;
      } else {
        path.push_back(0);
      }
    }
    int next = 1;
    auto next_free = [&]() {
      while (in_path[static_cast<std::size_t>(next)] ||
             std::find(vertices_.begin(), vertices_.end(), next) !=
                 vertices_.end()) {
        ++next;
      }
      return next;
    };
    for (int& entry : path) {
      if (entry == 0) {
        entry = next_free();
        in_path[static_cast<std::size_t>(entry)] = 1;
      }
    }
    for (int v = 1; v <= n_; ++v) {
      if (!in_path[static_cast<std::size_t>(v)] &&
          std::find(path.begin(), path.end(), v) == path.end()) {
        path.push_back(v);
      }
    }
    return path;
  }

  bool aborted() const { return aborted_; }

 private:
  bool dfs() {
    if (placed_ == static_cast<int>(vertices_.size())) return true;
    const int prev = tokens_.empty() ? 0 : tokens_.back();
    for (int vertex : vertices_) {
      if (used_[static_cast<std::size_t>(vertex)]) continue;
      if (place_vertex(vertex, prev)) return true;
      if (aborted_) return false;
    }
    // A blank only matters directly after a constrained vertex; leading,
    // trailing, and doubled blanks never separate anything new.
    if (blanks_left_ > 0 && prev != 0) {
      --blanks_left_;
      tokens_.push_back(0);
      bool found = false;
      if (!budget_.tick()) {
        aborted_ = true;
      } else {
        found = dfs();
      }
      if (found) return true;
      tokens_.pop_back();
      ++blanks_left_;
    }
    return false;
  }

  // Tries one constrained vertex at the end of the path; returns true when a
  // full solution was found below it. On success the placement is kept so the
  // witness can be read off.
  bool place_vertex(int vertex, int prev) {
    std::vector<int> bumped;
    if (prev != 0) {
      auto it = incidence_.find(std::minmax(prev, vertex));
      if (it != incidence_.end()) {
        for (int gi : it->second) {
          if (adjacent_[static_cast<std::size_t>(gi)] + 1 ==
              total_[static_cast<std::size_t>(gi)]) {
            // This edge would put all of E(g) inside the path.
            for (int undo : bumped) --adjacent_[static_cast<std::size_t>(undo)];
            return false;
          }
          ++adjacent_[static_cast<std::size_t>(gi)];
          bumped.push_back(gi);
        }
      }
    }
    used_[static_cast<std::size_t>(vertex)] = 1;
    tokens_.push_back(vertex);
    ++placed_;
    bool found = false;
    if (!budget_.tick()) {
      aborted_ = true;
    } else {
      found = dfs();
    }
    if (found) return true;
    --placed_;
    tokens_.pop_back();
    used_[static_cast<std::size_t>(vertex)] = 0;
    for (int undo : bumped) --adjacent_[static_cast<std::size_t>(undo)];
    return false;
  }

  int n_;
  BudgetState& budget_;
  std::vector<int> vertices_;
  std::map<std::pair<int, int>, std::vector<int>> incidence_;
  std::vector<int> total_;
  std::vector<int> adjacent_;
  std::vector<char> used_;
  std::vector<int> tokens_;
  int placed_ = 0;
  int blanks_left_ = 0;
  bool aborted_ = false;
};

Permutation labeling_from_path(const std::vector<int>& path) {
  std::vector<int> images(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    images[static_cast<std::size_t>(path[i]) - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(images));
}

}  // namespace

SearchOutcome two_distance(const PermutationCode& code,
                           const SearchBudget& budget) {
  const DifferenceSet diff = difference_set(code);
  const int n = code.degree();
  SearchOutcome outcome;

  std::vector<InvolutionEdges> involutions;
  for (const auto& g : involution_set(diff)) {
    involutions.push_back(edge_set(g));
  }
  if (involutions.empty()) {
    // Non-involutions carry a cycle of length >= 3 and keep weight >= 2 under
    // every labeling, so any path works.
    std::vector<int> path(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = i + 1;
    outcome.value = 1;
    outcome.exhaustive = true;
    outcome.witness_label = labeling_from_path(path);
    outcome.witness_path = std::move(path);
    return outcome;
  }

  BudgetState budget_state(budget);
  TwoDistanceSearch search(n, involutions, budget_state);
  auto path = search.run();
  outcome.nodes_explored = budget_state.nodes.load();
  if (search.aborted()) {
    outcome.exhaustive = false;
    return outcome;
  }
  outcome.exhaustive = true;
  if (path) {
    outcome.value = 1;
    outcome.witness_label = labeling_from_path(*path);
    outcome.witness_path = std::move(path);
  } else {
    outcome.value = 0;
  }
  return outcome;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) {
    throw std::invalid_argument("edge endpoints must be distinct vertices in {1..n}");
  }
  if (has_edge(u, v)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  }
  adjacency_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(v - 1)] = 1;
  adjacency_[static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(u - 1)] = 1;
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return adjacency_[static_cast<std::size_t>(u - 1) *
                        static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(v - 1)] != 0;
}

PermutationCode hamiltonian_to_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument("reduction needs at least two vertices");
  }
  std::vector<Permutation> elements;
  elements.push_back(Permutation::identity(n));
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!g.has_edge(u, v)) {
        elements.push_back(Permutation::transposition(n, u, v));
      }
    }
  }
  return PermutationCode::from_elements(std::move(elements));
}

namespace {

class HamiltonianSearch {
 public:
  HamiltonianSearch(const Graph& g, BudgetState& budget)
      : graph_(g), budget_(budget),
        visited_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {}

  std::optional<std::vector<int>> run() {
    for (int start = 1; start <= graph_.vertex_count(); ++start) {
      path_.clear();
      std::fill(visited_.begin(), visited_.end(), 0);
      visited_[static_cast<std::size_t>(start)] = 1;
      path_.push_back(start);
      if (!budget_.tick()) {
        aborted_ = true;
        return std::nullopt;
      }
      if (dfs()) return path_;
      if (aborted_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }

 private:
  bool dfs() {
    if (static_cast<int>(path_.size()) == graph_.vertex_count()) return true;
    const int current = path_.back();
    for (int next = 1; next <= graph_.vertex_count(); ++next) {
      if (visited_[static_cast<std::size_t>(next)] ||
          !graph_.has_edge(current, next)) {
        continue;
      }
      visited_[static_cast<std::size_t>(next)] = 1;
      path_.push_back(next);
      if (!budget_.tick()) {
        aborted_ = true;
      } else if (dfs()) {
        return true;
      }
      path_.pop_back();
      visited_[static_cast<std::size_t>(next)] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& graph_;
  BudgetState& budget_;
  std::vector<char> visited_;
  std::vector<int> path_;
  bool aborted_ = false;
};

}  // namespace

SearchOutcome hamiltonian_path_exists(const Graph& g, const SearchBudget& budget) {
  BudgetState budget_state(budget);
  HamiltonianSearch search(g, budget_state);
  auto path = search.run();
  SearchOutcome outcome;
  outcome.nodes_explored = budget_state.nodes.load();
  if (search.aborted()) {
    outcome.exhaustive = false;
    return outcome;
  }
  outcome.exhaustive = true;
  outcome.value = path ? 1 : 0;
  outcome.witness_path = std::move(path);
  return outcome;
}

namespace {

std::vector<int> checked_index_set(std::vector<int> values, int n,
                                   const char* which) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int v : values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument(std::string(which) + " contains " +
                                  std::to_string(v) + " outside {1.." +
                                  std::to_string(n) + "}");
    }
  }
  return values;
}

bool pair_check_against(const DifferenceSet& diff, const std::vector<int>& a,
                        const std::vector<int>& b) {
  std::vector<char> in_a(static_cast<std::size_t>(diff.degree) + 1, 0);
  std::vector<char> in_b(static_cast<std::size_t>(diff.degree) + 1, 0);
  for (int v : a) in_a[static_cast<std::size_t>(v)] = 1;
  for (int v : b) in_b[static_cast<std::size_t>(v)] = 1;
  for (const auto& f : diff.elements) {
    bool hit = false;
    for (int v : a) {
      if (in_b[static_cast<std::size_t>(f(v))]) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      for (int v : b) {
        if (in_a[static_cast<std::size_t>(f(v))]) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool neighboring_pair_check(const PermutationCode& code,
                            const std::vector<int>& a,
                            const std::vector<int>& b) {
  const int n = code.degree();
  const auto set_a = checked_index_set(a, n, "set A");
  const auto set_b = checked_index_set(b, n, "set B");
  std::vector<int> overlap;
  std::set_intersection(set_a.begin(), set_a.end(), set_b.begin(), set_b.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw std::invalid_argument("neighboring sets must be disjoint");
  }
  return pair_check_against(difference_set(code), set_a, set_b);
}

namespace {

// Lexicographic k-subset enumeration over a pool of candidates.
bool next_combination(std::vector<int>& idx, int pool_size) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < pool_size - (k - i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

SearchOutcome min_neighboring_order(const PermutationCode& code, int cap) {
  const DifferenceSet diff = difference_set(code);
  const int n = code.degree();
  const int limit = std::min(cap, n);
  SearchOutcome outcome;

  for (int order = 2; order <= limit; ++order) {
    for (int size_a = 1; size_a <= order / 2; ++size_a) {
      const int size_b = order - size_a;
      std::vector<int> pick_a(static_cast<std::size_t>(size_a));
      for (int i = 0; i < size_a; ++i) pick_a[static_cast<std::size_t>(i)] = i;
      do {
        std::vector<int> set_a;
        std::vector<char> taken(static_cast<std::size_t>(n) + 1, 0);
        for (int i : pick_a) {
          set_a.push_back(i + 1);
          taken[static_cast<std::size_t>(i) + 1] = 1;
        }
        std::vector<int> pool;
        for (int v = 1; v <= n; ++v) {
          if (!taken[static_cast<std::size_t>(v)]) pool.push_back(v);
        }
        std::vector<int> pick_b(static_cast<std::size_t>(size_b));
        for (int i = 0; i < size_b; ++i) pick_b[static_cast<std::size_t>(i)] = i;
        do {
          std::vector<int> set_b;
          for (int i : pick_b) set_b.push_back(pool[static_cast<std::size_t>(i)]);
          // (A,B) and (B,A) witness the same order; when the sizes tie, keep
          // the variant whose minimum lies in A.
          if (size_a == size_b && set_b.front() < set_a.front()) continue;
          ++outcome.nodes_explored;
          if (pair_check_against(diff, set_a, set_b)) {
            outcome.value = order;
            outcome.exhaustive = true;
            outcome.witness_pair = NeighboringPair{set_a, set_b};
            return outcome;
          }
        } while (next_combination(pick_b, static_cast<int>(pool.size())));
      } while (next_combination(pick_a, n));
    }
  }

  if (limit >= n) {
    outcome.exhaustive = true;
    outcome.infinite = true;
  }
  return outcome;
}

LabelingCertificate labeling_from_pair(const PermutationCode& code,
                                       const NeighboringPair& pair) {
  if (!neighboring_pair_check(code, pair.a, pair.b)) {
    throw std::invalid_argument("the sets fail the neighboring condition");
  }
  const int n = code.degree();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  int next = 1;
  for (int v : pair.a) images[static_cast<std::size_t>(v) - 1] = next++;
  int top = n - static_cast<int>(pair.b.size()) + 1;
  for (int v : pair.b) images[static_cast<std::size_t>(v) - 1] = top++;
  for (int v = 1; v <= n; ++v) {
    if (images[static_cast<std::size_t>(v) - 1] == 0) {
      images[static_cast<std::size_t>(v) - 1] = next++;
    }
  }
  const Permutation label{std::move(images)};
  const int achieved = min_distance(relabel(code, label));
  if (achieved < n - pair.order() + 1) {
    throw std::logic_error("neighboring labeling fell short of its guarantee");
  }
  return LabelingCertificate{label, achieved, LabelingKind::from_pair};
}

}  // namespace permlab
