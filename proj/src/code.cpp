#include "permlab/code.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace permlab {

namespace {

bool closed_under_products(const std::vector<Permutation>& elements) {
  std::unordered_set<Permutation> set(elements.begin(), elements.end());
  for (const auto& x : elements) {
    for (const auto& y : elements) {
      if (!set.contains(compose(x, y))) return false;
    }
  }
  return true;
}

}  // namespace

PermutationCode::PermutationCode(std::vector<Permutation> elements,
                                 bool is_group)
    : is_group_(is_group), elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("a code needs at least one permutation");
  }
  degree_ = elements_.front().degree();
  for (const auto& f : elements_) {
    if (f.degree() != degree_) {
      throw std::invalid_argument("code elements must share one degree");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  contains_identity_ = contains(Permutation::identity(degree_));
  if (is_group_ && !contains_identity_) {
    throw std::logic_error("group code without identity");
  }
}

PermutationCode PermutationCode::from_elements(std::vector<Permutation> elements) {
  PermutationCode code(std::move(elements), false);
  if (code.contains_identity_ && code.size() <= kGroupCheckLimit &&
      closed_under_products(code.elements_)) {
    code.is_group_ = true;
  }
  return code;
}

bool PermutationCode::contains(const Permutation& f) const {
  return std::binary_search(elements_.begin(), elements_.end(), f);
}

PermutationCode code_from_file_elements(std::vector<Permutation> elements,
                                        bool group_hint) {
  if (!group_hint) return PermutationCode::from_elements(std::move(elements));
  PermutationCode code(std::move(elements), false);
  if (!code.contains_identity()) {
    throw std::invalid_argument("code file claims a group but lacks the identity");
  }
  if (code.size() <= kGroupCheckLimit && !closed_under_products(code.elements())) {
    throw std::invalid_argument("code file claims a group but is not closed");
  }
  code.is_group_ = true;
  return code;
}

PermutationCode closure(const std::vector<Permutation>& generators,
                        std::size_t size_cap) {
  if (generators.empty()) {
    throw std::invalid_argument("closure needs at least one generator");
  }
  const int n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw std::invalid_argument("generators must share one degree");
    }
  }
  std::unordered_set<Permutation> seen;
  std::deque<Permutation> frontier;
  seen.insert(Permutation::identity(n));
  frontier.push_back(Permutation::identity(n));
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > size_cap) {
          throw CapExceeded(seen.size(), size_cap);
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  return PermutationCode(std::move(elements), true);
}

PermutationCode cyclic_group(const Permutation& generator) {
  const int n = generator.degree();
  auto cycles = cycle_decomposition(generator);
  if (cycles.size() != 1 || static_cast<int>(cycles.front().size()) != n) {
    throw std::invalid_argument("cyclic_group needs a single n-cycle generator");
  }
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(n));
  Permutation power = Permutation::identity(n);
  for (int k = 0; k < n; ++k) {
    elements.push_back(power);
    power = compose(power, generator);
  }
  return PermutationCode(std::move(elements), true);
}

PermutationCode dihedral(int n) {
  if (n < 3) {
    throw std::invalid_argument("dihedral group needs n >= 3");
  }
  std::vector<int> rotation(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    rotation[static_cast<std::size_t>(i) - 1] = i % n + 1;
  }
  return closure({Permutation(std::move(rotation)), Permutation::reversal(n)});
}

PermutationCode agl(int p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("agl needs an odd prime");
  }
  const int a = smallest_primitive_root(p);
  // x -> x+1 and x -> ax over GF(p), with the domain shifted from [0, p-1]
  // to {1..p}.
  std::vector<int> shift(static_cast<std::size_t>(p));
  std::vector<int> scale(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) {
    const int x = i - 1;
    shift[static_cast<std::size_t>(i) - 1] = (x + 1) % p + 1;
    scale[static_cast<std::size_t>(i) - 1] =
        static_cast<int>((static_cast<long long>(a) * x) % p) + 1;
  }
  return closure({Permutation(std::move(shift)), Permutation(std::move(scale))});
}

bool is_transitive(const PermutationCode& code) {
  const int n = code.degree();
  std::vector<char> reached(static_cast<std::size_t>(n) + 1, 0);
  std::deque<int> frontier;
  reached[1] = 1;
  frontier.push_back(1);
  int count = 1;
  while (!frontier.empty() && count < n) {
    int point = frontier.front();
    frontier.pop_front();
    for (const auto& f : code.elements()) {
      int image = f(point);
      if (!reached[static_cast<std::size_t>(image)]) {
        reached[static_cast<std::size_t>(image)] = 1;
        frontier.push_back(image);
        ++count;
      }
    }
  }
  return count == n;
}

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

int smallest_primitive_root(int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("primitive root needs a prime modulus");
  }
  if (p == 2) return 1;
  for (int a = 2; a < p; ++a) {
    // a generates GF(p)* iff its order is exactly p-1.
    long long value = a;
    int order = 1;
    while (value != 1) {
      value = (value * a) % p;
      ++order;
    }
    if (order == p - 1) return a;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace permlab
