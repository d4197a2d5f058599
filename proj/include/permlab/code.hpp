#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "permlab/perm.hpp"

namespace permlab {

/// Closure verification is quadratic in |C|; codes larger than this are
/// treated as plain sets unless they were constructed as groups.
inline constexpr std::size_t kGroupCheckLimit = 3000;

/// A finite set of distinct permutations of common degree. Elements are kept
/// sorted (lexicographic on image vectors) so every downstream computation is
/// deterministic. Immutable after construction.
class PermutationCode {
 public:
  /// Deduplicates, sorts, and detects group status (closure + identity) when
  /// the quadratic check is affordable; larger inputs are treated as sets.
  static PermutationCode from_elements(std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  bool is_group() const { return is_group_; }
  bool contains_identity() const { return contains_identity_; }
  bool contains(const Permutation& f) const;

 private:
  friend PermutationCode closure(const std::vector<Permutation>&, std::size_t);
  friend PermutationCode cyclic_group(const Permutation&);
  friend PermutationCode code_from_file_elements(std::vector<Permutation>,
                                                 bool group_hint);
  friend PermutationCode relabel(const PermutationCode&, const Permutation&);

  PermutationCode(std::vector<Permutation> elements, bool is_group);

  int degree_ = 0;
  bool is_group_ = false;
  bool contains_identity_ = false;
  std::vector<Permutation> elements_;
};

/// Thrown when a closure grows past its cap; partial_size reports how many
/// distinct elements had been generated.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t partial_size, std::size_t cap)
      : std::runtime_error("group closure exceeded cap " + std::to_string(cap) +
                           " (reached " + std::to_string(partial_size) +
                           " elements)"),
        partial_size_(partial_size) {}

  std::size_t partial_size() const { return partial_size_; }

 private:
  std::size_t partial_size_;
};

/// Builds a code read from a file. When `group_hint` is set the hint is
/// verified for sets up to kGroupCheckLimit and trusted beyond that.
PermutationCode code_from_file_elements(std::vector<Permutation> elements,
                                        bool group_hint);

/// Subgroup generated by `generators`: breadth-first right-multiplication from
/// the identity with set-based deduplication.
PermutationCode closure(const std::vector<Permutation>& generators,
                        std::size_t size_cap = 1000000);

/// The group {g^k : 0 <= k < n} of a single n-cycle g. Rejects generators that
/// are not one full cycle.
PermutationCode cyclic_group(const Permutation& generator);

/// Dihedral group D_n under its natural labeling: generated by the rotation
/// (1,2,...,n) and the reversal reflection. Size 2n, requires n >= 3.
PermutationCode dihedral(int n);

/// Affine group AGL(p) = {x -> ax+b over GF(p)} under its natural labeling,
/// generated by x -> x+1 and x -> ax for the smallest primitive root a. The
/// usual domain [0, p-1] is shifted to {1..p}. Size p(p-1), p an odd prime.
PermutationCode agl(int p);

/// True iff the orbit of 1 under repeated application of the code's elements
/// is all of {1..n}.
bool is_transitive(const PermutationCode& code);

bool is_prime(long long m);
int smallest_primitive_root(int p);

}  // namespace permlab
