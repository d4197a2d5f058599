#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

/// A permutation of {1..n}, stored by its image vector: images()[i-1] is f(i).
/// Values are immutable after construction and safe to share across threads.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {1..degree}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The order-reversing map i -> n+1-i.
  static Permutation reversal(int n);
  static Permutation transposition(int n, int u, int v);
  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of i, 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  /// Lexicographic order on image vectors (used for canonical element order).
  std::strong_ordering operator<=>(const Permutation& other) const;

 private:
  std::vector<int> images_;
};

/// Multiset of cycle lengths, kept sorted descending. Fixed points count as
/// length-1 cycles, so cycle_count() matches the exponent conventions used by
/// the probabilistic bound and the cycle-index polynomial.
struct CycleType {
  std::vector<int> lengths;

  int cycle_count() const { return static_cast<int>(lengths.size()); }
  int degree() const;

  friend bool operator==(const CycleType& a, const CycleType& b) = default;
};

/// (f*g)(i) = f(g(i)). Degrees must match.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
/// l * f * l^{-1}: relabels the entries of f's cycles through l.
Permutation conjugate(const Permutation& l, const Permutation& f);

/// Chebyshev distance max_i |f(i) - g(i)|. Right invariant but not left
/// invariant, which is what makes relabeling change distances at all.
int linf_distance(const Permutation& f, const Permutation& g);
/// Distance from the identity.
int weight(const Permutation& f);

/// Disjoint cycles covering {1..n}, fixed points included as 1-cycles.
/// Canonical form: each cycle starts at its smallest element, cycles sorted
/// by first element.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& f);
CycleType cycle_type(const Permutation& f);
int cycle_count(const Permutation& f);

/// True iff f has order exactly 2.
bool is_involution(const Permutation& f);

/// Thrown by parse_permutation; `kind` distinguishes the failure modes.
class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    malformed,
    out_of_range,
    duplicate_value,
    missing_value,
    degree_mismatch,
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses vector notation ("2 3 1") or cycle notation ("(1 3 2)(4)").
/// For vector notation the degree is the token count; for cycle notation it is
/// `degree_hint` when positive, otherwise the largest point mentioned.
Permutation parse_permutation(std::string_view text, int degree_hint = 0);

/// Space-separated image vector, e.g. "2 3 1".
std::string format_vector(const Permutation& f);
/// Canonical cycle notation including fixed points, e.g. "(1 2 3)(4)".
std::string format_cycles(const Permutation& f);

std::size_t hash_value(const Permutation& f);

}  // namespace permlab

template <>
struct std::hash<permlab::Permutation> {
  std::size_t operator()(const permlab::Permutation& f) const {
    return permlab::hash_value(f);
  }
};
