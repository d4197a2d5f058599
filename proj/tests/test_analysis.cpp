#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permlab/analysis.hpp"

using namespace permlab;

namespace {

PermutationCode code_of(std::vector<Permutation> elements) {
  return PermutationCode::from_elements(std::move(elements));
}

}  // namespace

TEST_CASE("difference sets") {
  const auto pair = code_of({Permutation::identity(3), parse_permutation("(1 2)", 3)});
  const auto diff = difference_set(pair);
  CHECK(diff.source_is_group);
  REQUIRE(diff.elements.size() == 1);
  CHECK(diff.elements[0] == parse_permutation("(1 2)", 3));

  CHECK(difference_set(agl(7)).elements.size() == 41);

  // Without the identity the two ordered quotients appear.
  const auto rotations = code_of(
      {parse_permutation("(1 2 3)", 3), parse_permutation("(1 3 2)", 3)});
  const auto rotation_diff = difference_set(rotations);
  CHECK_FALSE(rotation_diff.source_is_group);
  REQUIRE(rotation_diff.elements.size() == 2);
  CHECK(rotation_diff.elements[0] == parse_permutation("(1 2 3)", 3));
  CHECK(rotation_diff.elements[1] == parse_permutation("(1 3 2)", 3));

  CHECK_THROWS_AS(difference_set(code_of({Permutation::identity(3)})),
                  std::invalid_argument);

  SUBCASE("structure invariants on random codes") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      const auto code = oracle::random_code(6, 2 + static_cast<int>(rng() % 7), rng);
      const auto d = difference_set(code);
      const auto id = Permutation::identity(6);
      CHECK(d.elements.size() <= code.size() * (code.size() - 1));
      if (code.is_group()) CHECK(d.elements.size() == code.size() - 1);
      for (const auto& f : d.elements) {
        CHECK(f != id);
        CHECK(std::binary_search(d.elements.begin(), d.elements.end(), inverse(f)));
      }
    }
  }
}

TEST_CASE("minimal distance") {
  for (int n : {3, 6, 10}) {
    CHECK(min_distance(code_of({Permutation::identity(n),
                                Permutation::transposition(n, 1, n)})) == n - 1);
    CHECK(min_distance(code_of({Permutation::identity(n),
                                Permutation::transposition(n, 1, 2)})) == 1);
  }
  for (int p : {3, 5, 7, 11, 13}) {
    CHECK(min_distance(agl(p)) == (p - 1) / 2);
  }
  CHECK(min_distance(cyclic_group(parse_permutation("(1 2 3 10 4 9 8 5 6 7)"))) == 7);
  CHECK_THROWS_AS(min_distance(code_of({Permutation::identity(4)})),
                  std::invalid_argument);

  SUBCASE("agrees with the naive all-pairs definition") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      const auto code = oracle::random_code(n, 2 + static_cast<int>(rng() % 7), rng);
      CHECK(min_distance(code) == oracle::naive_min_distance(code));
    }
  }
}

TEST_CASE("involution sets") {
  CHECK(involution_set(code_of({Permutation::identity(3),
                                parse_permutation("(1 2 3)", 3),
                                parse_permutation("(1 3 2)", 3)}))
            .empty());
  const auto single = involution_set(
      code_of({Permutation::identity(3), parse_permutation("(1 2)", 3)}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == parse_permutation("(1 2)", 3));

  SUBCASE("agl has exactly p involutions of the form x -> -x + b") {
    for (int p : {3, 5, 7, 11}) {
      const auto involutions = involution_set(agl(p));
      CHECK(involutions.size() == static_cast<std::size_t>(p));
      // Each ordered pair (x1, x2) is matched by exactly one involution.
      for (int x1 = 1; x1 <= p; ++x1) {
        for (int x2 = 1; x2 <= p; ++x2) {
          int count = 0;
          for (const auto& g : involutions) {
            if (g(x1) == x2) ++count;
          }
          CHECK(count == 1);
        }
      }
    }
  }
}

TEST_CASE("edge sets of involutions") {
  const auto single = edge_set(parse_permutation("(1 2)", 3));
  CHECK(single.edges == std::vector<std::pair<int, int>>{{1, 2}});
  const auto doubled = edge_set(parse_permutation("(1 3)(2 4)", 4));
  CHECK(doubled.edges == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(edge_set(parse_permutation("(1 2 3)", 3)), std::invalid_argument);
  CHECK_THROWS_AS(edge_set(Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("minimal degree") {
  CHECK(minimal_degree(dihedral(3)) == 2);  // S_3: a transposition moves 2 points
  for (int q : {3, 5, 7, 11}) {
    CHECK(minimal_degree(agl(q)) == q - 1);
  }
  for (int n = 4; n <= 9; ++n) {
    CHECK(minimal_degree(dihedral(n)) == (n % 2 == 0 ? n - 2 : n - 1));
  }
  CHECK_THROWS_AS(minimal_degree(code_of({Permutation::identity(3),
                                          parse_permutation("(1 2 3)", 3)})),
                  std::invalid_argument);

  SUBCASE("every non-identity element moves at least that many points") {
    const auto group = agl(7);
    const int degree_bound = minimal_degree(group);
    for (const auto& g : difference_set(group).elements) {
      int moved = 0;
      for (int i = 1; i <= 7; ++i) {
        if (g(i) != i) ++moved;
      }
      CHECK(moved >= degree_bound);
    }
  }
}

TEST_CASE("cycle count histograms") {
  const auto pair = code_of({Permutation::identity(3), parse_permutation("(1 2)", 3)});
  const auto histogram = cycle_count_histogram(difference_set(pair));
  CHECK(histogram == std::map<int, std::int64_t>{{2, 1}});

  // AGL(5) splits into 4 full cycles, 10 elements with one fixed point and a
  // 4-cycle, and 5 with one fixed point and two 2-cycles.
  const auto agl5 = cycle_count_histogram(difference_set(agl(5)));
  CHECK(agl5 == std::map<int, std::int64_t>{{1, 4}, {2, 10}, {3, 5}});

  const auto one_cycle = code_of({Permutation::identity(6),
                                  parse_permutation("(1 2 3 4 5 6)", 6)});
  // Difference set of a non-group pair: the cycle and its inverse.
  const auto hist = cycle_count_histogram(difference_set(one_cycle));
  std::int64_t total = 0;
  for (const auto& [cycles, count] : hist) {
    (void)cycles;
    total += count;
  }
  CHECK(total == static_cast<std::int64_t>(difference_set(one_cycle).elements.size()));

  SUBCASE("cycle counts respect the minimal-degree ceiling") {
    for (const auto& group : {agl(7), dihedral(8)}) {
      const int d = minimal_degree(group);
      for (const auto& g : difference_set(group).elements) {
        CHECK(cycle_count(g) <= group.degree() - (d + 1) / 2);
      }
    }
  }
}
