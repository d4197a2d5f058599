#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "permlab/bounds.hpp"
#include "permlab/io.hpp"
#include "permlab/search.hpp"

using namespace permlab;

namespace {

PermutationCode code_of(std::vector<Permutation> elements) {
  return PermutationCode::from_elements(std::move(elements));
}

PermutationCode standard_cyclic(int n) {
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 1);
  return cyclic_group(Permutation::from_cycles(n, {cycle}));
}

PermutationCode small_random_code(std::mt19937& rng, int max_n) {
  const int n = 3 + static_cast<int>(rng() % (max_n - 2));
  const int largest = n == 3 ? 6 : 8;
  return oracle::random_code(n, 2 + static_cast<int>(rng() % (largest - 1)), rng);
}

Graph random_graph(std::mt19937& rng, int max_n) {
  while (true) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    Graph g(n);
    const int percent = 20 + static_cast<int>(rng() % 61);
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
      }
    }
    // Complete graphs reduce to the trivial one-element code; skip them.
    if (g.edge_count() < static_cast<std::size_t>(n) * (n - 1) / 2) return g;
  }
}

}  // namespace

TEST_CASE("exact lmax on the known groups") {
  CHECK(exact_lmax(agl(3)).value == 1);
  CHECK(exact_lmax(agl(5)).value == 2);
  CHECK(exact_lmax(dihedral(3)).value == 1);  // S_3

  for (int n = 3; n <= 7; ++n) {
    const auto outcome = exact_lmax(standard_cyclic(n));
    CHECK(outcome.exhaustive);
    CHECK(outcome.value == static_cast<int>(cyclic_lmax_formula(n)));
    REQUIRE(outcome.witness_label.has_value());
    CHECK(min_distance(relabel(standard_cyclic(n), *outcome.witness_label)) ==
          *outcome.value);
  }
}

TEST_CASE("exact lmax agrees with full enumeration") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto code = small_random_code(rng, 6);
    const auto outcome = exact_lmax(code);
    REQUIRE(outcome.exhaustive);
    CHECK(*outcome.value == oracle::enumerate_lmax(code));
    REQUIRE(outcome.witness_label.has_value());
    CHECK(min_distance(relabel(code, *outcome.witness_label)) >= *outcome.value);
  }
}

TEST_CASE("exact lmax respects budgets and threads") {
  SearchBudget tiny;
  tiny.max_nodes = 20;
  const auto limited = exact_lmax(agl(7), tiny);
  CHECK_FALSE(limited.exhaustive);
  REQUIRE(limited.value.has_value());
  CHECK(*limited.value >= 1);

  const auto threaded = exact_lmax(agl(7), {}, 4);
  CHECK(threaded.exhaustive);
  CHECK(threaded.value == 3);
  REQUIRE(threaded.witness_label.has_value());
  CHECK(min_distance(relabel(agl(7), *threaded.witness_label)) == 3);
}

TEST_CASE("exact lmin") {
  CHECK(exact_lmin(standard_cyclic(3)).value == 2);
  CHECK(exact_lmin(dihedral(4)).value == 1);
  CHECK(exact_lmin(code_of({Permutation::identity(5),
                            Permutation::transposition(5, 1, 5)}))
            .value == 1);

  std::mt19937 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const auto code = small_random_code(rng, 6);
    const auto outcome = exact_lmin(code);
    REQUIRE(outcome.exhaustive);
    CHECK(*outcome.value == oracle::enumerate_lmin(code));
    CHECK((*outcome.value == 1 || *outcome.value == 2));
    REQUIRE(outcome.witness_label.has_value());
    CHECK(min_distance(relabel(code, *outcome.witness_label)) == *outcome.value);
  }
}

TEST_CASE("two-distance decision") {
  SUBCASE("a lone transposition can be spread out") {
    const auto code = code_of({Permutation::identity(3),
                               parse_permutation("(1 2)", 3)});
    const auto outcome = two_distance(code);
    CHECK(outcome.value == 1);
    REQUIRE(outcome.witness_path.has_value());
    CHECK(*outcome.witness_path == std::vector<int>{1, 3, 2});
    REQUIRE(outcome.witness_label.has_value());
    CHECK(min_distance(relabel(code, *outcome.witness_label)) >= 2);
  }

  SUBCASE("S_3 cannot reach distance 2") {
    CHECK(two_distance(dihedral(3)).value == 0);
  }

  SUBCASE("no involutions means an immediate yes") {
    const auto code = code_of({Permutation::identity(3),
                               parse_permutation("(1 2 3)", 3)});
    const auto outcome = two_distance(code);
    CHECK(outcome.value == 1);
    CHECK(outcome.nodes_explored == 0);
  }

  SUBCASE("agreement with enumeration and with exact lmax") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
      const auto code = small_random_code(rng, 6);
      const auto outcome = two_distance(code);
      REQUIRE(outcome.exhaustive);
      const bool expected = oracle::enumerate_two_distance(code);
      CHECK((*outcome.value == 1) == expected);
      CHECK((*outcome.value == 1) == (*exact_lmax(code).value >= 2));
      if (*outcome.value == 1) {
        REQUIRE(outcome.witness_label.has_value());
        CHECK(min_distance(relabel(code, *outcome.witness_label)) >= 2);
      }
    }
  }
}

TEST_CASE("graphs and files") {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK_THROWS_AS(g.add_edge(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);

  std::ostringstream out;
  write_graph_file(out, g, "test graph");
  std::istringstream in(out.str());
  const Graph reread = read_graph_file(in);
  CHECK(reread.vertex_count() == 4);
  CHECK(reread.edges() == g.edges());

  std::istringstream bad("n 3 m 2\n1 2\n");
  CHECK_THROWS(read_graph_file(bad));
}

TEST_CASE("hamiltonian reduction building blocks") {
  SUBCASE("code construction") {
    CHECK(hamiltonian_to_code(Graph::complete(4)).size() == 1);

    const auto empty3 = hamiltonian_to_code(Graph(3));
    CHECK(empty3.size() == 4);
    CHECK(empty3.contains(parse_permutation("(1 2)", 3)));
    CHECK(empty3.contains(parse_permutation("(1 3)", 3)));
    CHECK(empty3.contains(parse_permutation("(2 3)", 3)));

    Graph path3(3);
    path3.add_edge(1, 2);
    path3.add_edge(2, 3);
    const auto code = hamiltonian_to_code(path3);
    CHECK(code.size() == 2);
    CHECK(code.contains(parse_permutation("(1 3)", 3)));
  }

  SUBCASE("path decision") {
    Graph path4(4);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    path4.add_edge(3, 4);
    CHECK(hamiltonian_path_exists(path4).value == 1);

    Graph star(4);
    star.add_edge(1, 2);
    star.add_edge(1, 3);
    star.add_edge(1, 4);
    CHECK(hamiltonian_path_exists(star).value == 0);

    const auto outcome = hamiltonian_path_exists(Graph::complete(4));
    CHECK(outcome.value == 1);
    REQUIRE(outcome.witness_path.has_value());
    CHECK(outcome.witness_path->size() == 4);
  }

  SUBCASE("both sides agree on random graphs, with witness conversion") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = random_graph(rng, 7);
      const auto ham = hamiltonian_path_exists(g);
      const auto code = hamiltonian_to_code(g);
      const auto two = two_distance(code);
      REQUIRE(ham.exhaustive);
      REQUIRE(two.exhaustive);
      CHECK(*ham.value == *two.value);
      if (*ham.value == 1) {
        // Path -> labeling of distance >= 2.
        const Permutation l = [&] {
          std::vector<int> images(static_cast<std::size_t>(g.vertex_count()));
          for (std::size_t i = 0; i < ham.witness_path->size(); ++i) {
            images[static_cast<std::size_t>((*ham.witness_path)[i]) - 1] =
                static_cast<int>(i) + 1;
          }
          return Permutation(std::move(images));
        }();
        CHECK(min_distance(relabel(code, l)) >= 2);
        // Labeling -> Hamiltonian path of G.
        REQUIRE(two.witness_path.has_value());
        const auto& path = *two.witness_path;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          CHECK(g.has_edge(path[i], path[i + 1]));
        }
      }
    }
  }
}

TEST_CASE("neighboring pairs") {
  SUBCASE("the reflection x -> -x+2 blocks the sets {0,1,2} and {4,5,6}") {
    // Shifted to one-based points these are {1,2,3} and {5,6,7}. The AGL(7)
    // involution x -> -x+2, i.e. (1 3)(4 7)(5 6), maps the first set onto
    // itself, so neither image meets the other set.
    const auto group = agl(7);
    const Permutation reflection = parse_permutation("(1 3)(4 7)(5 6)", 7);
    REQUIRE(group.contains(reflection));
    bool crosses = false;
    for (int a : {1, 2, 3}) {
      if (reflection(a) >= 5) crosses = true;
    }
    for (int b : {5, 6, 7}) {
      if (reflection(b) <= 3) crosses = true;
    }
    CHECK_FALSE(crosses);
    CHECK_FALSE(neighboring_pair_check(group, {1, 2, 3}, {5, 6, 7}));
    CHECK_FALSE(neighboring_pair_check(group, {}, {5, 6, 7}));
    CHECK_THROWS_AS(neighboring_pair_check(group, {1, 2}, {2, 3}),
                    std::invalid_argument);
  }

  SUBCASE("a transposition pair") {
    const auto code = code_of({Permutation::identity(3),
                               parse_permutation("(1 2)", 3)});
    CHECK(neighboring_pair_check(code, {1}, {2}));
    const auto outcome = min_neighboring_order(code, 3);
    CHECK(outcome.value == 2);
  }

  SUBCASE("exhaustive orders for the named groups") {
    // No pair exists for AGL(5) or AGL(7): every candidate is stabilized by
    // some reflection x -> -x+b.
    const auto agl7 = min_neighboring_order(agl(7), 7);
    CHECK(agl7.exhaustive);
    CHECK(agl7.infinite);
    CHECK_FALSE(agl7.value.has_value());

    const auto agl5 = min_neighboring_order(agl(5), 10);
    CHECK(agl5.exhaustive);
    CHECK(agl5.infinite);
    CHECK_FALSE(agl5.value.has_value());

    // Cyclic of order 7: L_max = 5, so the sandwich allows orders 3..4.
    const auto cyclic7 = min_neighboring_order(standard_cyclic(7), 7);
    REQUIRE(cyclic7.exhaustive);
    CHECK(cyclic7.value == 4);
    REQUIRE(cyclic7.witness_pair.has_value());
    CHECK(neighboring_pair_check(standard_cyclic(7), cyclic7.witness_pair->a,
                                 cyclic7.witness_pair->b));
  }

  SUBCASE("cap semantics") {
    const auto capped = min_neighboring_order(standard_cyclic(7), 3);
    CHECK_FALSE(capped.exhaustive);
    CHECK_FALSE(capped.value.has_value());
    CHECK_FALSE(capped.infinite);
  }

  SUBCASE("agreement with 3^n enumeration") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
      const auto code = small_random_code(rng, 6);
      const int expected = oracle::enumerate_neighboring_order(code);
      const auto outcome = min_neighboring_order(code, code.degree());
      REQUIRE(outcome.exhaustive);
      if (expected == 0) {
        CHECK(outcome.infinite);
      } else {
        CHECK(outcome.value == expected);
      }
    }
  }
}

TEST_CASE("labeling from a neighboring pair") {
  // Cyclic of order 7 with A = {1}, B = {2,3,4}: order 4 guarantees 7-4+1 = 4.
  const auto c7 = standard_cyclic(7);
  const auto pair7 = NeighboringPair{{1}, {2, 3, 4}};
  REQUIRE(neighboring_pair_check(c7, pair7.a, pair7.b));
  const auto certificate = labeling_from_pair(c7, pair7);
  CHECK(certificate.kind == LabelingKind::from_pair);
  CHECK(certificate.achieved_distance >= 4);
  CHECK(min_distance(relabel(c7, certificate.label)) ==
        certificate.achieved_distance);

  const auto c3 = standard_cyclic(3);
  REQUIRE(neighboring_pair_check(c3, {1}, {3}));
  const auto c3_cert = labeling_from_pair(c3, NeighboringPair{{1}, {3}});
  CHECK(c3_cert.achieved_distance >= 2);

  CHECK_THROWS_AS(labeling_from_pair(agl(7), NeighboringPair{{1}, {2}}),
                  std::invalid_argument);
}
