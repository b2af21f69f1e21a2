#include <gtest/gtest.h>

#include <iostream>

#include "mvd/error.hpp"
#include "mvd/generators.hpp"
#include "mvd/solver.hpp"
#include "mvd/structure.hpp"

namespace mvd {
namespace {

void expect_valid_witness(const Digraph& g, const MuResult& r) {
  EXPECT_EQ(r.witness.size(), r.mu);
  EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
  EXPECT_TRUE(verify(g, r.witness).valid);
}

TEST(SolverTest, DagIsOne) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MuResult r = mu(gen_random_dag(9, 0.4, seed));
    EXPECT_EQ(r.mu, 1u);
    EXPECT_EQ(r.shortcut, Shortcut::kDag);
    EXPECT_EQ(r.witness, std::vector<VertexId>{0});
  }
  EXPECT_EQ(mu(gen_path_dag(1)).mu, 1u);
}

TEST(SolverTest, CycleIsTwo) {
  // C_2 is also K_2 and is answered by the complete shortcut.
  EXPECT_EQ(mu(gen_cycle(2)).mu, 2u);
  EXPECT_EQ(mu(gen_cycle(2)).shortcut, Shortcut::kComplete);
  for (std::size_t n = 3; n <= 12; ++n) {
    const Digraph c = gen_cycle(n);
    const MuResult r = mu(c);
    EXPECT_EQ(r.mu, 2u);
    EXPECT_EQ(r.shortcut, Shortcut::kCycle);
    EXPECT_EQ(r.witness, (std::vector<VertexId>{0, 1}));
    expect_valid_witness(c, r);
  }
}

TEST(SolverTest, CompleteIsSize) {
  const MuResult r = mu(gen_complete(5));
  EXPECT_EQ(r.mu, 5u);
  EXPECT_EQ(r.shortcut, Shortcut::kComplete);
  EXPECT_EQ(mu_bruteforce(gen_complete(5)).mu, 5u);
}

TEST(SolverTest, TwoCliqueDropsBridgeEndpoints) {
  const Digraph g = gen_two_clique(3);
  const MuResult oracle = mu_bruteforce(g);
  ASSERT_EQ(oracle.mu, 4u);
  EXPECT_EQ(oracle.witness, (std::vector<VertexId>{1, 2, 4, 5}));
  const MuResult r = mu(g);
  EXPECT_EQ(r.mu, 4u);
  EXPECT_EQ(r.witness, oracle.witness);
  EXPECT_EQ(r.shortcut, Shortcut::kNone);
}

// A bridge endpoint in a set that reaches across the bridge must be the only
// set vertex on its side; checked over every valid set, maximum or not.
TEST(SolverTest, TwoCliqueEndpointRule) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Digraph g = gen_two_clique(n);
    kernel::NaiveOracle oracle(g);
    const std::size_t total = 2 * n;
    std::size_t spanning_optima = 0;
    for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
      std::vector<VertexId> s;
      for (VertexId v = 0; v < total; ++v)
        if (mask >> v & 1) s.push_back(v);
      if (!oracle.is_valid(s, Variant::kStandard)) continue;
      std::size_t left = 0, right = 0;
      for (VertexId v : s) (v < n ? left : right)++;
      if (left == 0 || right == 0) continue;
      const bool has_u = mask & 1u, has_v = mask >> n & 1u;
      if (has_u) { EXPECT_EQ(left, 1u) << "n=" << n << " mask=" << mask; }
      if (has_v) { EXPECT_EQ(right, 1u) << "n=" << n << " mask=" << mask; }
      if (s.size() == 2 * (n - 1)) ++spanning_optima;
    }
    EXPECT_GT(spanning_optima, 0u);
  }
}

TEST(SolverTest, MatchesBruteForceOnFourVertexDigraphs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Digraph g = gen_random_digraph(4, 0.5, seed);
    const MuResult fast = mu(g);
    const MuResult slow = mu_bruteforce(g);
    ASSERT_EQ(fast.mu, slow.mu) << "seed " << seed;
    EXPECT_EQ(fast.witness, slow.witness) << "seed " << seed;
  }
}

TEST(SolverTest, MatchesBruteForceOnCorpus) {
  std::vector<Digraph> corpus;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 5 + seed % 8;  // 5..12
    const double p = 0.15 + 0.1 * static_cast<double>(seed % 6);
    corpus.push_back(gen_random_digraph(n, p, 300 + seed));
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) corpus.push_back(gen_random_tournament(9, seed));
  corpus.push_back(gen_paley(7));
  corpus.push_back(gen_paley(11));
  corpus.push_back(gen_figure1());
  corpus.push_back(gen_two_clique(5));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Digraph& g = corpus[i];
    const MuResult fast = mu(g);
    const MuResult slow = mu_bruteforce(g);
    ASSERT_EQ(fast.mu, slow.mu) << "corpus " << i;
    EXPECT_EQ(fast.witness, slow.witness) << "corpus " << i;
    expect_valid_witness(g, fast);
  }
}

TEST(SolverTest, WitnessInsideOneComponent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph g = gen_random_digraph(3 + seed % 8, 0.25, seed);
    const MuResult r = mu(g);
    expect_valid_witness(g, r);
    const SccDecomposition d = scc(g);
    for (VertexId v : r.witness) EXPECT_EQ(d.component_of[v], d.component_of[r.witness[0]]);
  }
}

TEST(SolverTest, PaleySeven) {
  const MuResult r = mu(gen_paley(7));
  EXPECT_EQ(r.mu, 4u);
  EXPECT_EQ(r.witness, (std::vector<VertexId>{0, 1, 2, 4}));
  EXPECT_EQ(mu_bruteforce(gen_paley(7)).mu, 4u);
}

// Regression fixture: brute force on the 7-vertex Paley tournament.
TEST(SolverTest, PaleySevenVariantsRecorded) {
  const Digraph p7 = gen_paley(7);
  for (Variant v : {Variant::kTotal, Variant::kOuter, Variant::kDual}) {
    const MuResult r = mu_variant(p7, v);
    std::cout << "P_7 " << to_string(v) << ": " << r.mu << "\n";
    EXPECT_LE(r.mu, 4u);
  }
}

// Brute force on C_5, worked by hand as well: total and dual are satisfied
// only by the empty set, outer by any single vertex.
TEST(SolverTest, CycleVariantFixtures) {
  const Digraph c5 = gen_cycle(5);
  EXPECT_EQ(mu_variant(c5, Variant::kTotal).mu, 0u);
  EXPECT_TRUE(mu_variant(c5, Variant::kTotal).feasible);
  EXPECT_EQ(mu_variant(c5, Variant::kOuter).mu, 1u);
  EXPECT_EQ(mu_variant(c5, Variant::kOuter).witness, std::vector<VertexId>{0});
  EXPECT_EQ(mu_variant(c5, Variant::kDual).mu, 0u);
  EXPECT_EQ(mu_variant(c5, Variant::kStandard).mu, 2u);
}

TEST(SolverTest, VariantOrdering) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph g = gen_random_digraph(6, 0.5, seed);
    const MuResult standard = mu_variant(g, Variant::kStandard);
    EXPECT_EQ(standard.mu, mu_bruteforce(g).mu);
    EXPECT_EQ(standard.witness, mu_bruteforce(g).witness);
    for (Variant v : {Variant::kTotal, Variant::kOuter, Variant::kDual}) {
      const MuResult r = mu_variant(g, v);
      if (!r.feasible) continue;
      EXPECT_LE(r.mu, standard.mu);
      EXPECT_TRUE(naive_verify(g, r.witness, v).valid);
    }
  }
}

TEST(SolverTest, PathSevenFixture) {
  // Regression fixture for the 7-vertex path DAG.
  const Digraph p = gen_path_dag(7);
  EXPECT_EQ(mu_bruteforce(p).mu, 1u);
  EXPECT_EQ(mu(p).mu, 1u);
}

TEST(UndirectedSolverTest, SmallFixtures) {
  const UndirectedGraph p4 = make_undirected(4, {{0, 1}, {1, 2}, {2, 3}});
  const UndirectedGraph c4 = make_undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const UndirectedGraph k4 = make_undirected(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  // On a path every internal vertex separates: only pairs qualify.
  EXPECT_EQ(mu_undirected_bruteforce(p4).mu, 2u);
  EXPECT_EQ(mu_undirected_bruteforce(c4).mu, 3u);
  EXPECT_EQ(mu_undirected_bruteforce(k4).mu, 4u);
  const std::vector<VertexId> ends{0, 3}, three{0, 1, 3};
  EXPECT_TRUE(is_undirected_mv_set(p4, ends));
  EXPECT_FALSE(is_undirected_mv_set(p4, three));
}

TEST(UndirectedSolverTest, ReductionIdentity) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 60 && seed < 1000; ++seed) {
    const UndirectedGraph g = gen_random_undirected(3 + seed % 5, 0.5, seed);
    if (!is_connected(g)) continue;
    const Digraph d = symmetrize(g);
    EXPECT_EQ(mu(d).mu, mu_undirected_bruteforce(g).mu) << "seed " << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 60u);
}

TEST(SolverTest, Errors) {
  EXPECT_THROW(mu(Digraph{}), DomainError);
  try {
    mu(gen_random_tournament(30, 1), {10});
    FAIL() << "expected refusal";
  } catch (const RefusalError& e) {
    EXPECT_GT(e.size(), 10u);
    EXPECT_EQ(e.cap(), 10u);
  }
  // Shortcut components are exempt from the budget.
  EXPECT_EQ(mu(gen_cycle(100), {5}).mu, 2u);
  EXPECT_EQ(mu(gen_complete(40), {5}).mu, 40u);
  EXPECT_THROW(mu_bruteforce(gen_cycle(16)), RefusalError);
  EXPECT_THROW(mu_variant(gen_cycle(13), Variant::kTotal, {12}), RefusalError);
}

TEST(SolverTest, ShortcutNames) {
  EXPECT_EQ(to_string(Shortcut::kNone), "none");
  EXPECT_EQ(to_string(Shortcut::kDag), "dag");
  EXPECT_EQ(to_string(Shortcut::kCycle), "cycle");
  EXPECT_EQ(to_string(Shortcut::kComplete), "complete");
}

}  // namespace
}  // namespace mvd
