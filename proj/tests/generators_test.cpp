#include <gtest/gtest.h>

#include <random>

#include "mvd/bfs.hpp"
#include "mvd/edge_list.hpp"
#include "mvd/error.hpp"
#include "mvd/generators.hpp"
#include "mvd/structure.hpp"

namespace mvd {
namespace {

TEST(GeneratorTest, EngineSequenceIsStandardized) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the
  // standard; every seeded fixture below depends on it.
  std::mt19937_64 engine;
  engine.discard(9999);
  EXPECT_EQ(engine(), 9981545732273789042ull);
}

TEST(GeneratorTest, BasicFamilies) {
  EXPECT_EQ(gen_cycle(4).arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_EQ(gen_complete(4).arc_count(), 12u);
  EXPECT_EQ(gen_path_dag(4).arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(gen_path_dag(1).vertex_count(), 1u);
  const Digraph tc = gen_two_clique(3);
  EXPECT_EQ(tc.vertex_count(), 6u);
  EXPECT_EQ(tc.arc_count(), 14u);
  EXPECT_TRUE(tc.has_arc(0, 3));
  EXPECT_TRUE(tc.has_arc(3, 0));
  EXPECT_FALSE(tc.has_arc(1, 4));
}

TEST(GeneratorTest, Figure1Shape) {
  const Digraph g = gen_figure1();
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"x", "z", "y", "v1", "v2", "v3", "v4", "v5"}));
  EXPECT_TRUE(g.has_arc(2, 1));   // y -> z
  EXPECT_FALSE(g.has_arc(1, 2));  // no z -> y
  EXPECT_TRUE(is_strongly_connected(g));
}

TEST(GeneratorTest, PaleySmallest) {
  const Digraph p3 = gen_paley(3);
  EXPECT_EQ(p3.arcs(), (std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(quadratic_residues(7), (std::vector<std::uint64_t>{1, 2, 4}));
  const Digraph p7 = gen_paley(7);
  const auto out0 = p7.out_neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(out0.begin(), out0.end()), (std::vector<VertexId>{1, 2, 4}));
}

TEST(GeneratorTest, PaleyIsRegularTournament) {
  for (std::uint64_t q : {3u, 7u, 11u, 19u, 23u, 31u, 43u}) {
    const Digraph p = gen_paley(q);
    EXPECT_TRUE(is_tournament(p)) << q;
    EXPECT_EQ(p.arc_count(), q * (q - 1) / 2);
    for (VertexId v = 0; v < q; ++v) {
      EXPECT_EQ(p.out_degree(v), (q - 1) / 2);
      EXPECT_EQ(p.in_degree(v), (q - 1) / 2);
    }
    // Cyclic symmetry: u -> v iff u+1 -> v+1.
    for (const Arc& a : p.arcs())
      EXPECT_TRUE(p.has_arc((a.tail + 1) % q, (a.head + 1) % q));
  }
}

TEST(GeneratorTest, PaleyRejectsBadModuli) {
  for (std::uint64_t q : {0u, 1u, 2u, 5u, 9u, 13u, 15u, 27u}) EXPECT_THROW(gen_paley(q), DomainError) << q;
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(4093));
  EXPECT_FALSE(is_prime(4087));  // 61 * 67
}

TEST(GeneratorTest, ArgumentErrors) {
  EXPECT_THROW(gen_cycle(1), DomainError);
  EXPECT_THROW(gen_complete(0), DomainError);
  EXPECT_THROW(gen_two_clique(1), DomainError);
  EXPECT_THROW(gen_random_dag(5, 1.5, 0), DomainError);
  EXPECT_THROW(gen_random_digraph_arcs(3, 7, 0), DomainError);
}

// Pinned output; a change here changes every seeded corpus.
TEST(GeneratorTest, RandomDagFixture) {
  const Digraph g = gen_random_dag(8, 0.3, 42);
  EXPECT_EQ(to_edge_list(g), "0 4\n0 6\n1 3\n1 5\n3 4\n3 5\n3 7\n4 6\n4 7\n5 6");
  EXPECT_TRUE(is_dag(g));
}

TEST(GeneratorTest, RandomTournamentFixture) {
  const Digraph g = gen_random_tournament(5, 7);
  EXPECT_EQ(to_edge_list(g), "0 1\n0 2\n0 4\n1 4\n2 1\n2 3\n3 0\n3 1\n3 4\n4 2");
  EXPECT_TRUE(is_tournament(g));
}

TEST(GeneratorTest, Reproducible) {
  EXPECT_EQ(gen_random_digraph(20, 0.2, 5), gen_random_digraph(20, 0.2, 5));
  EXPECT_NE(gen_random_digraph(20, 0.2, 5), gen_random_digraph(20, 0.2, 6));
  EXPECT_EQ(gen_random_digraph_arcs(500, 2000, 1), gen_random_digraph_arcs(500, 2000, 1));
  EXPECT_EQ(gen_random_digraph_arcs(500, 2000, 1).arc_count(), 2000u);
  EXPECT_EQ(gen_random_digraph_arcs(4, 12, 3), gen_complete(4));
}

TEST(GeneratorTest, RandomDagsAreAcyclicAndForward) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph g = gen_random_dag(12, 0.5, seed);
    EXPECT_TRUE(is_dag(g));
    for (const Arc& a : g.arcs()) EXPECT_LT(a.tail, a.head);
  }
  EXPECT_EQ(gen_random_dag(6, 1.0, 0).arc_count(), 15u);
  EXPECT_EQ(gen_random_dag(6, 0.0, 0).arc_count(), 0u);
}

TEST(GeneratorTest, SymmetrizePreservesDistances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const UndirectedGraph u = gen_random_undirected(8, 0.3, seed);
    const Digraph d = symmetrize(u);
    EXPECT_EQ(d.arc_count(), 2 * u.edges.size());
    // Undirected distances by relaxation over the edge list.
    const std::size_t n = u.vertex_count;
    std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, UINT32_MAX));
    for (std::size_t s = 0; s < n; ++s) {
      dist[s][s] = 0;
      for (std::size_t round = 0; round < n; ++round)
        for (const Arc& e : u.edges) {
          auto relax = [&](VertexId a, VertexId b) {
            if (dist[s][a] != UINT32_MAX) dist[s][b] = std::min(dist[s][b], dist[s][a] + 1);
          };
          relax(e.tail, e.head);
          relax(e.head, e.tail);
        }
    }
    for (VertexId s = 0; s < n; ++s) {
      const DistanceVector bfs = bfs_distances(d, s);
      for (VertexId t = 0; t < n; ++t) {
        if (dist[s][t] == UINT32_MAX) EXPECT_FALSE(bfs[t].reachable());
        else EXPECT_EQ(bfs[t], Distance{dist[s][t]});
      }
    }
  }
}

TEST(GeneratorSpecTest, ParsesAndGenerates) {
  const GeneratorSpec spec = parse_generator_spec("random_dag", {"8", "300", "42"});
  EXPECT_EQ(spec.family, Family::kRandomDag);
  EXPECT_EQ(spec.params, (std::vector<std::uint64_t>{8, 300, 42}));
  EXPECT_EQ(generate(spec), gen_random_dag(8, 0.3, 42));
  EXPECT_EQ(generate(parse_generator_spec("figure1", {})), gen_figure1());
  EXPECT_EQ(parameter_names(Family::kRandomArcs),
            (std::vector<std::string_view>{"n", "m", "seed"}));
  EXPECT_EQ(to_string(Family::kTwoClique), "two_clique");
}

TEST(GeneratorSpecTest, Rejections) {
  EXPECT_THROW(parse_generator_spec("hypercube", {"3"}), DomainError);
  EXPECT_THROW(parse_generator_spec("cycle", {}), DomainError);
  EXPECT_THROW(parse_generator_spec("cycle", {"3", "4"}), DomainError);
  EXPECT_THROW(parse_generator_spec("cycle", {"-3"}), DomainError);
  EXPECT_THROW(parse_generator_spec("cycle", {"3x"}), DomainError);
  EXPECT_THROW(parse_generator_spec("cycle", {"1"}), DomainError);
  EXPECT_THROW(parse_generator_spec("paley", {"13"}), DomainError);
  EXPECT_THROW(parse_generator_spec("complete", {"5000"}), DomainError);
  EXPECT_THROW(parse_generator_spec("random", {"5", "1001", "0"}), DomainError);
  EXPECT_THROW(parse_generator_spec("random_arcs", {"3", "7", "0"}), DomainError);
  EXPECT_THROW(parse_generator_spec("random_arcs", {"1000000", "200000000", "0"}), DomainError);
  EXPECT_THROW(generate(parse_generator_spec("symmetrize", {})), DomainError);
}

}  // namespace
}  // namespace mvd
