#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvd/digraph.hpp"
#include "mvd/undirected.hpp"

namespace mvd {

// Seeded generators draw from std::mt19937_64 (whose output sequence is fixed
// by the C++ standard) and never from std:: distributions, whose algorithms
// are implementation-defined. A Bernoulli(p) trial is
// `(engine() >> 11) * 2^-53 < p`; a fair coin is the top bit of one draw.
// Pairs are visited in row-major order, so the same (n, p, seed) yields the
// same graph on every platform.

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. Requires n >= 2.
Digraph gen_cycle(std::size_t n);

/// All n(n-1) ordered arcs. Requires n >= 1.
Digraph gen_complete(std::size_t n);

/// Arcs (i, i+1). Requires n >= 1.
Digraph gen_path_dag(std::size_t n);

/// Arc (i, j) for i < j independently with probability p. Requires n >= 1 and
/// p in [0, 1].
Digraph gen_random_dag(std::size_t n, double p, std::uint64_t seed);

/// Every ordered pair (i, j), i != j, independently with probability p.
Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed);

/// Exactly m distinct arcs drawn uniformly (rejection sampling); for large
/// sparse instances. Requires m <= n(n-1).
Digraph gen_random_digraph_arcs(std::size_t n, std::size_t m, std::uint64_t seed);

/// One fair coin per unordered pair {i < j}: heads gives (i, j).
Digraph gen_random_tournament(std::size_t n, std::uint64_t seed);

/// Paley tournament on Z_q: u -> v iff (v - u) mod q is a nonzero square.
/// Requires q prime and q = 3 (mod 4).
Digraph gen_paley(std::uint64_t q);

/// Nonzero quadratic residues mod q, sorted.
std::vector<std::uint64_t> quadratic_residues(std::uint64_t q);

bool is_prime(std::uint64_t q);

/// Two complete digraphs on {0..n-1} and {n..2n-1} joined by the arcs
/// (0, n) and (n, 0). Requires n >= 2.
Digraph gen_two_clique(std::size_t n);

/// The 8-vertex graph labelled x, z, y, v1..v5: the one-way arc y -> z plus
/// two-way arcs x-z, x-v5, v5-v4, v4-v3, v3-v2, v2-v1, v1-y.
Digraph gen_figure1();

/// Each undirected edge {u, v} becomes the arcs (u, v) and (v, u).
Digraph symmetrize(const UndirectedGraph& graph);

/// Edge {i, j}, i < j, independently with probability p.
UndirectedGraph gen_random_undirected(std::size_t n, double p, std::uint64_t seed);

/// True iff every unordered pair carries exactly one arc.
bool is_tournament(const Digraph& graph);

enum class Family {
  kCycle,
  kPathDag,
  kRandomDag,
  kComplete,
  kRandomTournament,
  kPaley,
  kTwoClique,
  kFigure1,
  kSymmetrize,
  kRandom,
  kRandomArcs,
};

/// A validated generator request. Probabilities are in per-mille so that
/// specs stay integral.
struct GeneratorSpec {
  Family family = Family::kCycle;
  std::vector<std::uint64_t> params;
};

std::string_view to_string(Family family);
/// Parameter names in order, e.g. {"n", "p_permille", "seed"}.
std::vector<std::string_view> parameter_names(Family family);
std::string generator_usage();

/// Parses and validates a family name and its integer parameters. Throws
/// DomainError on an unknown family, wrong arity or invalid values.
GeneratorSpec parse_generator_spec(std::string_view family,
                                   const std::vector<std::string>& params);

/// Runs the generator. `input` is required for (and only used by)
/// symmetrize.
Digraph generate(const GeneratorSpec& spec,
                 const std::optional<UndirectedGraph>& input = std::nullopt);

}  // namespace mvd
