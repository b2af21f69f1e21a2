#include "mvd/generators.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <stdexcept>

#include "mvd/error.hpp"

namespace mvd {
namespace {

// Quadratic families are capped so a typo cannot allocate billions of arcs.
constexpr std::uint64_t kMaxDenseVertices = 4096;
constexpr std::uint64_t kMaxSparseVertices = 10'000'000;
constexpr std::uint64_t kMaxSparseArcs = 100'000'000;

double unit_draw(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Unbiased draw in [0, bound) by rejection.
std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_probability(double p) {
  require(p >= 0.0 && p <= 1.0, "arc probability must lie in [0, 1]");
}

}  // namespace

Digraph gen_cycle(std::size_t n) {
  require(n >= 2, "cycle requires n >= 2");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i) arcs.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return Digraph(n, std::move(arcs));
}

Digraph gen_complete(std::size_t n) {
  require(n >= 1, "complete digraph requires n >= 1");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph gen_path_dag(std::size_t n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Digraph(n, std::move(arcs));
}

Digraph gen_random_dag(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "random DAG requires n >= 1");
  check_probability(p);
  std::mt19937_64 engine(seed);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (unit_draw(engine) < p) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "random digraph requires n >= 1");
  check_probability(p);
  std::mt19937_64 engine(seed);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = 0; j < n; ++j)
      if (i != j && unit_draw(engine) < p) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph gen_random_digraph_arcs(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 1, "random digraph requires n >= 1");
  require(m <= n * (n - 1), "more arcs requested than ordered pairs");
  std::mt19937_64 engine(seed);
  std::set<Arc> chosen;
  std::vector<Arc> arcs;
  arcs.reserve(m);
  while (arcs.size() < m) {
    const auto u = static_cast<VertexId>(bounded_draw(engine, n));
    const auto v = static_cast<VertexId>(bounded_draw(engine, n));
    if (u == v || !chosen.insert({u, v}).second) continue;
    arcs.push_back({u, v});
  }
  return Digraph(n, std::move(arcs));
}

Digraph gen_random_tournament(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "tournament requires n >= 1");
  std::mt19937_64 engine(seed);
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      arcs.push_back((engine() >> 63) ? Arc{i, j} : Arc{j, i});
  return Digraph(n, std::move(arcs));
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> quadratic_residues(std::uint64_t q) {
  require(q >= 2, "modulus must be at least 2");
  std::vector<char> hit(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) hit[(x * x) % q] = 1;
  std::vector<std::uint64_t> residues;
  for (std::uint64_t r = 1; r < q; ++r)
    if (hit[r]) residues.push_back(r);
  return residues;
}

bool is_tournament(const Digraph& graph) {
  const auto n = graph.vertex_count();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (graph.has_arc(u, v) == graph.has_arc(v, u)) return false;
  return true;
}

Digraph gen_paley(std::uint64_t q) {
  require(is_prime(q), "paley requires a prime q, got " + std::to_string(q));
  require(q % 4 == 3, "paley requires q = 3 (mod 4), got " + std::to_string(q));
  require(q <= kMaxDenseVertices, "paley q too large");
  std::vector<char> residue(q, 0);
  for (std::uint64_t r : quadratic_residues(q)) residue[r] = 1;
  std::vector<Arc> arcs;
  for (std::uint64_t u = 0; u < q; ++u)
    for (std::uint64_t v = 0; v < q; ++v)
      if (u != v && residue[(v + q - u) % q])
        arcs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  Digraph graph(q, std::move(arcs));
  if (!is_tournament(graph)) throw std::logic_error("paley construction is not a tournament");
  return graph;
}

Digraph gen_two_clique(std::size_t n) {
  require(n >= 2, "two_clique requires n >= 2");
  std::vector<Arc> arcs;
  for (std::size_t base : {std::size_t{0}, n})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) arcs.push_back({static_cast<VertexId>(base + i), static_cast<VertexId>(base + j)});
  arcs.push_back({0, static_cast<VertexId>(n)});
  arcs.push_back({static_cast<VertexId>(n), 0});
  return Digraph(2 * n, std::move(arcs));
}

Digraph gen_figure1() {
  enum : VertexId { x, z, y, v1, v2, v3, v4, v5 };
  std::vector<Arc> arcs{{y, z}};
  const Arc two_way[] = {{x, z}, {x, v5}, {v5, v4}, {v4, v3}, {v3, v2}, {v2, v1}, {v1, y}};
  for (const Arc& a : two_way) {
    arcs.push_back(a);
    arcs.push_back({a.head, a.tail});
  }
  return Digraph(8, std::move(arcs), {"x", "z", "y", "v1", "v2", "v3", "v4", "v5"});
}

Digraph symmetrize(const UndirectedGraph& graph) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * graph.edges.size());
  for (const Arc& e : graph.edges) {
    arcs.push_back(e);
    arcs.push_back({e.head, e.tail});
  }
  return Digraph(graph.vertex_count, std::move(arcs), graph.labels);
}

UndirectedGraph gen_random_undirected(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 1, "random graph requires n >= 1");
  check_probability(p);
  std::mt19937_64 engine(seed);
  std::vector<Arc> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (unit_draw(engine) < p) edges.push_back({i, j});
  return make_undirected(n, std::move(edges));
}

// --- GeneratorSpec --------------------------------------------------------

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<std::string_view> params;
};

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> table = {
      {Family::kCycle, "cycle", {"n"}},
      {Family::kPathDag, "path_dag", {"n"}},
      {Family::kRandomDag, "random_dag", {"n", "p_permille", "seed"}},
      {Family::kComplete, "complete", {"n"}},
      {Family::kRandomTournament, "random_tournament", {"n", "seed"}},
      {Family::kPaley, "paley", {"q"}},
      {Family::kTwoClique, "two_clique", {"n"}},
      {Family::kFigure1, "figure1", {}},
      {Family::kSymmetrize, "symmetrize", {}},
      {Family::kRandom, "random", {"n", "p_permille", "seed"}},
      {Family::kRandomArcs, "random_arcs", {"n", "m", "seed"}},
  };
  return table;
}

const FamilyInfo& info(Family family) {
  for (const FamilyInfo& f : families())
    if (f.family == family) return f;
  throw std::logic_error("unknown family");
}

}  // namespace

std::string_view to_string(Family family) { return info(family).name; }

std::vector<std::string_view> parameter_names(Family family) { return info(family).params; }

std::string generator_usage() {
  std::string text = "families:\n";
  for (const FamilyInfo& f : families()) {
    text += "  " + std::string(f.name);
    for (std::string_view p : f.params) text += " <" + std::string(p) + ">";
    if (f.family == Family::kSymmetrize) text += "   (undirected edge list on input)";
    text += "\n";
  }
  return text;
}

GeneratorSpec parse_generator_spec(std::string_view family,
                                   const std::vector<std::string>& params) {
  const FamilyInfo* found = nullptr;
  for (const FamilyInfo& f : families())
    if (f.name == family) found = &f;
  require(found != nullptr, "unknown generator family \"" + std::string(family) + "\"");
  require(params.size() == found->params.size(),
          std::string(found->name) + " takes " + std::to_string(found->params.size()) +
              " parameter(s), got " + std::to_string(params.size()));

  GeneratorSpec spec{found->family, {}};
  for (std::size_t i = 0; i < params.size(); ++i) {
    std::uint64_t value = 0;
    const std::string& text = params[i];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    require(ec == std::errc{} && ptr == text.data() + text.size(),
            "parameter " + std::string(found->params[i]) + " must be a non-negative integer, got \"" +
                text + "\"");
    spec.params.push_back(value);
  }

  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kCycle: require(p[0] >= 2, "cycle requires n >= 2"); break;
    case Family::kTwoClique: require(p[0] >= 2, "two_clique requires n >= 2"); break;
    case Family::kPathDag:
    case Family::kComplete:
    case Family::kRandomTournament:
    case Family::kRandomDag:
    case Family::kRandom:
    case Family::kRandomArcs: require(p[0] >= 1, "n must be at least 1"); break;
    case Family::kPaley:
      require(is_prime(p[0]) && p[0] % 4 == 3, "paley requires a prime q = 3 (mod 4)");
      break;
    case Family::kFigure1:
    case Family::kSymmetrize: break;
  }
  switch (spec.family) {
    case Family::kComplete:
    case Family::kRandomTournament:
    case Family::kRandomDag:
    case Family::kRandom:
    case Family::kPaley:
    case Family::kTwoClique:
      require(p[0] <= kMaxDenseVertices, "n exceeds " + std::to_string(kMaxDenseVertices));
      break;
    case Family::kCycle:
    case Family::kPathDag:
    case Family::kRandomArcs:
      require(p[0] <= kMaxSparseVertices, "n exceeds " + std::to_string(kMaxSparseVertices));
      break;
    default: break;
  }
  if (spec.family == Family::kRandomDag || spec.family == Family::kRandom) {
    require(p[1] <= 1000, "p_permille must be at most 1000");
  }
  if (spec.family == Family::kRandomArcs) {
    require(p[1] <= p[0] * (p[0] - 1), "m exceeds n(n-1)");
    require(p[1] <= kMaxSparseArcs, "m exceeds " + std::to_string(kMaxSparseArcs));
  }
  return spec;
}

Digraph generate(const GeneratorSpec& spec, const std::optional<UndirectedGraph>& input) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kCycle: return gen_cycle(p[0]);
    case Family::kPathDag: return gen_path_dag(p[0]);
    case Family::kRandomDag: return gen_random_dag(p[0], p[1] / 1000.0, p[2]);
    case Family::kComplete: return gen_complete(p[0]);
    case Family::kRandomTournament: return gen_random_tournament(p[0], p[1]);
    case Family::kPaley: return gen_paley(p[0]);
    case Family::kTwoClique: return gen_two_clique(p[0]);
    case Family::kFigure1: return gen_figure1();
    case Family::kRandom: return gen_random_digraph(p[0], p[1] / 1000.0, p[2]);
    case Family::kRandomArcs: return gen_random_digraph_arcs(p[0], p[1], p[2]);
    case Family::kSymmetrize:
      require(input.has_value(), "symmetrize needs an undirected edge list as input");
      return symmetrize(*input);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace mvd
