#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mvd/edge_list.hpp"
#include "mvd/error.hpp"
#include "mvd/generators.hpp"
#include "mvd/json_io.hpp"
#include "mvd/solver.hpp"
#include "mvd/structure.hpp"
#include "mvd/visibility.hpp"

namespace mvd::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string format = "json";
  std::string input;
  std::string set;
  std::string variant = "standard";
  std::optional<std::size_t> budget;
  std::size_t cap = 12;
  std::string family;
  std::vector<std::string> params;
  bool dot = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input.empty() || opt.input == "-") return read_all(in);
  std::ifstream file(opt.input, std::ios::binary);
  if (!file) throw InputError("cannot open input file \"" + opt.input + "\"");
  return read_all(file);
}

Variant variant_of(const Options& opt) {
  auto v = parse_variant(opt.variant);
  if (!v) throw InputError("unknown variant \"" + opt.variant + "\"");
  return *v;
}

std::vector<VertexId> parse_set(const Digraph& graph, const std::string& spec) {
  std::vector<VertexId> set;
  if (spec == "all") {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) set.push_back(v);
    return set;
  }
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    VertexId v = 0;
    if (!graph.find_label(name, v)) throw InputError("unknown vertex \"" + name + "\"");
    set.push_back(v);
  }
  return set;
}

std::size_t default_budget(const Options& opt) {
  if (opt.budget) return *opt.budget;
  if (const char* env = std::getenv("MVD_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InputError("MVD_BUDGET must be a non-negative integer, got \"" + std::string(env) + "\"");
  }
  return SolveOptions{}.budget;
}

std::string join_labels(const Digraph& g, const std::vector<VertexId>& vs) {
  std::string s;
  for (VertexId v : vs) s += (s.empty() ? "" : " ") + g.label(v);
  return s;
}

std::string show(Distance d) { return d.reachable() ? std::to_string(d.hops()) : "inf"; }

void print_report(const Digraph& g, const VisibilityReport& r, const Options& opt,
                  std::ostream& out) {
  if (opt.format == "json") {
    out << report_to_json(g, r).dump(2) << "\n";
    return;
  }
  out << "set {" << join_labels(g, r.set) << "} is " << (r.valid ? "" : "NOT ")
      << "a " << to_string(r.variant) << " mutual-visibility set (" << r.pairs_checked
      << " pairs checked)\n";
  for (const BlockedPair& b : r.blocked) {
    const bool fwd = b.direction == Direction::kForward;
    const VertexId from = fwd ? b.pair.first : b.pair.second;
    const VertexId to = fwd ? b.pair.second : b.pair.first;
    out << "  blocked " << g.label(from) << " -> " << g.label(to) << ": shortest "
        << show(b.free) << ", avoiding the set " << show(b.restricted) << "\n";
  }
}

void print_mu(const Digraph& g, const MuResult& r, Variant variant, const Options& opt,
              std::ostream& out) {
  if (opt.format == "json") {
    out << mu_to_json(g, r, variant).dump(2) << "\n";
    return;
  }
  if (!r.feasible) {
    out << to_string(variant) << ": no set qualifies\n";
    return;
  }
  out << "mu (" << to_string(variant) << ") = " << r.mu << "\n"
      << "witness: {" << join_labels(g, r.witness) << "}\n"
      << "shortcut: " << to_string(r.shortcut) << "\n"
      << "nodes explored: " << r.nodes_explored << "\n";
}

int cmd_analyze(const Options& opt, std::istream& in, std::ostream& out) {
  const Digraph g = from_edge_list(read_input(opt, in));
  const json a = analysis_to_json(g);
  if (opt.format == "json") {
    out << a.dump(2) << "\n";
    return kOk;
  }
  out << "vertices: " << a["vertices"] << ", arcs: " << a["arcs"] << "\n";
  out << "strongly connected components: " << a["components"].size() << "\n";
  for (const auto& comp : a["components"]) {
    std::string line;
    for (const auto& l : comp) line += (line.empty() ? "" : " ") + l.get<std::string>();
    out << "  {" << line << "}\n";
  }
  out << "condensation arcs: " << a["condensation"].size() << "\n";
  out << "strong bridges (beta = " << a["beta"] << "):";
  for (const auto& b : a["bridges"]) {
    out << " " << b[0].get<std::string>() << "->" << b[1].get<std::string>();
  }
  out << "\nDAG: " << (a["is_dag"].get<bool>() ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out, bool naive) {
  const Variant variant = variant_of(opt);
  const Digraph g = from_edge_list(read_input(opt, in));
  std::vector<VertexId> set = parse_set(g, opt.set);
  const VisibilityReport r = naive ? naive_verify(g, std::move(set), variant, {opt.cap})
                                   : verify(g, std::move(set), variant);
  print_report(g, r, opt, out);
  return r.valid ? kOk : kNotVisible;
}

int cmd_solve(const Options& opt, std::istream& in, std::ostream& out) {
  const Variant variant = variant_of(opt);
  const std::size_t budget = default_budget(opt);
  const Digraph g = from_edge_list(read_input(opt, in));
  const MuResult r = variant == Variant::kStandard
                         ? mu(g, {budget})
                         : mu_variant(g, variant, {std::min(budget, opt.cap)});
  print_mu(g, r, variant, opt, out);
  return kOk;
}

int cmd_oracle(const Options& opt, std::istream& in, std::ostream& out) {
  if (!opt.set.empty()) return cmd_verify(opt, in, out, /*naive=*/true);
  const Variant variant = variant_of(opt);
  const Digraph g = from_edge_list(read_input(opt, in));
  print_mu(g, mu_variant(g, variant, {opt.cap}), variant, opt, out);
  return kOk;
}

int cmd_gen(const Options& opt, std::istream& in, std::ostream& out) {
  const GeneratorSpec spec = parse_generator_spec(opt.family, opt.params);
  std::optional<UndirectedGraph> source;
  if (spec.family == Family::kSymmetrize) source = undirected_from_edge_list(read_input(opt, in));
  const Digraph g = generate(spec, source);
  if (opt.dot) {
    out << to_dot(g);
  } else {
    const std::string text = to_edge_list(g);
    out << text << (text.empty() ? "" : "\n");
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Mutual-visibility analysis for directed graphs", "mvd"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input", opt.input, "Edge-list file (default: stdin)");

  auto* analyze = app.add_subcommand("analyze", "Components, condensation and strong bridges");
  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate set (exit 1 if not valid)");
  verify_cmd->add_option("--set", opt.set, "Comma-separated vertices, or 'all'")->required();
  verify_cmd->add_option("--variant", opt.variant, "standard|total|outer|dual");

  auto* solve = app.add_subcommand("solve", "Exact mutual-visibility number");
  solve->add_option("--variant", opt.variant, "standard|total|outer|dual");
  solve->add_option("--budget", opt.budget,
                    "Largest component to search (default 25, or $MVD_BUDGET)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference (small graphs only)");
  oracle->add_option("--set", opt.set, "Verify this set with the path-enumeration oracle");
  oracle->add_option("--variant", opt.variant, "standard|total|outer|dual");
  oracle->add_option("--cap", opt.cap, "Maximum vertex count");

  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("family", opt.family, "Generator family")->required();
  gen->add_option("params", opt.params, "Integer parameters");
  gen->add_flag("--dot", opt.dot, "Write Graphviz instead of an edge list");
  gen->footer(generator_usage());

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, in, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, in, out, false);
    if (solve->parsed()) return cmd_solve(opt, in, out);
    if (oracle->parsed()) return cmd_oracle(opt, in, out);
    if (gen->parsed()) return cmd_gen(opt, in, out);
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    if (gen->parsed()) err << generator_usage();
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mvd::cli
