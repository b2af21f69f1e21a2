#include "mvd/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>
#include <unordered_map>

#include "mvd/error.hpp"

namespace mvd {
namespace {

constexpr std::uint64_t kMaxNumericId = 100'000'000;
constexpr std::string_view kVerticesDirective = "vertices";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_id(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

struct RawLine {
  std::size_t number;
  std::string_view tail;
  std::string_view head;
};

}  // namespace

EdgeListDocument parse_edge_list(std::string_view text) {
  std::vector<RawLine> lines;
  std::vector<std::string_view> declared;
  std::size_t declared_line = 0;
  bool all_numeric = true;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#') {
      // "# vertices ..." or "#vertices ..."
      std::vector<std::string_view> rest(tokens.begin() + 1, tokens.end());
      std::string_view first = tokens.front().substr(1);
      if (first.empty() && !rest.empty()) {
        first = rest.front();
        rest.erase(rest.begin());
      }
      if (first == kVerticesDirective) {
        if (!declared.empty() || declared_line != 0) {
          throw ParseError(line_no, "duplicate vertices directive");
        }
        declared = std::move(rest);
        declared_line = line_no;
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected \"u v\", got " +
                                    std::to_string(tokens.size()) + " token(s)");
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop on \"" + std::string(tokens[0]) + "\"");
    }
    std::uint64_t scratch = 0;
    if (!parse_id(tokens[0], scratch) || !parse_id(tokens[1], scratch)) {
      all_numeric = false;
    }
    lines.push_back({line_no, tokens[0], tokens[1]});
  }

  std::uint64_t declared_count = 0;
  bool count_directive = declared.size() == 1 && parse_id(declared[0], declared_count);
  if (!declared.empty() && !count_directive) all_numeric = false;

  EdgeListDocument doc;
  if (all_numeric) {
    std::uint64_t max_id = 0;
    bool any = false;
    for (const RawLine& l : lines) {
      std::uint64_t u = 0, v = 0;
      parse_id(l.tail, u);
      parse_id(l.head, v);
      if (u > kMaxNumericId || v > kMaxNumericId) {
        throw ParseError(l.number, "vertex id exceeds " + std::to_string(kMaxNumericId));
      }
      // "01" and "1" name the same vertex.
      if (u == v) throw ParseError(l.number, "self-loop on vertex " + std::to_string(u));
      if (count_directive && (u >= declared_count || v >= declared_count)) {
        throw ParseError(l.number, "vertex id not below declared count " +
                                       std::to_string(declared_count));
      }
      max_id = std::max({max_id, u, v});
      any = true;
      doc.pairs.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    if (count_directive) {
      if (declared_count > kMaxNumericId) {
        throw ParseError(declared_line, "declared vertex count too large");
      }
      doc.vertex_count = declared_count;
    } else {
      doc.vertex_count = any ? max_id + 1 : 0;
    }
    return doc;
  }

  std::unordered_map<std::string_view, VertexId> index;
  auto intern = [&](std::string_view name) {
    auto [it, inserted] = index.emplace(name, static_cast<VertexId>(doc.labels.size()));
    if (inserted) doc.labels.emplace_back(name);
    return it->second;
  };
  for (std::string_view name : declared) {
    if (index.count(name)) throw ParseError(declared_line, "duplicate declared vertex \"" + std::string(name) + "\"");
    intern(name);
  }
  for (const RawLine& l : lines) {
    doc.pairs.push_back({intern(l.tail), intern(l.head)});
  }
  doc.vertex_count = doc.labels.size();
  return doc;
}

Digraph from_edge_list(std::string_view text) {
  EdgeListDocument doc = parse_edge_list(text);
  return Digraph(doc.vertex_count, std::move(doc.pairs), std::move(doc.labels));
}

Digraph from_edge_list(std::istream& in) { return from_edge_list(read_all(in)); }

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string to_edge_list(const Digraph& graph) {
  const std::size_t n = graph.vertex_count();
  const std::vector<Arc> arcs = graph.arcs();
  std::string header;

  if (!graph.has_labels()) {
    std::size_t implied = 0;
    for (const Arc& a : arcs) implied = std::max<std::size_t>({implied, a.tail + 1u, a.head + 1u});
    if (implied != n) header = "# vertices " + std::to_string(n);
  } else {
    // Named documents index vertices by first appearance.
    std::vector<char> seen(n, 0);
    VertexId next = 0;
    bool in_order = true;
    for (const Arc& a : arcs) {
      for (VertexId v : {a.tail, a.head}) {
        if (seen[v]) continue;
        seen[v] = 1;
        if (v != next++) in_order = false;
      }
    }
    if (!in_order || next != n) {
      header = "# vertices";
      for (const std::string& l : graph.labels()) header += " " + l;
    }
  }

  std::string out = header;
  for (const Arc& a : arcs) {
    if (!out.empty()) out += '\n';
    out += graph.label(a.tail);
    out += ' ';
    out += graph.label(a.head);
  }
  return out;
}

namespace {
std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + "\"";
}
}  // namespace

std::string to_dot(const Digraph& graph) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << quoted(graph.label(v)) << ";\n";
  }
  for (const Arc& a : graph.arcs()) {
    out << "  " << quoted(graph.label(a.tail)) << " -> " << quoted(graph.label(a.head)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mvd
