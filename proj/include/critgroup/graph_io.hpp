#pragma once

#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace critgroup {

// Graph file format:
//
//   # comment (also allowed after the fields of a line)
//   digraph 4          (or "graph 4" for an undirected graph)
//   0 1                one arc (or undirected edge) per line
//   1 2 3              optional trailing multiplicity, >= 1
//
// Vertices are 0-based. Undirected edges are listed once and expanded into a
// pair of opposite arcs on load.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline Digraph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  bool undirected = false;
  std::size_t n = 0;
  std::vector<std::int64_t> mult;

  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    text = text.substr(0, text.find('#'));
    const auto tokens = detail::split_ws(text);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || (tokens[0] != "digraph" && tokens[0] != "graph"))
        throw ParseError(line, "expected header 'digraph <n>' or 'graph <n>'");
      undirected = tokens[0] == "graph";
      n = detail::parse_count(tokens[1], line, "vertex count");
      mult.assign(n * n, 0);
      have_header = true;
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) throw ParseError(line, "expected 'tail head [multiplicity]'");
    const auto tail = detail::parse_count(tokens[0], line, "tail");
    const auto head = detail::parse_count(tokens[1], line, "head");
    const std::uint64_t k = tokens.size() == 3 ? detail::parse_count(tokens[2], line, "multiplicity") : 1;
    if (tail >= n || head >= n) throw ParseError(line, "vertex index out of range (n = " + std::to_string(n) + ")");
    if (tail == head) throw ParseError(line, "loops are not allowed");
    if (k == 0) throw ParseError(line, "multiplicity must be at least 1");
    mult[tail * n + head] += static_cast<std::int64_t>(k);
    if (undirected) mult[head * n + tail] += static_cast<std::int64_t>(k);
  }
  if (!have_header) throw ParseError(line, "missing 'digraph <n>' or 'graph <n>' header");
  return Digraph(n, std::move(mult), undirected);
}

inline Digraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

inline Digraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file " + path.string());
  return parse_graph(in);
}

/// Writes the format parse_graph reads. Graphs flagged undirected (and
/// symmetric) are written as "graph" with each edge once.
inline std::string serialize_graph(const Digraph& g) {
  std::ostringstream os;
  const bool undirected = g.undirected_flag() && g.is_symmetric();
  os << (undirected ? "graph " : "digraph ") << g.size() << '\n';
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w = undirected ? v + 1 : 0; w < g.size(); ++w) {
      const auto k = g.arcs(v, w);
      if (k == 0) continue;
      os << v << ' ' << w;
      if (k > 1) os << ' ' << k;
      os << '\n';
    }
  return os.str();
}

}  // namespace critgroup
