#include "mds/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace mds {

namespace {

struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      if (word.front() == '#') break;
      tokens.push_back({word, number});
    }
  }
  return tokens;
}

long parse_int(const Token& t, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
    throw ParseError(t.line, std::string("expected integer ") + what + ", got '" + t.text + "'");
  return value;
}

constexpr int kGraph6Offset = 63;

}  // namespace

std::vector<Graph> parse_edge_lists(std::istream& in) {
  const auto tokens = tokenize(in);
  std::vector<Graph> graphs;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& head = tokens[i];
    if (i + 1 >= tokens.size()) throw ParseError(head.line, "header needs two integers 'n m'");
    const long n = parse_int(tokens[i], "vertex count n");
    const long m = parse_int(tokens[i + 1], "edge count m");
    if (n < 1 || n > kMaxVertices)
      throw ParseError(head.line, "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
    if (m < 0) throw ParseError(head.line, "negative edge count");
    i += 2;
    std::vector<Edge> edges;
    for (long e = 0; e < m; ++e) {
      if (i + 1 >= tokens.size())
        throw ParseError(tokens.empty() ? 0 : tokens.back().line,
                         "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
      const long u = parse_int(tokens[i], "endpoint");
      const long v = parse_int(tokens[i + 1], "endpoint");
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError(tokens[i].line, "endpoint out of range 0.." + std::to_string(n - 1));
      if (u == v) throw ParseError(tokens[i].line, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      i += 2;
    }
    graphs.push_back(make_graph(static_cast<int>(n), edges));
  }
  return graphs;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_edge_list_line(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count();
  for (auto [u, v] : g.edges()) out << ' ' << u << ' ' << v;
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  auto byte = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError(1, "graph6 string truncated");
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kGraph6Offset || c > 126) throw ParseError(1, "invalid graph6 character '" + std::string(1, line[i]) + "'");
    return c - kGraph6Offset;
  };
  std::size_t pos = 0;
  long n = 0;
  if (line.empty()) throw ParseError(1, "empty graph6 string");
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else {
    if (line.size() > 1 && byte(1) == 63) throw ParseError(1, "graph6 order too large");
    n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices)
    throw ParseError(1, "graph6 order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - pos != need)
    throw ParseError(1, "graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                            std::to_string(need));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if ((byte(pos + k / 6) >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
  return make_graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kGraph6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kGraph6Offset));
    out.push_back(static_cast<char>((n & 63) + kGraph6Offset));
  }
  int acc = 0, used = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kGraph6Offset));
  return out;
}

std::vector<Graph> read_graphs(std::istream& in, InputFormat format) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (format == InputFormat::Auto) {
    format = InputFormat::Graph6;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (std::isdigit(static_cast<unsigned char>(line[first]))) format = InputFormat::EdgeList;
      break;
    }
  }
  std::istringstream stream(text);
  if (format == InputFormat::EdgeList) return parse_edge_lists(stream);

  std::vector<Graph> graphs;
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      graphs.push_back(parse_graph6(line.substr(first)));
    } catch (const ParseError& e) {
      // Re-anchor the single-line error to its position in the stream.
      std::string msg = e.what();
      throw ParseError(number, msg.substr(msg.find(": ") + 2));
    }
  }
  return graphs;
}

}  // namespace mds
