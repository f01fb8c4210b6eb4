#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class InputFormat { Auto, EdgeList, Graph6 };

// Edge-list text: "n m" followed by m pairs "u v", whitespace separated and
// 0-indexed. Lines whose first non-blank character is '#' are comments.
// Several graphs may follow one another in one stream.
std::vector<Graph> parse_edge_lists(std::istream& in);
std::string to_edge_list(const Graph& g);
/// The same content on a single line: "n m u1 v1 u2 v2 ...".
std::string to_edge_list_line(const Graph& g);

// Standard graph6 (no header), one graph per line.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Reads every graph in the stream. Auto picks edge-list when the first
/// non-comment line starts with a digit, graph6 otherwise.
std::vector<Graph> read_graphs(std::istream& in, InputFormat format = InputFormat::Auto);

}  // namespace mds
