#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sgraph/graph.hpp"

namespace sgraph {

/// Parse failure with the 1-based line it happened on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Signed edge list format:
///   n <vertex-count>
///   u v s        one line per edge, 0 <= u < v < n, s in {+, -}
/// Lines starting with '#' and blank lines are ignored. Duplicate edges are
/// a parse error.
SignedGraph read_edge_list(std::istream& in);
SignedGraph read_edge_list(const std::string& text);
SignedGraph read_edge_list_file(const std::string& path);

/// Canonical serialization: header then edges sorted by (u, v).
std::string write_edge_list(const SignedGraph& g);
void write_edge_list_file(const SignedGraph& g, const std::string& path);

}  // namespace sgraph
