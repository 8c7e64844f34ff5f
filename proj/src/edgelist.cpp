#include "sgraph/edgelist.hpp"

#include <fstream>
#include <sstream>

namespace sgraph {

namespace {

bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

}  // namespace

SignedGraph read_edge_list(std::istream& in) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  std::vector<SignedEdge> edges;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;     // blank line
    if (first.front() == '#') continue;  // comment line

    if (!have_header) {
      if (first != "n") throw ParseError(line_no, "expected header 'n <count>'");
      std::string count;
      if (!(tokens >> count) || !parse_int(count, n) || n < 0)
        throw ParseError(line_no, "vertex count must be a non-negative integer");
      std::string extra;
      if (tokens >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
      have_header = true;
      continue;
    }

    std::string vtok, stok;
    if (!(tokens >> vtok >> stok)) throw ParseError(line_no, "expected 'u v s'");
    std::string extra;
    if (tokens >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");

    long long u, v;
    if (!parse_int(first, u) || !parse_int(vtok, v))
      throw ParseError(line_no, "edge endpoints must be integers");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "edge endpoint out of range");
    if (u == v) throw ParseError(line_no, "loops are not allowed");
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (stok.size() != 1 || (stok[0] != '+' && stok[0] != '-'))
      throw ParseError(line_no, "sign must be '+' or '-'");

    for (const auto& e : edges)
      if (e.u == u && e.v == v) throw ParseError(line_no, "duplicate edge");
    edges.push_back({static_cast<int>(u), static_cast<int>(v), sign_from_char(stok[0])});
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n <count>'");
  return SignedGraph::from_edges(static_cast<int>(n), std::move(edges));
}

SignedGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

SignedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

std::string write_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << " " << to_char(e.sign) << "\n";
  return out.str();
}

void write_edge_list_file(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_edge_list(g);
}

}  // namespace sgraph
