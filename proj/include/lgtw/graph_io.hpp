#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"

namespace lgtw {

/// A parsed .gr file: the graph plus its comment lines (without the leading "c ").
struct GraphFile {
  Graph graph;
  std::vector<std::string> comments;
};

namespace detail {

inline bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline bool is_comment(const std::string& line) {
  return line.size() >= 1 && line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t');
}

inline std::string comment_text(const std::string& line) {
  return line.size() > 2 ? line.substr(2) : std::string{};
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  return out;
}

}  // namespace detail

/// PACE-style graph: "c ..." comments, header "p tw <n> <m>", then m lines "<u> <v>".
inline GraphFile read_gr(std::istream& in) {
  GraphFile file;
  std::string line;
  int n = -1, m = -1, line_no = 0;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& msg) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    if (detail::is_comment(line)) {
      file.comments.push_back(detail::comment_text(line));
      continue;
    }
    std::istringstream ls(line);
    if (n < 0) {
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
        fail("expected header 'p tw <n> <m>'");
      continue;
    }
    int u = 0, v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) fail("expected an edge line '<u> <v>'");
    if (u < 1 || v < 1 || u > n || v > n) fail("endpoint out of range 1.." + std::to_string(n));
    edges.push_back({u - 1, v - 1});
  }
  if (n < 0) throw InvalidInput("missing 'p tw' header");
  if (static_cast<int>(edges.size()) != m)
    throw InvalidInput("header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
  file.graph = Graph(n, std::move(edges));
  return file;
}

inline GraphFile read_gr_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_gr(in);
}

/// Writes edges in canonical EdgeId order.
inline void write_gr(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline void write_gr_file(const std::string& path, const Graph& g,
                          const std::vector<std::string>& comments = {}) {
  auto out = detail::open_output(path);
  write_gr(out, g, comments);
}

}  // namespace lgtw
