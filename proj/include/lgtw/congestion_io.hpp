#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lgtw/congestion.hpp"
#include "lgtw/embedding.hpp"
#include "lgtw/error.hpp"
#include "lgtw/graph_io.hpp"

namespace lgtw {

/// "s emb <tree nodes> <n>", tree edges "t <i> <j>", leaves "l <node> <vertex>".
inline void write_emb(std::ostream& out, const LeafEmbedding& e) {
  out << "s emb " << e.node_count << ' ' << e.leaf_of.size() << '\n';
  for (auto [a, b] : e.tree_edges) out << "t " << a + 1 << ' ' << b + 1 << '\n';
  for (Vertex v = 0; v < static_cast<Vertex>(e.leaf_of.size()); ++v)
    if (e.leaf_of[v] >= 0) out << "l " << e.leaf_of[v] + 1 << ' ' << v + 1 << '\n';
}

inline LeafEmbedding read_emb(std::istream& in) {
  LeafEmbedding e;
  std::string line;
  int n = -1, line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line) || detail::is_comment(line)) continue;
    std::istringstream ls(line);
    std::string tag, extra;
    ls >> tag;
    if (n < 0) {
      std::string emb;
      if (tag != "s" || !(ls >> emb >> e.node_count >> n) || emb != "emb" || e.node_count < 0 || n < 0)
        fail("expected header 's emb <tree nodes> <n>'");
      e.leaf_of.assign(n, -1);
      continue;
    }
    int a = 0, b = 0;
    if ((tag != "t" && tag != "l") || !(ls >> a >> b) || (ls >> extra))
      fail("expected 't <i> <j>' or 'l <node> <vertex>'");
    if (a < 1 || a > e.node_count) fail("tree node out of range 1.." + std::to_string(e.node_count));
    if (tag == "t") {
      if (b < 1 || b > e.node_count) fail("tree node out of range 1.." + std::to_string(e.node_count));
      e.tree_edges.push_back({a - 1, b - 1});
    } else {
      if (b < 1 || b > n) fail("vertex out of range 1.." + std::to_string(n));
      if (e.leaf_of[b - 1] >= 0) fail("vertex " + std::to_string(b) + " assigned twice");
      e.leaf_of[b - 1] = a - 1;
    }
  }
  if (n < 0) throw InvalidInput("missing 's emb' header");
  return e;
}

/// "s ord <count>" followed by the vertex ids in position order.
inline void write_ord(std::ostream& out, const LinearOrdering& o) {
  out << "s ord " << o.order.size() << '\n';
  for (std::size_t i = 0; i < o.order.size(); ++i) out << (i ? " " : "") << o.order[i] + 1;
  out << '\n';
}

inline LinearOrdering read_ord(std::istream& in) {
  LinearOrdering o;
  std::string line;
  int count = -1;
  while (std::getline(in, line)) {
    if (detail::is_blank(line) || detail::is_comment(line)) continue;
    std::istringstream ls(line);
    if (count < 0) {
      std::string s, ord;
      if (!(ls >> s >> ord >> count) || s != "s" || ord != "ord" || count < 0)
        throw InvalidInput("expected header 's ord <n>'");
      continue;
    }
    std::string token;
    while (ls >> token) {
      try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size() || v < 1) throw std::invalid_argument(token);
        o.order.push_back(v - 1);
      } catch (const std::exception&) {
        throw InvalidInput("bad vertex id '" + token + "' in ordering");
      }
    }
  }
  if (count < 0) throw InvalidInput("missing 's ord' header");
  if (static_cast<int>(o.order.size()) != count)
    throw InvalidInput("header declares " + std::to_string(count) + " vertices, found " +
                       std::to_string(o.order.size()));
  return o;
}

inline LeafEmbedding read_emb_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_emb(in);
}

inline LinearOrdering read_ord_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_ord(in);
}

}  // namespace lgtw
