#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lgtw/decomposition.hpp"
#include "lgtw/error.hpp"
#include "lgtw/graph_io.hpp"

namespace lgtw {

/// A parsed .td file. ground_size is the header's element count (n for G, m for
/// L(G)); declared is set when a "c subject ..." comment names the subject.
struct DecompositionFile {
  TreeDecomposition decomposition;
  int ground_size = 0;
  std::optional<Subject> declared;
};

/// "s td <bags> <max bag size> <ground size>", then "b <id> <elements...>" for
/// every bag, then tree edges "<i> <j>". Everything is 1-based. A path
/// decomposition is written as a .td whose tree is the path 1-2-...-N.
inline void write_td(std::ostream& out, const TreeDecomposition& d, int ground_size) {
  std::size_t largest = 0;
  for (const auto& b : d.bags) largest = std::max(largest, b.size());
  out << "c subject " << to_string(d.subject) << '\n';
  out << "s td " << d.node_count() << ' ' << largest << ' ' << ground_size << '\n';
  for (NodeId x = 0; x < d.node_count(); ++x) {
    out << "b " << x + 1;
    for (int e : d.bags[x]) out << ' ' << e + 1;
    out << '\n';
  }
  for (auto [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

inline void write_td(std::ostream& out, const PathDecomposition& d, int ground_size) {
  write_td(out, d.as_tree(), ground_size);
}

inline DecompositionFile read_td(std::istream& in) {
  DecompositionFile file;
  std::string line;
  int bags = -1, largest = -1, line_no = 0;
  std::vector<char> seen;
  auto fail = [&](const std::string& msg) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_blank(line)) continue;
    if (detail::is_comment(line)) {
      std::istringstream cs(detail::comment_text(line));
      std::string key, value;
      if (cs >> key >> value && key == "subject") {
        if (value == to_string(Subject::graph)) file.declared = Subject::graph;
        else if (value == to_string(Subject::line_graph)) file.declared = Subject::line_graph;
        else fail("unknown subject " + value);
      }
      continue;
    }
    std::istringstream ls(line);
    if (bags < 0) {
      std::string s, td;
      if (!(ls >> s >> td >> bags >> largest >> file.ground_size) || s != "s" || td != "td" || bags < 0 ||
          largest < 0 || file.ground_size < 0)
        fail("expected header 's td <bags> <max bag size> <n>'");
      file.decomposition.bags.assign(bags, {});
      seen.assign(bags, 0);
      continue;
    }
    if (line[line.find_first_not_of(" \t")] == 'b') {
      std::string b;
      int id = 0;
      if (!(ls >> b >> id) || b != "b") fail("expected a bag line 'b <id> <elements>'");
      if (id < 1 || id > bags) fail("bag id out of range 1.." + std::to_string(bags));
      if (seen[id - 1]++) fail("bag " + std::to_string(id) + " listed twice");
      Bag bag;
      std::string token;
      while (ls >> token) {
        int e = 0;
        try {
          std::size_t used = 0;
          e = std::stoi(token, &used);
          if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
          fail("bad element '" + token + "'");
        }
        if (e < 1 || e > file.ground_size) fail("element out of range 1.." + std::to_string(file.ground_size));
        bag.push_back(e - 1);
      }
      canonicalize(bag);
      if (static_cast<int>(bag.size()) > largest) fail("bag larger than the declared maximum");
      file.decomposition.bags[id - 1] = std::move(bag);
      continue;
    }
    int a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra)) fail("expected a tree edge '<i> <j>'");
    if (a < 1 || b < 1 || a > bags || b > bags) fail("tree edge endpoint out of range");
    file.decomposition.tree_edges.push_back({a - 1, b - 1});
  }
  if (bags < 0) throw InvalidInput("missing 's td' header");
  for (int x = 0; x < bags; ++x)
    if (!seen[x]) throw InvalidInput("bag " + std::to_string(x + 1) + " is missing");
  if (file.declared) file.decomposition.subject = *file.declared;
  return file;
}

inline DecompositionFile read_td_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_td(in);
}

inline void write_td_file(const std::string& path, const TreeDecomposition& d, int ground_size) {
  auto out = detail::open_output(path);
  write_td(out, d, ground_size);
}

/// Elements of a decomposition of L(G) are edge ids, so the ground size is m.
inline int ground_size(const Graph& g, Subject s) {
  return s == Subject::graph ? g.vertex_count() : g.edge_count();
}

}  // namespace lgtw
