#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lgtw/lgtw.hpp"

namespace lgtw::cli {

struct Options {
  int threads = 1;  // accepted for interface stability; solvers run sequentially
  bool verbose = false;

  std::string problem, graph, input, output, which, family, parity = "even", mode = "fast", s = "1/10";
  std::vector<int> params;
  bool line = false, exact = false, no_witness = false;
  int limit = 0, resolution = 8, max_n = 5, random = 0;
  unsigned seed = 1;
};

namespace detail {

inline std::string witness_path(const Options& o, const std::string& base, const std::string& suffix) {
  if (!o.output.empty()) return o.output;
  std::filesystem::path p(base);
  p.replace_extension("");
  return p.string() + suffix;
}

inline SolverLimits limits_for(const Options& o) {
  SolverLimits l;
  if (o.limit > 0) l.tree_congestion = l.path_dp = l.treewidth = l.pathwidth = o.limit;
  return l;
}

template <class Write>
void emit(std::ostream& out, const Options& o, const std::string& path, Write write) {
  if (o.no_witness) return;
  auto file = lgtw::detail::open_output(path);
  write(file);
  out << "witness " << path << '\n';
}

inline int run_exact(const Options& o, std::ostream& out, std::ostream& err) {
  Graph g = read_gr_file(o.graph).graph;
  auto limits = limits_for(o);
  const std::string& p = o.problem;
  if (o.line && p != "tw" && p != "pw") throw InvalidInput("--line applies to tw and pw only");
  if (p == "tw" || p == "pw") {
    Graph h = o.line ? line_graph(g) : g;
    std::string label = p + (o.line ? "(L)" : "");
    TreeDecomposition d;
    int value = 0;
    if (p == "tw") {
      auto r = exact_treewidth(h, limits);
      value = r.width;
      d = r.decomposition;
    } else {
      auto r = exact_pathwidth(h, limits);
      value = r.width;
      d = r.decomposition.as_tree();
    }
    if (o.line) d.subject = Subject::line_graph;
    out << label << ' ' << value << '\n';
    emit(out, o, witness_path(o, o.graph, "." + p + (o.line ? "-line" : "") + ".td"),
         [&](std::ostream& f) { write_td(f, d, h.vertex_count()); });
    return 0;
  }
  if (p == "con") {
    auto c = min_tree_congestion(g, limits);
    out << "con " << c.value << '\n';
    if (o.verbose) err << "nodes " << c.search_nodes << '\n';
    emit(out, o, witness_path(o, o.graph, ".con.emb"),
         [&](std::ostream& f) { write_emb(f, std::get<LeafEmbedding>(c.witness)); });
    return 0;
  }
  auto c = p == "cw" ? cutwidth(g, limits) : min_path_congestion(g, limits);
  out << p << ' ' << c.value << '\n';
  emit(out, o, witness_path(o, o.graph, "." + p + ".ord"),
       [&](std::ostream& f) { write_ord(f, std::get<LinearOrdering>(c.witness)); });
  return 0;
}

inline int run_bounds(const Options& o, std::ostream& out) {
  Graph g = read_gr_file(o.graph).graph;
  BoundsOptions opt;
  opt.compute_exact = o.exact;
  opt.limits = limits_for(o);
  write_report(out, bounds_report(g, opt));
  return 0;
}

inline TreeDecomposition read_subject(const std::string& path, const Graph& g, Subject expected) {
  auto file = read_td_file(path);
  if (file.declared && *file.declared != expected)
    throw InvalidInput(path + " declares a decomposition " + to_string(*file.declared) + ", expected " +
                       to_string(expected));
  if (file.ground_size != ground_size(g, expected))
    throw InvalidInput(path + " header names " + std::to_string(file.ground_size) + " elements, expected " +
                       std::to_string(ground_size(g, expected)));
  file.decomposition.subject = expected;
  return file.decomposition;
}

inline int run_construct(const Options& o, std::ostream& out) {
  Graph g = read_gr_file(o.graph).graph;
  TreeDecomposition result;
  if (o.which == "tree") {
    result = tree_line_decomposition(g);
  } else {
    if (o.input.empty()) throw InvalidInput("construct " + o.which + " needs a decomposition of G");
    TreeDecomposition d = read_subject(o.input, g, Subject::graph);
    std::optional<PathDecomposition> path;
    try {
      path = as_path(d);
    } catch (const InvalidInput&) {
    }
    out << "shape " << (path ? "path" : "tree") << '\n';
    if (o.which == "expand") {
      result = path ? expand_to_line(*path, g).as_tree() : expand_to_line(d, g);
      out << "closed-form " << (width(d) + 1) * g.max_degree() - 1 << '\n';
    } else {
      auto r = path ? balanced_subdivision_decomposition(*path, g) : balanced_subdivision_decomposition(d, g);
      result = r.decomposition;
      out << "closed-form " << to_string(r.closed_form) << '\n';
      out << "large-vertices " << r.large_vertices << '\n';
      out << "subdivisions " << r.subdivisions << '\n';
      if (r.fell_back) out << "notice " << r.notice << '\n';
    }
  }
  out << "width " << width(result) << '\n';
  emit(out, o, witness_path(o, o.graph, "." + o.which + ".td"),
       [&](std::ostream& f) { write_td(f, result, g.edge_count()); });
  return 0;
}

inline int run_normalize(const Options& o, std::ostream& out) {
  Graph g = read_gr_file(o.graph).graph;
  TreeDecomposition d = read_subject(o.input, g, Subject::line_graph);
  auto nf = normalize_line_decomposition(d, g);
  out << "input-width " << width(d) << '\n';
  out << "width " << width(nf.decomposition) << '\n';
  emit(out, o, witness_path(o, o.input, ".normal.td"), [&](std::ostream& f) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (nf.base.node_of[v] >= 0) f << "c base " << v + 1 << ' ' << nf.base.node_of[v] + 1 << '\n';
    write_td(f, nf.decomposition, g.edge_count());
  });
  return 0;
}

inline int run_transform(const Options& o, std::ostream& out) {
  Graph g = read_gr_file(o.graph).graph;
  TreeDecomposition d = read_subject(o.input, g, Subject::line_graph);
  auto result = line_to_graph_decomposition(d, g);
  out << "input-width " << width(d) << '\n';
  out << "width " << width(result) << '\n';
  emit(out, o, witness_path(o, o.input, ".graph.td"),
       [&](std::ostream& f) { write_td(f, result, g.vertex_count()); });
  return 0;
}

inline FamilySpec family_spec(const std::string& name, const std::vector<int>& params) {
  auto f = family_from_name(name);
  if (!f) throw InvalidInput("unknown family " + name);
  return {*f, params};
}

inline int run_gen(const Options& o, std::ostream& out) {
  FamilySpec spec = family_spec(o.family, o.params);
  Graph g = generate(spec);
  if (o.output.empty()) {
    write_gr(out, g, {family_comment(spec)});
  } else {
    write_gr_file(o.output, g, {family_comment(spec)});
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    out << "wrote " << o.output << '\n';
  }
  return 0;
}

inline int run_sharp(const Options& o, std::ostream& out) {
  auto file = read_gr_file(o.graph);
  std::optional<FamilySpec> spec;
  for (const auto& c : file.comments)
    if (auto s = spec_from_comment(c); s && (o.family.empty() || o.family == to_string(s->family))) spec = s;
  if (!spec) {
    if (o.family.empty()) throw InvalidInput("no family comment in " + o.graph + "; pass --family");
    auto f = family_from_name(o.family);
    if (!f) throw InvalidInput("unknown family " + o.family);
    spec = recognize(file.graph, *f);
    if (!spec) throw InvalidInput(o.graph + " is not a member of family " + o.family);
  }
  if (generate(*spec) != file.graph)
    throw InvalidInput(o.graph + " does not match its family comment " + to_string(*spec));
  auto r = sharp_embedding(*spec);
  out << "family " << to_string(*spec) << '\n';
  out << "width " << r.width << '\n';
  out << "closed-form " << to_string(r.closed_form) << (r.closed_form_is_exact ? "" : " (upper)") << '\n';
  emit(out, o, witness_path(o, o.graph, ".sharp.td"),
       [&](std::ostream& f) { write_td(f, r.decomposition, file.graph.edge_count()); });
  if (r.ordering && o.output.empty())
    emit(out, o, witness_path(o, o.graph, ".sharp.ord"), [&](std::ostream& f) { write_ord(f, *r.ordering); });
  return 0;
}

inline int run_validate(const Options& o, std::ostream& out) {
  Graph g = read_gr_file(o.graph).graph;
  const std::string ext = std::filesystem::path(o.input).extension().string();
  if (ext == ".td") {
    auto file = read_td_file(o.input);
    Subject subject = o.line ? Subject::line_graph : file.declared.value_or(Subject::graph);
    if (file.ground_size != ground_size(g, subject))
      throw InvalidInput("header names " + std::to_string(file.ground_size) + " elements, expected " +
                         std::to_string(ground_size(g, subject)));
    file.decomposition.subject = subject;
    auto report = validate(file.decomposition, g);
    if (!report) {
      out << "invalid " << report.message << '\n';
      return 1;
    }
    out << "valid " << to_string(subject) << " width " << width(file.decomposition) << '\n';
    return 0;
  }
  if (ext == ".emb") {
    auto e = read_emb_file(o.input);
    if (auto defect = embedding_defect(e, g)) {
      out << "invalid " << *defect << '\n';
      return 1;
    }
    out << "valid con " << vertex_congestion(e, g).value << '\n';
    return 0;
  }
  if (ext == ".ord") {
    auto ord = read_ord_file(o.input);
    try {
      int pc = path_congestion(ord, g);
      out << "valid pcon " << pc << " cw " << cutwidth_of(ord, g) << '\n';
    } catch (const InvalidInput& e) {
      out << "invalid " << e.what() << '\n';
      return 1;
    }
    return 0;
  }
  throw InvalidInput("cannot tell the file type of " + o.input + " (expected .td, .emb or .ord)");
}

inline void write_search(std::ostream& out, const GridSearchResult& r) {
  out << "resolution " << r.resolution << '\n';
  out << "feasible-points " << r.feasible_points << '\n';
  if (r.feasible) {
    out << "extremum " << to_string(r.extremum) << '\n';
    out << "at";
    for (std::size_t i = 0; i < r.point.size(); ++i)
      out << ' ' << r.coordinate_names[i] << '=' << to_string(r.point[i]);
    out << '\n';
  }
  out << "closed-form " << to_string(r.closed_form) << '\n';
  if (r.feasible) out << "gap " << to_string(r.gap) << '\n';
  if (!r.notice.empty()) out << "note " << r.notice << '\n';
}

inline int run_appendix(const Options& o, std::ostream& out) {
  if (o.which == "c") {
    auto r = search_separator_balance_maximum(o.resolution, o.mode == "full" ? SearchMode::full : SearchMode::fast);
    out << "appendix c " << o.mode << '\n';
    write_search(out, r);
    bool holds = r.extremum <= r.closed_form;
    out << "holds " << (holds ? "yes" : "no") << '\n';
    return holds ? 0 : 1;
  }
  Rational s = parse_rational(o.s);
  GridSearchResult r;
  if (o.which == "a") {
    r = search_sum_quadratic_minimum(s, o.resolution);
    out << "appendix a\n";
  } else {
    Parity p = o.parity == "odd" ? Parity::odd : Parity::even;
    r = search_cross_quadratic_minimum(s, p, o.resolution);
    out << "appendix b " << to_string(p) << '\n';
  }
  out << "s " << to_string(s) << '\n';
  write_search(out, r);
  if (!r.feasible) return 1;
  bool holds = r.extremum >= r.closed_form;
  out << "holds " << (holds ? "yes" : "no") << '\n';
  return holds ? 0 : 1;
}

/// Exhaustive cross-checks of the congestion identities and the bound ordering
/// on all connected graphs up to max_n vertices, plus optional random graphs.
inline int run_theorems(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_n < 2 || o.max_n > 7) throw InvalidInput("--max-n must lie in 2..7");
  std::vector<Graph> suite;
  for (int n = 2; n <= o.max_n; ++n)
    for (auto& g : connected_graphs(n)) suite.push_back(std::move(g));
  std::mt19937 rng(o.seed);
  for (int i = 0; i < o.random; ++i) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    int m = std::uniform_int_distribution<int>(1, std::min(10, n * (n - 1) / 2))(rng);
    suite.push_back(random_graph(rng, n, m));
  }
  std::map<std::string, int> failures;
  std::vector<std::string> order{"tree-congestion", "path-congestion", "cutwidth-sandwich", "bound-ordering",
                                 "normal-form", "line-to-graph"};
  for (const auto& name : order) failures[name] = 0;
  auto check = [&](const std::string& name, const Graph& g, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      if (o.verbose) err << name << ": " << e.what() << '\n';
    }
    if (!ok) {
      ++failures[name];
      if (o.verbose) {
        err << name << " failed on:\n";
        write_gr(err, g);
      }
    }
  };
  int graphs = 0;
  for (const Graph& g : suite) {
    if (g.edge_count() == 0) continue;
    ++graphs;
    Graph l = line_graph(g);
    auto tw = exact_treewidth(l);
    auto pw = exact_pathwidth(l);
    check("tree-congestion", g, [&] { return min_tree_congestion(g).value == tw.width + 1; });
    check("path-congestion", g, [&] { return min_path_congestion(g).value == pw.width + 1; });
    if (g.max_degree() >= 2) check("cutwidth-sandwich", g, [&] { return cutwidth_sandwich_check(g).holds; });
    check("bound-ordering", g, [&] {
      BoundsOptions opt;
      opt.compute_exact = true;
      auto r = bounds_report(g, opt);
      return r.exact_tw_line == tw.width && r.exact_pw_line == pw.width;
    });
    TreeDecomposition dl = tw.decomposition;
    dl.subject = Subject::line_graph;
    check("normal-form", g, [&] {
      auto nf = normalize_line_decomposition(dl, g);
      return check_normal_form(nf, g).ok() && width(nf.decomposition) <= tw.width;
    });
    check("line-to-graph", g, [&] {
      auto d = line_to_graph_decomposition(dl, g);
      return validate(d, g).ok() && width(d) <= tw.width + 1;
    });
  }
  int total = 0;
  for (const auto& name : order) {
    out << "check " << name << ' ' << (failures[name] ? "FAIL" : "ok") << ' ' << failures[name] << " failures\n";
    total += failures[name];
  }
  out << "graphs " << graphs << '\n';
  return total ? 1 : 0;
}

}  // namespace detail

/// Parses args (without the program name) and runs one subcommand. Exit codes:
/// 0 success, 1 domain error or failed check, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Treewidth and pathwidth of line graphs via vertex congestion", "lgtw"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "Upper bound on worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--verbose", o.verbose, "Report search node counts on stderr");

  auto witness_flags = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Witness output path");
    sub->add_flag("--no-witness", o.no_witness, "Do not write witness files");
  };

  auto* exact = app.add_subcommand("exact", "Exact tw, pw, cw, con or pcon of a graph");
  exact->add_option("problem", o.problem)->required()->check(CLI::IsMember({"tw", "pw", "cw", "con", "pcon"}));
  exact->add_option("graph", o.graph, ".gr file")->required();
  exact->add_flag("--line", o.line, "Solve tw/pw on L(G)");
  exact->add_option("--limit", o.limit, "Override the solver size limit")->check(CLI::PositiveNumber);
  witness_flags(exact);

  auto* bounds = app.add_subcommand("bounds", "Bound report for tw(L(G)) and pw(L(G))");
  bounds->add_option("graph", o.graph)->required();
  bounds->add_flag("--exact", o.exact, "Also compute exact values");
  bounds->add_option("--limit", o.limit, "Override the solver size limits")->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Decomposition of L(G) from one of G");
  construct->add_option("method", o.which)->required()->check(CLI::IsMember({"expand", "improved", "tree"}));
  construct->add_option("decomposition", o.input, ".td of G (not used by 'tree')");
  construct->add_option("--graph", o.graph)->required();
  witness_flags(construct);

  auto* normalize = app.add_subcommand("normalize", "Normal form of a decomposition of L(G)");
  normalize->add_option("decomposition", o.input)->required();
  normalize->add_option("--graph", o.graph)->required();
  witness_flags(normalize);

  auto* transform = app.add_subcommand("transform", "Decomposition of G from one of L(G)");
  transform->add_option("direction", o.which)->required()->check(CLI::IsMember({"lg-to-g"}));
  transform->add_option("decomposition", o.input)->required();
  transform->add_option("--graph", o.graph)->required();
  witness_flags(transform);

  auto* gen = app.add_subcommand("gen", "Generate a family member as .gr");
  gen->add_option("family", o.family)
      ->required()
      ->check(CLI::IsMember({"complete", "complete-bipartite", "path-power", "cycle-power", "cycle-power-matched",
                             "grid-cliques"}));
  gen->add_option("params", o.params)->required();
  gen->add_option("-o,--output", o.output, "Output .gr (stdout if omitted)");

  auto* sharp = app.add_subcommand("sharp", "Sharp path decomposition of L(G) for a family member");
  sharp->add_option("graph", o.graph)->required();
  sharp->add_option("--family", o.family);
  witness_flags(sharp);

  auto* validate_cmd = app.add_subcommand("validate", "Check a .td, .emb or .ord witness");
  validate_cmd->add_option("witness", o.input)->required();
  validate_cmd->add_option("--graph", o.graph)->required();
  validate_cmd->add_flag("--line", o.line, "Treat a .td as a decomposition of L(G)");

  auto* verify = app.add_subcommand("verify", "Optimisation grid searches and exhaustive identity checks");
  verify->require_subcommand(1);
  auto* appendix = verify->add_subcommand("appendix", "Exact grid search: a sum-quadratic, b cross-quadratic, c separator balance");
  appendix->add_option("which", o.which)->required()->check(CLI::IsMember({"a", "b", "c"}));
  appendix->add_option("--s", o.s, "Parameter s (a/b), e.g. 1/10 or 0.1");
  appendix->add_option("--parity", o.parity)->check(CLI::IsMember({"even", "odd"}));
  appendix->add_option("--resolution", o.resolution)->check(CLI::PositiveNumber);
  appendix->add_option("--mode", o.mode)->check(CLI::IsMember({"fast", "full"}));
  auto* theorems = verify->add_subcommand("theorems", "Congestion identities and bound ordering on small graphs");
  theorems->add_option("--max-n", o.max_n);
  theorems->add_option("--random", o.random, "Additional random graphs (up to 8 vertices, 10 edges)");
  theorems->add_option("--seed", o.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'lgtw --help' for usage\n";
    return 2;
  }

  try {
    if (*exact) return detail::run_exact(o, out, err);
    if (*bounds) return detail::run_bounds(o, out);
    if (*construct) return detail::run_construct(o, out);
    if (*normalize) return detail::run_normalize(o, out);
    if (*transform) return detail::run_transform(o, out);
    if (*gen) return detail::run_gen(o, out);
    if (*sharp) return detail::run_sharp(o, out);
    if (*validate_cmd) return detail::run_validate(o, out);
    if (*appendix) return detail::run_appendix(o, out);
    if (*theorems) return detail::run_theorems(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace lgtw::cli
