#include "stpec/commands.hpp"

#include <ostream>
#include <sstream>

#include "stpec/generate.hpp"
#include "stpec/io.hpp"
#include "stpec/oracle.hpp"

namespace stpec {

std::string render_result(const SolveResult& result) {
  if (result.rejected) return "Reject(" + std::string(to_string(*result.rejected)) + ")";
  if (!result.yes) return "NO";
  return "YES " + std::to_string(*result.min_edges);
}

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
  Digraph g;
  try {
    g = load_instance(cmd.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParseError;
  }
  if (cmd.k < 0) {
    err << "error: k must be non-negative\n";
    return exit_code::kParseError;
  }
  SolveOptions options;
  options.jobs = cmd.jobs;
  if (cmd.ref_edge) {
    auto [a, b] = *cmd.ref_edge;
    auto e = g.find_edge(a, b);
    if (!e) e = g.find_edge(b, a);
    if (!e) {
      err << "error: no edge between " << a << " and " << b << '\n';
      return exit_code::kParseError;
    }
    options.ref_edge = *e;
  }
  std::optional<PlanarEmbedding> embedding;
  if (cmd.fixed_embedding && is_connected(g)) {
    embedding = test_planarity(g);
    if (embedding) options.fixed_embedding = &*embedding;
  }
  std::ostringstream trace;
  if (cmd.trace) options.trace = &trace;

  const SolveResult result = solve(g, cmd.k, options);
  if (result.rejected) {
    out << render_result(result) << '\n';
    return exit_code::kRejected;
  }
  out << render_result(result) << '\n';
  if (cmd.witness && result.yes) out << emit_edges(*result.witness);
  if (cmd.trace) {
    out << trace.str();
    for (const auto& r : result.per_edge) {
      const Edge& e = g.edge(r.edge);
      out << "ref " << e.tail << "->" << e.head << ": " << (r.cost ? std::to_string(*r.cost) : "none") << '\n';
    }
  }
  if (cmd.oracle_check) {
    if (g.vertex_count() > 10) {
      err << "oracle check skipped: more than 10 vertices\n";
    } else {
      const OracleResult oracle = brute_force_min_completion(g, cmd.k);
      const bool agree = oracle.minimum.has_value() == result.yes &&
                         (!result.yes || *oracle.minimum == *result.min_edges);
      if (!agree) {
        out << "oracle disagrees: " << (oracle.minimum ? "YES " + std::to_string(*oracle.minimum) : "NO") << '\n';
        return exit_code::kOracleDisagrees;
      }
      out << "oracle agrees\n";
    }
  }
  return result.yes ? exit_code::kYes : exit_code::kNo;
}

int cmd_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    if (cmd.family == "alt-cycle") {
      text = emit_instance(alt_cycle(cmd.m), "alt-cycle m=" + std::to_string(cmd.m));
    } else if (cmd.family == "random-planar") {
      text = emit_instance(random_planar(cmd.n, cmd.seed), "seed " + std::to_string(cmd.seed));
    } else {
      err << "error: unknown family '" << cmd.family << "'\n";
      return exit_code::kParseError;
    }
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParseError;
  }
  if (cmd.output.empty() || cmd.output == "-") {
    out << text;
  } else {
    write_file(cmd.output, text);
  }
  return 0;
}

int verify_completion(const Digraph& g, const std::vector<Edge>& added, std::ostream& out) {
  Digraph h;
  try {
    h = g.with_edges(added);
  } catch (const GraphError& e) {
    out << "FAIL: " << e.what() << '\n';
    return exit_code::kNo;
  }
  if (!is_acyclic(h)) {
    out << "FAIL (1): directed cycle\n";
    return exit_code::kNo;
  }
  int sources = 0;
  int sinks = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    sources += h.in_degree(v) == 0 ? 1 : 0;
    sinks += h.out_degree(v) == 0 ? 1 : 0;
  }
  if (sources != 1 || sinks != 1) {
    out << "FAIL (2): " << sources << " sources, " << sinks << " sinks\n";
    return exit_code::kNo;
  }
  if (!is_st_planar(h)) {
    out << "FAIL (3): no planar embedding with s and t on one face\n";
    return exit_code::kNo;
  }
  out << "OK\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& edges, std::ostream& out, std::ostream& err) {
  Digraph g;
  std::vector<Edge> added;
  try {
    g = load_instance(input);
    added = parse_edges(read_file(edges));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParseError;
  }
  for (const Edge& e : added) {
    if (e.tail >= g.vertex_count() || e.head >= g.vertex_count()) {
      err << "error: edge " << e.tail << ' ' << e.head << " out of range\n";
      return exit_code::kParseError;
    }
  }
  return verify_completion(g, added, out);
}

std::string to_dot(const Digraph& g, const std::vector<Edge>& added) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.tail << " -> " << e.head << ";\n";
  for (const Edge& e : added) os << "  " << e.tail << " -> " << e.head << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

int cmd_export_dot(const std::string& input, const std::optional<std::string>& edges, std::ostream& out,
                   std::ostream& err) {
  try {
    const Digraph g = load_instance(input);
    std::vector<Edge> added;
    if (edges) added = parse_edges(read_file(*edges));
    out << to_dot(g, added);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParseError;
  }
  return 0;
}

}  // namespace stpec
