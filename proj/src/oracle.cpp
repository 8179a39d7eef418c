#include "stpec/oracle.hpp"

#include <algorithm>
#include <functional>

#include "stpec/planarity.hpp"

namespace stpec {

OracleResult brute_force_min_completion(const Digraph& g, int k_max) {
  if (g.vertex_count() > 10) throw GraphError("oracle refuses graphs with more than 10 vertices");
  OracleResult result;
  std::vector<Edge> candidates;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
      if (a != b && !g.adjacent(a, b)) candidates.push_back(Edge{a, b});
    }
  }
  std::vector<Edge> chosen;
  std::function<bool(size_t, int)> pick = [&](size_t from, int left) {
    if (left == 0) {
      ++result.nodes_explored;
      return is_st_planar(g.with_edges(chosen)).has_value();
    }
    for (size_t i = from; i + static_cast<size_t>(left) <= candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      if (pick(i + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= k_max; ++size) {
    chosen.clear();
    if (pick(0, size)) {
      result.minimum = size;
      result.witness = chosen;
      break;
    }
  }
  return result;
}

bool exhaustive_st_check(const Digraph& g) {
  const int n = g.vertex_count();
  if (n > 6) throw GraphError("exhaustive check refuses graphs with more than 6 vertices");
  if (n < 2 || !is_acyclic(g)) return false;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) return false;
    if (g.in_degree(v) == 0) sources.push_back(v);
    if (g.out_degree(v) == 0) sinks.push_back(v);
  }
  if (sources.size() != 1 || sinks.size() != 1 || !is_connected(g)) return false;
  const Vertex s = sources.front();
  const Vertex t = sinks.front();

  RotationSystem rs;
  for (const Edge& e : g.edges()) rs.ends.emplace_back(e.tail, e.head);
  rs.rotation.resize(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& rot = rs.rotation[static_cast<size_t>(v)];
    rot = g.incident(v);
    std::sort(rot.begin(), rot.end());
  }
  // Fix the first edge at each vertex; permute the rest.
  std::function<bool(Vertex)> visit = [&](Vertex v) {
    if (v == n) {
      const auto faces = trace_faces(rs);
      if (n - g.edge_count() + static_cast<int>(faces.size()) != 2) return false;
      return std::any_of(faces.begin(), faces.end(), [&](const std::vector<Dart>& face) {
        bool has_s = false;
        bool has_t = false;
        for (const Dart& d : face) {
          has_s = has_s || d.from == s;
          has_t = has_t || d.from == t;
        }
        return has_s && has_t;
      });
    }
    auto& rot = rs.rotation[static_cast<size_t>(v)];
    const auto saved = rot;
    bool found = false;
    do {
      found = visit(v + 1);
    } while (!found && std::next_permutation(rot.begin() + 1, rot.end()));
    rot = saved;
    return found;
  };
  return visit(0);
}

}  // namespace stpec
