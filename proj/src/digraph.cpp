#include "stpec/digraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "stpec/planarity.hpp"

namespace stpec {

Digraph::Digraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      incident_(static_cast<size_t>(std::max(vertex_count, 0))),
      in_degree_(static_cast<size_t>(std::max(vertex_count, 0)), 0),
      out_degree_(static_cast<size_t>(std::max(vertex_count, 0)), 0) {
  if (vertex_count < 0) throw GraphError("negative vertex count");
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[static_cast<size_t>(id)];
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
      std::ostringstream msg;
      msg << "edge " << id << " (" << e.tail << "," << e.head << ") out of range";
      throw GraphError(msg.str());
    }
    if (e.tail == e.head) {
      std::ostringstream msg;
      msg << "self-loop at vertex " << e.tail;
      throw GraphError(msg.str());
    }
    if (find_edge(e.tail, e.head)) {
      std::ostringstream msg;
      msg << "duplicate edge " << e.tail << "->" << e.head;
      throw GraphError(msg.str());
    }
    incident_[static_cast<size_t>(e.tail)].push_back(id);
    incident_[static_cast<size_t>(e.head)].push_back(id);
    ++out_degree_[static_cast<size_t>(e.tail)];
    ++in_degree_[static_cast<size_t>(e.head)];
  }
}

bool Digraph::adjacent(Vertex u, Vertex v) const {
  return find_edge(u, v).has_value() || find_edge(v, u).has_value();
}

std::optional<EdgeId> Digraph::find_edge(Vertex tail, Vertex head) const {
  if (tail < 0 || tail >= vertex_count_) return std::nullopt;
  for (EdgeId id : incident_[static_cast<size_t>(tail)]) {
    const Edge& e = edges_[static_cast<size_t>(id)];
    if (e.tail == tail && e.head == head) return id;
  }
  return std::nullopt;
}

Vertex Digraph::opposite(EdgeId id, Vertex v) const {
  const Edge& e = edge(id);
  return e.tail == v ? e.head : e.tail;
}

Digraph Digraph::with_edges(const std::vector<Edge>& extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Digraph(vertex_count_, std::move(all));
}

SwitchClass classify_switches(const Digraph& g) {
  SwitchClass result;
  result.kind.assign(static_cast<size_t>(g.vertex_count()), SwitchKind::NonSwitch);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) throw GraphError("isolated vertex " + std::to_string(v));
    if (g.in_degree(v) == 0) {
      result.kind[static_cast<size_t>(v)] = SwitchKind::Source;
      ++result.sources;
    } else if (g.out_degree(v) == 0) {
      result.kind[static_cast<size_t>(v)] = SwitchKind::Sink;
      ++result.sinks;
    }
  }
  return result;
}

bool is_acyclic(const Digraph& g) {
  std::vector<int> indeg(static_cast<size_t>(g.vertex_count()));
  std::queue<Vertex> ready;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    indeg[static_cast<size_t>(v)] = g.in_degree(v);
    if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.front();
    ready.pop();
    ++removed;
    for (EdgeId id : g.incident(v)) {
      const Edge& e = g.edge(id);
      if (e.tail != v) continue;
      if (--indeg[static_cast<size_t>(e.head)] == 0) ready.push(e.head);
    }
  }
  return removed == g.vertex_count();
}

namespace {

// Number of vertices reached from `start` without entering `blocked`.
int reach_count(const Digraph& g, Vertex start, Vertex blocked) {
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{start};
  seen[static_cast<size_t>(start)] = 1;
  int count = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++count;
    for (EdgeId id : g.incident(v)) {
      Vertex w = g.opposite(id, v);
      if (w == blocked || seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Digraph& g) {
  if (g.vertex_count() == 0) return true;
  return reach_count(g, 0, -1) == g.vertex_count();
}

bool is_biconnected(const Digraph& g) {
  const int n = g.vertex_count();
  if (n == 2) return g.edge_count() == 1;
  if (n < 3 || !is_connected(g)) return false;
  for (Vertex cut = 0; cut < n; ++cut) {
    Vertex start = cut == 0 ? 1 : 0;
    if (reach_count(g, start, cut) != n - 1) return false;
  }
  return true;
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::DirectedCycle: return "DirectedCycle";
    case RejectReason::TooManySwitches: return "TooManySwitches";
    case RejectReason::NotBiconnected: return "NotBiconnected";
    case RejectReason::NotPlanar: return "NotPlanar";
  }
  return "Unknown";
}

Precheck precheck(const Digraph& g, int k) {
  if (!is_acyclic(g)) return {RejectReason::DirectedCycle};
  bool has_isolated = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) has_isolated = has_isolated || g.degree(v) == 0;
  if (!has_isolated) {
    SwitchClass switches = classify_switches(g);
    if (switches.sources + switches.sinks > 2 * k + 2) return {RejectReason::TooManySwitches};
  }
  if (has_isolated || !is_biconnected(g)) return {RejectReason::NotBiconnected};
  if (!test_planarity(g)) return {RejectReason::NotPlanar};
  return {};
}

}  // namespace stpec
