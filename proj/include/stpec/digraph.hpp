#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stpec {

using Vertex = int;
using EdgeId = int;

/// An oriented edge tail -> head.
struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple digraph over the vertices 0..vertex_count-1.
///
/// Self-loops and repeated (tail, head) pairs are rejected on construction.
/// Anti-parallel pairs are representable; they always form a directed cycle.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int vertex_count, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const { return vertex_count_; }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_.at(static_cast<size_t>(id)); }

  /// Edge ids incident to v, in insertion order.
  [[nodiscard]] const std::vector<EdgeId>& incident(Vertex v) const {
    return incident_.at(static_cast<size_t>(v));
  }
  [[nodiscard]] int in_degree(Vertex v) const { return in_degree_.at(static_cast<size_t>(v)); }
  [[nodiscard]] int out_degree(Vertex v) const { return out_degree_.at(static_cast<size_t>(v)); }
  [[nodiscard]] int degree(Vertex v) const { return in_degree(v) + out_degree(v); }

  /// True if u and v are joined by an edge in either orientation.
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const;
  [[nodiscard]] Vertex opposite(EdgeId id, Vertex v) const;

  /// Returns a copy with the extra edges appended.
  [[nodiscard]] Digraph with_edges(const std::vector<Edge>& extra) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<int> in_degree_;
  std::vector<int> out_degree_;
};

enum class SwitchKind : std::uint8_t { NonSwitch, Source, Sink };

struct SwitchClass {
  std::vector<SwitchKind> kind;
  int sources = 0;
  int sinks = 0;

  [[nodiscard]] bool is_switch(Vertex v) const {
    return kind[static_cast<size_t>(v)] != SwitchKind::NonSwitch;
  }
  [[nodiscard]] SwitchKind operator[](Vertex v) const { return kind[static_cast<size_t>(v)]; }
};

/// Tags each vertex as source, sink or non-switch. Zero-degree vertices are a
/// GraphError.
SwitchClass classify_switches(const Digraph& g);

bool is_acyclic(const Digraph& g);

/// Connectivity of the underlying undirected graph.
bool is_connected(const Digraph& g);

/// 2-vertex-connectivity of the underlying undirected graph. A single edge on
/// two vertices counts as biconnected.
bool is_biconnected(const Digraph& g);

enum class RejectReason : std::uint8_t { DirectedCycle, TooManySwitches, NotBiconnected, NotPlanar };

std::string_view to_string(RejectReason reason);

/// Outcome of the global feasibility checks; empty means "continue".
struct Precheck {
  std::optional<RejectReason> reject;

  [[nodiscard]] bool passed() const { return !reject.has_value(); }
};

/// Rejects instances that cannot be completed with k edges: directed cycles,
/// more than 2k+2 switches, non-biconnected or non-planar inputs (checked in
/// that order).
Precheck precheck(const Digraph& g, int k);

}  // namespace stpec
