#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stpec/digraph.hpp"
#include "stpec/planarity.hpp"

namespace stpec {

enum class NodeKind : std::uint8_t { S, P, R, Q };

char to_char(NodeKind kind);

/// Skeleton edge (a, b). The child node has poles (a, b) in this order.
/// child == -1 marks the reference edge.
struct SkeletonEdge {
  Vertex a = 0;
  Vertex b = 0;
  int child = -1;
};

struct SpqrNode {
  NodeKind kind = NodeKind::Q;
  Vertex pole_u = 0;
  Vertex pole_v = 0;
  /// skeleton[0] is the reference edge (pole_u, pole_v); the rest map 1:1 to
  /// children in order. Empty for Q-nodes.
  std::vector<SkeletonEdge> skeleton;
  std::vector<int> children;
  int parent = -1;
  /// Edge of g represented by a Q-node.
  EdgeId edge = -1;
};

/// SPQR-tree rooted at the Q-node of a reference edge, with every S-node
/// binarized into two children.
class SpqrTree {
 public:
  [[nodiscard]] const SpqrNode& node(int id) const { return nodes_.at(static_cast<size_t>(id)); }
  [[nodiscard]] int size() const { return static_cast<int>(nodes_.size()); }
  [[nodiscard]] int root() const { return root_; }
  [[nodiscard]] EdgeId reference_edge() const { return node(root_).edge; }
  [[nodiscard]] const Digraph& graph() const { return graph_; }

  /// Node ids in bottom-up order (children before parents).
  [[nodiscard]] std::vector<int> postorder() const;

  /// Edges of g in the subtree of `id`.
  [[nodiscard]] const std::vector<EdgeId>& pertinent_edges(int id) const {
    return pertinent_.at(static_cast<size_t>(id));
  }

  /// Skeleton-edge index of `id` that contains edge e of g: 0 if e lies
  /// outside the pertinent graph, otherwise 1 + the child position.
  [[nodiscard]] int skeleton_index_of(int id, EdgeId e) const;

  /// Multiset of triconnected-component skeletons as sorted vertex-pair lists;
  /// independent of rooting and binarization for R-nodes.
  [[nodiscard]] std::vector<std::vector<std::pair<Vertex, Vertex>>> r_skeletons() const;

  friend SpqrTree build_spqr(const Digraph& g, EdgeId ref_edge);

 private:
  Digraph graph_;
  std::vector<SpqrNode> nodes_;
  int root_ = -1;
  std::vector<std::vector<EdgeId>> pertinent_;
  std::vector<std::vector<int>> skel_index_;  // [node][edge] -> skeleton index
  void index_pertinent();
};

/// Builds the rooted SPQR-tree. Throws GraphError if g is not biconnected.
SpqrTree build_spqr(const Digraph& g, EdgeId ref_edge);

/// Pertinent graph of a non-root node, on the vertex set of g.
Digraph pertinent_graph(const SpqrTree& tree, int id);

/// Embeddings of a node's skeleton as rotation systems over its skeleton
/// edges (ids are skeleton indices). P-nodes: one per permutation of the
/// non-reference edges; R-nodes: an embedding and its flip; S-nodes: one.
std::vector<RotationSystem> skeleton_embeddings(const SpqrNode& node, int vertex_count);

/// P-node rotation for a left-to-right order of its children (skeleton
/// indices 1..h). The first child's left side is the node's B_uv.
RotationSystem p_node_rotation(const SpqrNode& node, const std::vector<int>& order,
                               int vertex_count);

/// Indented text dump: one line per node with kind, poles and skeleton edges.
void dump_tree(std::ostream& os, const SpqrTree& tree);
std::string dump_tree(const SpqrTree& tree);

}  // namespace stpec
