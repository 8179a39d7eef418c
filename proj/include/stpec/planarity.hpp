#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stpec/digraph.hpp"

namespace stpec {

/// A combinatorial embedding of a (multi)graph given by endpoint pairs.
///
/// rotation[v] lists the edge ids at v in counterclockwise order. Faces are
/// traced with the face on the left: after traversing edge e into y, the walk
/// leaves y along the edge preceding e in the rotation at y.
struct RotationSystem {
  std::vector<std::pair<Vertex, Vertex>> ends;
  std::vector<std::vector<EdgeId>> rotation;

  [[nodiscard]] int vertex_count() const { return static_cast<int>(rotation.size()); }
  [[nodiscard]] int edge_count() const { return static_cast<int>(ends.size()); }
  [[nodiscard]] Vertex other_end(EdgeId e, Vertex v) const {
    const auto& [a, b] = ends[static_cast<size_t>(e)];
    return a == v ? b : a;
  }
};

/// One traversal step of a face: the walk arrives at `vertex` along
/// `entering` and leaves along `leaving`. Each corner is one angle.
struct Corner {
  Vertex vertex = 0;
  EdgeId entering = 0;
  EdgeId leaving = 0;
};

struct FaceWalk {
  int id = 0;
  std::vector<Corner> boundary;
  bool external = false;
};

/// A dart is an edge traversed away from `from`.
struct Dart {
  EdgeId edge = 0;
  Vertex from = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Faces of a rotation system. Each face lists its darts in walk order.
std::vector<std::vector<Dart>> trace_faces(const RotationSystem& rs);

/// Reverses every rotation (the mirror embedding).
RotationSystem mirrored(const RotationSystem& rs);

struct PlanarEmbedding {
  RotationSystem rotation;
  int external_face = 0;
};

/// Returns an embedding of g if it is planar. Requires g connected. The
/// external face is face 0 of enumerate_faces.
std::optional<PlanarEmbedding> test_planarity(const Digraph& g);

/// Planarity of the underlying undirected graph of g (any connectivity).
bool is_planar(const Digraph& g);

/// Face walks of the embedding; the external face carries external = true.
std::vector<FaceWalk> enumerate_faces(const PlanarEmbedding& embedding);

/// Embedding of g built from an explicit counterclockwise rotation.
PlanarEmbedding make_embedding(const Digraph& g, std::vector<std::vector<EdgeId>> rotation,
                               int external_face);

/// Returns (s, t) if g is acyclic with a single source s and single sink t and
/// has a planar embedding with s and t on a common face.
std::optional<std::pair<Vertex, Vertex>> is_st_planar(const Digraph& g);

}  // namespace stpec
