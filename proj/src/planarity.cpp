#include "stpec/planarity.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace stpec {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Digraph& g) {
  BoostGraph bg(static_cast<size_t>(g.vertex_count()));
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    boost::add_edge(static_cast<size_t>(e.tail), static_cast<size_t>(e.head), id, bg);
  }
  return bg;
}

}  // namespace

std::vector<std::vector<Dart>> trace_faces(const RotationSystem& rs) {
  // Position of each dart's edge in the rotation of its origin.
  std::map<Dart, size_t> position;
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    const auto& rot = rs.rotation[static_cast<size_t>(v)];
    for (size_t i = 0; i < rot.size(); ++i) position[Dart{rot[i], v}] = i;
  }
  std::map<Dart, bool> used;
  std::vector<std::vector<Dart>> faces;
  for (Vertex v = 0; v < rs.vertex_count(); ++v) {
    for (EdgeId e : rs.rotation[static_cast<size_t>(v)]) {
      Dart start{e, v};
      if (used[start]) continue;
      std::vector<Dart> face;
      Dart d = start;
      do {
        used[d] = true;
        face.push_back(d);
        Vertex y = rs.other_end(d.edge, d.from);
        const auto& rot = rs.rotation[static_cast<size_t>(y)];
        // A loop-free multigraph: the entering dart's edge appears once at y.
        size_t at = position.at(Dart{d.edge, y});
        EdgeId next = rot[(at + rot.size() - 1) % rot.size()];
        d = Dart{next, y};
      } while (d != start);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

RotationSystem mirrored(const RotationSystem& rs) {
  RotationSystem out = rs;
  for (auto& rot : out.rotation) std::reverse(rot.begin(), rot.end());
  return out;
}

PlanarEmbedding make_embedding(const Digraph& g, std::vector<std::vector<EdgeId>> rotation,
                               int external_face) {
  PlanarEmbedding emb;
  emb.rotation.ends.reserve(static_cast<size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) emb.rotation.ends.emplace_back(e.tail, e.head);
  emb.rotation.rotation = std::move(rotation);
  emb.external_face = external_face;
  return emb;
}

std::optional<PlanarEmbedding> test_planarity(const Digraph& g) {
  BoostGraph bg = to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding_storage(static_cast<size_t>(g.vertex_count()));
  auto embedding = boost::make_iterator_property_map(embedding_storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) return std::nullopt;
  auto edge_index = boost::get(boost::edge_index, bg);
  std::vector<std::vector<EdgeId>> rotation(static_cast<size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const EdgeDesc& ed : embedding_storage[static_cast<size_t>(v)]) {
      rotation[static_cast<size_t>(v)].push_back(boost::get(edge_index, ed));
    }
  }
  return make_embedding(g, std::move(rotation), 0);
}

bool is_planar(const Digraph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<FaceWalk> enumerate_faces(const PlanarEmbedding& embedding) {
  const RotationSystem& rs = embedding.rotation;
  std::vector<FaceWalk> walks;
  auto faces = trace_faces(rs);
  for (size_t f = 0; f < faces.size(); ++f) {
    FaceWalk walk;
    walk.id = static_cast<int>(f);
    walk.external = walk.id == embedding.external_face;
    const auto& darts = faces[f];
    for (size_t i = 0; i < darts.size(); ++i) {
      const Dart& in = darts[i];
      const Dart& out = darts[(i + 1) % darts.size()];
      walk.boundary.push_back(Corner{out.from, in.edge, out.edge});
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

std::optional<std::pair<Vertex, Vertex>> is_st_planar(const Digraph& g) {
  if (g.vertex_count() < 2 || !is_acyclic(g)) return std::nullopt;
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) return std::nullopt;
    if (g.in_degree(v) == 0) sources.push_back(v);
    if (g.out_degree(v) == 0) sinks.push_back(v);
  }
  if (sources.size() != 1 || sinks.size() != 1) return std::nullopt;
  const Vertex s = sources.front();
  const Vertex t = sinks.front();
  // s and t lie on a common face of some planar embedding iff g + {s,t} is planar.
  if (g.adjacent(s, t)) {
    if (!is_planar(g)) return std::nullopt;
  } else if (!is_planar(g.with_edges({Edge{s, t}}))) {
    return std::nullopt;
  }
  return std::make_pair(s, t);
}

}  // namespace stpec
