#include "stpec/spqr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace stpec {

namespace {

// Edge of a split component: real edges carry their id in g, virtual edges
// carry -1 - virtual_id.
struct CompEdge {
  Vertex a = 0;
  Vertex b = 0;
  int id = 0;

  [[nodiscard]] bool is_virtual() const { return id < 0; }
  [[nodiscard]] int virtual_id() const { return -1 - id; }
};

enum class CompKind { Bond, Polygon, Triconnected };

struct Component {
  CompKind kind = CompKind::Bond;
  std::vector<CompEdge> edges;
  bool alive = true;
};

std::vector<Vertex> vertices_of(const std::vector<CompEdge>& edges) {
  std::set<Vertex> vs;
  for (const auto& e : edges) {
    vs.insert(e.a);
    vs.insert(e.b);
  }
  return {vs.begin(), vs.end()};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); }
  void unite(int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); }
};

class Splitter {
 public:
  std::vector<Component> components;

  void run(std::vector<CompEdge> edges) {
    std::vector<std::vector<CompEdge>> work{std::move(edges)};
    while (!work.empty()) {
      auto h = std::move(work.back());
      work.pop_back();
      split_one(std::move(h), work);
    }
  }

  void merge() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<int, std::vector<size_t>> owners;
      for (size_t c = 0; c < components.size(); ++c) {
        if (!components[c].alive) continue;
        for (const auto& e : components[c].edges) {
          if (e.is_virtual()) owners[e.virtual_id()].push_back(c);
        }
      }
      for (const auto& [vid, pair] : owners) {
        if (pair.size() != 2) continue;
        Component& x = components[pair[0]];
        Component& y = components[pair[1]];
        if (x.kind != y.kind || x.kind == CompKind::Triconnected) continue;
        std::vector<CompEdge> joined;
        for (const auto& e : x.edges) {
          if (!(e.is_virtual() && e.virtual_id() == vid)) joined.push_back(e);
        }
        for (const auto& e : y.edges) {
          if (!(e.is_virtual() && e.virtual_id() == vid)) joined.push_back(e);
        }
        x.edges = std::move(joined);
        y.alive = false;
        changed = true;
        break;
      }
    }
  }

 private:
  int next_virtual_ = 0;

  void finish(CompKind kind, std::vector<CompEdge> edges) {
    components.push_back(Component{kind, std::move(edges), true});
  }

  void split_one(std::vector<CompEdge> h, std::vector<std::vector<CompEdge>>& work) {
    auto verts = vertices_of(h);
    if (verts.size() == 2) {
      finish(CompKind::Bond, std::move(h));
      return;
    }
    // Parallel bundles become bonds of their own.
    std::map<std::pair<Vertex, Vertex>, std::vector<size_t>> bundles;
    for (size_t i = 0; i < h.size(); ++i) {
      bundles[{std::min(h[i].a, h[i].b), std::max(h[i].a, h[i].b)}].push_back(i);
    }
    for (const auto& [key, idx] : bundles) {
      if (idx.size() < 2) continue;
      const int vid = next_virtual_++;
      std::vector<CompEdge> bond;
      std::vector<CompEdge> rest;
      std::set<size_t> in_bundle(idx.begin(), idx.end());
      for (size_t i = 0; i < h.size(); ++i) (in_bundle.count(i) ? bond : rest).push_back(h[i]);
      bond.push_back(CompEdge{key.first, key.second, -1 - vid});
      rest.push_back(CompEdge{key.first, key.second, -1 - vid});
      finish(CompKind::Bond, std::move(bond));
      work.push_back(std::move(rest));
      return;
    }
    // Separation pairs: classes of edges joined through vertices other than a, b.
    for (size_t i = 0; i < verts.size(); ++i) {
      for (size_t j = i + 1; j < verts.size(); ++j) {
        const Vertex a = verts[i];
        const Vertex b = verts[j];
        UnionFind uf(h.size());
        std::map<Vertex, size_t> first_edge_at;
        for (size_t e = 0; e < h.size(); ++e) {
          for (Vertex x : {h[e].a, h[e].b}) {
            if (x == a || x == b) continue;
            auto [it, fresh] = first_edge_at.emplace(x, e);
            if (!fresh) uf.unite(static_cast<int>(e), static_cast<int>(it->second));
          }
        }
        std::map<int, std::vector<size_t>> classes;
        for (size_t e = 0; e < h.size(); ++e) classes[uf.find(static_cast<int>(e))].push_back(e);
        if (classes.size() < 2) continue;
        for (const auto& [rep, members] : classes) {
          if (members.size() < 2 || h.size() - members.size() < 2) continue;
          const int vid = next_virtual_++;
          std::set<size_t> chosen(members.begin(), members.end());
          std::vector<CompEdge> left;
          std::vector<CompEdge> right;
          for (size_t e = 0; e < h.size(); ++e) (chosen.count(e) ? left : right).push_back(h[e]);
          left.push_back(CompEdge{a, b, -1 - vid});
          right.push_back(CompEdge{a, b, -1 - vid});
          work.push_back(std::move(left));
          work.push_back(std::move(right));
          return;
        }
      }
    }
    finish(verts.size() == 3 ? CompKind::Polygon : CompKind::Triconnected, std::move(h));
  }
};

// Orders a polygon's edges into a path from u to v that avoids `ref`.
std::vector<CompEdge> polygon_chain(const std::vector<CompEdge>& edges, size_t ref, Vertex u,
                                    Vertex v, std::vector<Vertex>& chain_vertices) {
  std::vector<CompEdge> chain;
  std::vector<bool> used(edges.size(), false);
  used[ref] = true;
  chain_vertices = {u};
  Vertex at = u;
  while (at != v || chain.empty()) {
    bool advanced = false;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (used[i]) continue;
      if (edges[i].a != at && edges[i].b != at) continue;
      used[i] = true;
      CompEdge step = edges[i];
      Vertex next = step.a == at ? step.b : step.a;
      chain.push_back(step);
      chain_vertices.push_back(next);
      at = next;
      advanced = true;
      break;
    }
    if (!advanced) throw GraphError("malformed polygon component");
  }
  return chain;
}

}  // namespace

char to_char(NodeKind kind) {
  switch (kind) {
    case NodeKind::S: return 'S';
    case NodeKind::P: return 'P';
    case NodeKind::R: return 'R';
    case NodeKind::Q: return 'Q';
  }
  return '?';
}

SpqrTree build_spqr(const Digraph& g, EdgeId ref_edge) {
  if (ref_edge < 0 || ref_edge >= g.edge_count()) throw GraphError("reference edge out of range");
  if (!is_biconnected(g)) throw GraphError("SPQR-tree requires a biconnected graph");
  SpqrTree tree;
  tree.graph_ = g;
  const Edge& re = g.edge(ref_edge);

  auto add_node = [&tree](SpqrNode node) {
    tree.nodes_.push_back(std::move(node));
    return static_cast<int>(tree.nodes_.size()) - 1;
  };
  auto add_q = [&](Vertex a, Vertex b, EdgeId e, int parent) {
    SpqrNode q;
    q.kind = NodeKind::Q;
    q.pole_u = a;
    q.pole_v = b;
    q.edge = e;
    q.parent = parent;
    return add_node(std::move(q));
  };

  SpqrNode root;
  root.kind = NodeKind::Q;
  root.pole_u = re.tail;
  root.pole_v = re.head;
  root.edge = ref_edge;
  tree.root_ = add_node(std::move(root));

  if (g.edge_count() == 1) {
    // Degenerate: a single edge is represented by a pair of Q-nodes.
    int leaf = add_q(re.tail, re.head, ref_edge, tree.root_);
    tree.nodes_[static_cast<size_t>(tree.root_)].children.push_back(leaf);
    tree.index_pertinent();
    return tree;
  }

  Splitter splitter;
  std::vector<CompEdge> all;
  for (EdgeId id = 0; id < g.edge_count(); ++id) all.push_back(CompEdge{g.edge(id).tail, g.edge(id).head, id});
  splitter.run(std::move(all));
  splitter.merge();

  std::vector<size_t> alive;
  for (size_t c = 0; c < splitter.components.size(); ++c) {
    if (splitter.components[c].alive) alive.push_back(c);
  }
  std::map<int, std::vector<size_t>> owners;
  size_t start = splitter.components.size();
  for (size_t c : alive) {
    for (const auto& e : splitter.components[c].edges) {
      if (e.is_virtual()) owners[e.virtual_id()].push_back(c);
      if (e.id == ref_edge) start = c;
    }
  }

  // Expands component `c` entered through its edge at index `ref_index`
  // with poles (u, v); returns the new node id.
  auto expand = [&](auto&& self, size_t c, size_t ref_index, Vertex u, Vertex v,
                    int parent) -> int {
    const Component& comp = splitter.components[c];
    auto child_for = [&](const CompEdge& e, Vertex a, Vertex b, int node_id) -> int {
      if (!e.is_virtual()) return add_q(a, b, e.id, node_id);
      const auto& pair = owners.at(e.virtual_id());
      size_t other = pair[0] == c ? pair[1] : pair[0];
      const auto& oedges = splitter.components[other].edges;
      size_t idx = 0;
      while (!(oedges[idx].is_virtual() && oedges[idx].virtual_id() == e.virtual_id())) ++idx;
      return self(self, other, idx, a, b, node_id);
    };

    SpqrNode node;
    node.pole_u = u;
    node.pole_v = v;
    node.parent = parent;
    node.skeleton.push_back(SkeletonEdge{u, v, -1});
    const int id = add_node(node);

    if (comp.kind == CompKind::Polygon) {
      std::vector<Vertex> cv;
      auto chain = polygon_chain(comp.edges, ref_index, u, v, cv);
      // Binarize left to right: (w0,w1) plus a nested S-node over the rest.
      int current = id;
      size_t i = 0;
      while (true) {
        auto& cur = tree.nodes_[static_cast<size_t>(current)];
        cur.kind = NodeKind::S;
        const size_t remaining = chain.size() - i;
        int first = child_for(chain[i], cv[i], cv[i + 1], current);
        tree.nodes_[static_cast<size_t>(current)].skeleton.push_back(SkeletonEdge{cv[i], cv[i + 1], first});
        tree.nodes_[static_cast<size_t>(current)].children.push_back(first);
        if (remaining == 2) {
          int second = child_for(chain[i + 1], cv[i + 1], cv[i + 2], current);
          tree.nodes_[static_cast<size_t>(current)].skeleton.push_back(
              SkeletonEdge{cv[i + 1], cv[i + 2], second});
          tree.nodes_[static_cast<size_t>(current)].children.push_back(second);
          break;
        }
        SpqrNode nested;
        nested.kind = NodeKind::S;
        nested.pole_u = cv[i + 1];
        nested.pole_v = v;
        nested.parent = current;
        nested.skeleton.push_back(SkeletonEdge{cv[i + 1], v, -1});
        int nested_id = add_node(std::move(nested));
        tree.nodes_[static_cast<size_t>(current)].skeleton.push_back(SkeletonEdge{cv[i + 1], v, nested_id});
        tree.nodes_[static_cast<size_t>(current)].children.push_back(nested_id);
        current = nested_id;
        ++i;
      }
      return id;
    }

    tree.nodes_[static_cast<size_t>(id)].kind = comp.kind == CompKind::Bond ? NodeKind::P : NodeKind::R;
    for (size_t i = 0; i < comp.edges.size(); ++i) {
      if (i == ref_index) continue;
      const CompEdge& e = comp.edges[i];
      Vertex a = e.a;
      Vertex b = e.b;
      if (comp.kind == CompKind::Bond && a != u) std::swap(a, b);
      int child = child_for(e, a, b, id);
      tree.nodes_[static_cast<size_t>(id)].skeleton.push_back(SkeletonEdge{a, b, child});
      tree.nodes_[static_cast<size_t>(id)].children.push_back(child);
    }
    return id;
  };

  const auto& sedges = splitter.components[start].edges;
  size_t ref_index = 0;
  while (sedges[ref_index].id != ref_edge) ++ref_index;
  int top = expand(expand, start, ref_index, re.tail, re.head, tree.root_);
  tree.nodes_[static_cast<size_t>(tree.root_)].children.push_back(top);
  tree.index_pertinent();
  return tree;
}

void SpqrTree::index_pertinent() {
  pertinent_.assign(nodes_.size(), {});
  skel_index_.assign(nodes_.size(), std::vector<int>(static_cast<size_t>(graph_.edge_count()), 0));
  for (int id : postorder()) {
    const SpqrNode& n = nodes_[static_cast<size_t>(id)];
    auto& mine = pertinent_[static_cast<size_t>(id)];
    if (n.kind == NodeKind::Q && n.children.empty()) {
      mine.push_back(n.edge);
    }
    for (size_t c = 0; c < n.children.size(); ++c) {
      for (EdgeId e : pertinent_[static_cast<size_t>(n.children[c])]) {
        mine.push_back(e);
        skel_index_[static_cast<size_t>(id)][static_cast<size_t>(e)] = static_cast<int>(c) + 1;
      }
    }
    std::sort(mine.begin(), mine.end());
  }
}

std::vector<int> SpqrTree::postorder() const {
  std::vector<int> order;
  std::vector<std::pair<int, size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const SpqrNode& n = nodes_[static_cast<size_t>(id)];
    if (next < n.children.size()) {
      int child = n.children[next++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(id);
      stack.pop_back();
    }
  }
  return order;
}

int SpqrTree::skeleton_index_of(int id, EdgeId e) const {
  return skel_index_.at(static_cast<size_t>(id)).at(static_cast<size_t>(e));
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> SpqrTree::r_skeletons() const {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> out;
  for (const auto& n : nodes_) {
    if (n.kind != NodeKind::R) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : n.skeleton) edges.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph pertinent_graph(const SpqrTree& tree, int id) {
  if (id == tree.root()) throw GraphError("the root has no pertinent graph");
  std::vector<Edge> edges;
  for (EdgeId e : tree.pertinent_edges(id)) edges.push_back(tree.graph().edge(e));
  return Digraph(tree.graph().vertex_count(), std::move(edges));
}

namespace {

RotationSystem skeleton_base(const SpqrNode& node, int vertex_count) {
  RotationSystem rs;
  for (const auto& e : node.skeleton) rs.ends.emplace_back(e.a, e.b);
  rs.rotation.assign(static_cast<size_t>(vertex_count), {});
  return rs;
}

}  // namespace

RotationSystem p_node_rotation(const SpqrNode& node, const std::vector<int>& order,
                               int vertex_count) {
  RotationSystem rs = skeleton_base(node, vertex_count);
  // Counterclockwise at u: reference, then children right to left; at v:
  // reference, then children left to right.
  auto& at_u = rs.rotation[static_cast<size_t>(node.pole_u)];
  auto& at_v = rs.rotation[static_cast<size_t>(node.pole_v)];
  at_u.push_back(0);
  at_v.push_back(0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) at_u.push_back(*it);
  for (int idx : order) at_v.push_back(idx);
  return rs;
}

std::vector<RotationSystem> skeleton_embeddings(const SpqrNode& node, int vertex_count) {
  std::vector<RotationSystem> out;
  switch (node.kind) {
    case NodeKind::Q: return out;
    case NodeKind::S: {
      RotationSystem rs = skeleton_base(node, vertex_count);
      // A triangle: every vertex has degree two, so any rotation is the same.
      for (EdgeId i = 0; i < static_cast<EdgeId>(node.skeleton.size()); ++i) {
        rs.rotation[static_cast<size_t>(node.skeleton[static_cast<size_t>(i)].a)].push_back(i);
        rs.rotation[static_cast<size_t>(node.skeleton[static_cast<size_t>(i)].b)].push_back(i);
      }
      out.push_back(std::move(rs));
      return out;
    }
    case NodeKind::P: {
      std::vector<int> order(node.skeleton.size() - 1);
      std::iota(order.begin(), order.end(), 1);
      do {
        out.push_back(p_node_rotation(node, order, vertex_count));
      } while (std::next_permutation(order.begin(), order.end()));
      return out;
    }
    case NodeKind::R: {
      std::vector<Edge> edges;
      for (const auto& e : node.skeleton) edges.push_back(Edge{e.a, e.b});
      Digraph skel(vertex_count, edges);
      auto emb = test_planarity(skel);
      if (!emb) throw GraphError("non-planar R-node skeleton");
      RotationSystem rs = skeleton_base(node, vertex_count);
      rs.rotation = emb->rotation.rotation;
      out.push_back(mirrored(rs));
      out.push_back(rs);
      return out;
    }
  }
  return out;
}

void dump_tree(std::ostream& os, const SpqrTree& tree) {
  auto visit = [&](auto&& self, int id, int depth) -> void {
    const SpqrNode& n = tree.node(id);
    os << std::string(static_cast<size_t>(depth) * 2, ' ') << to_char(n.kind) << " #" << id
       << " poles=(" << n.pole_u << "," << n.pole_v << ")";
    if (n.kind == NodeKind::Q) {
      const Edge& e = tree.graph().edge(n.edge);
      os << " edge=" << e.tail << "->" << e.head;
    } else {
      os << " skeleton:";
      for (const auto& e : n.skeleton) {
        os << ' ';
        if (e.child < 0) {
          os << "ref";
        } else if (tree.node(e.child).kind == NodeKind::Q) {
          os << "real";
        } else {
          os << "virt#" << e.child;
        }
        os << "(" << e.a << "," << e.b << ")";
      }
    }
    os << '\n';
    for (int c : n.children) self(self, c, depth + 1);
  };
  visit(visit, tree.root(), 0);
}

std::string dump_tree(const SpqrTree& tree) {
  std::ostringstream os;
  dump_tree(os, tree);
  return os.str();
}

}  // namespace stpec
