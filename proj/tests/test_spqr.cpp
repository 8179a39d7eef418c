#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "stpec/generate.hpp"
#include "stpec/spqr.hpp"

using namespace stpec;

namespace {

void expect_valid(const SpqrTree& tree) {
  const Digraph& g = tree.graph();
  std::multiset<EdgeId> leaves;
  for (int id = 0; id < tree.size(); ++id) {
    const SpqrNode& n = tree.node(id);
    if (n.kind == NodeKind::Q) {
      if (id != tree.root()) leaves.insert(n.edge);
      EXPECT_TRUE(n.children.empty() || id == tree.root());
      continue;
    }
    ASSERT_FALSE(n.skeleton.empty());
    EXPECT_EQ(n.skeleton[0].child, -1);
    EXPECT_EQ(n.skeleton[0].a, n.pole_u);
    EXPECT_EQ(n.skeleton[0].b, n.pole_v);
    ASSERT_EQ(n.skeleton.size(), n.children.size() + 1);
    for (size_t i = 0; i < n.children.size(); ++i) {
      const SpqrNode& c = tree.node(n.children[i]);
      EXPECT_EQ(c.parent, id);
      EXPECT_EQ(n.skeleton[i + 1].child, n.children[i]);
      EXPECT_EQ(c.pole_u, n.skeleton[i + 1].a);
      EXPECT_EQ(c.pole_v, n.skeleton[i + 1].b);
      if (n.kind == NodeKind::P) EXPECT_NE(c.kind, NodeKind::P);
    }
    if (n.kind == NodeKind::S) EXPECT_EQ(n.children.size(), 2U);
    if (n.kind == NodeKind::P) EXPECT_GE(n.children.size(), 2U);
  }
  // Every edge except the reference appears in exactly one leaf.
  std::multiset<EdgeId> expected;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e != tree.reference_edge() || g.edge_count() == 1) expected.insert(e);
  }
  EXPECT_EQ(leaves, expected);
}

}  // namespace

TEST(BuildSpqr, ZigzagIsNestedSeries) {
  auto tree = build_spqr(fixtures::zigzag(), 0);
  expect_valid(tree);
  const SpqrNode& root = tree.node(tree.root());
  EXPECT_EQ(root.kind, NodeKind::Q);
  ASSERT_EQ(root.children.size(), 1U);
  const SpqrNode& top = tree.node(root.children[0]);
  EXPECT_EQ(top.kind, NodeKind::S);
  int s_nodes = 0;
  for (int id = 0; id < tree.size(); ++id) s_nodes += tree.node(id).kind == NodeKind::S ? 1 : 0;
  EXPECT_EQ(s_nodes, 2);
}

TEST(BuildSpqr, K4IsOneRNode) {
  auto tree = build_spqr(fixtures::k4(), 5);
  expect_valid(tree);
  const SpqrNode& r = tree.node(tree.node(tree.root()).children[0]);
  EXPECT_EQ(r.kind, NodeKind::R);
  EXPECT_EQ(r.children.size(), 5U);
  for (int c : r.children) EXPECT_EQ(tree.node(c).kind, NodeKind::Q);
}

TEST(BuildSpqr, SingleEdge) {
  auto tree = build_spqr(Digraph(2, {{0, 1}}), 0);
  EXPECT_EQ(tree.size(), 2);
  EXPECT_EQ(tree.node(tree.root()).kind, NodeKind::Q);
  EXPECT_EQ(tree.node(tree.node(tree.root()).children[0]).kind, NodeKind::Q);
}

TEST(BuildSpqr, RejectsCutVertex) {
  EXPECT_THROW(build_spqr(Digraph(3, {{0, 1}, {1, 2}}), 0), GraphError);
}

TEST(BuildSpqr, RandomGraphsAreWellFormed) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Digraph g = random_planar(3 + static_cast<int>(seed % 9), seed);
    for (EdgeId e = 0; e < g.edge_count(); e += 3) expect_valid(build_spqr(g, e));
  }
}

TEST(BuildSpqr, LongCycleIsBinarized) {
  Digraph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto tree = build_spqr(g, 5);
  expect_valid(tree);
  int s_nodes = 0;
  for (int id = 0; id < tree.size(); ++id) s_nodes += tree.node(id).kind == NodeKind::S ? 1 : 0;
  EXPECT_EQ(s_nodes, 4);
}

TEST(PertinentGraph, Examples) {
  Digraph z = fixtures::zigzag();
  auto tree = build_spqr(z, 0);
  const int top = tree.node(tree.root()).children[0];
  // Child of the root: everything but the reference edge.
  EXPECT_EQ(pertinent_graph(tree, top).edge_count(), 3);
  for (int id = 0; id < tree.size(); ++id) {
    const SpqrNode& n = tree.node(id);
    if (n.kind == NodeKind::Q && id != tree.root()) {
      Digraph p = pertinent_graph(tree, id);
      ASSERT_EQ(p.edge_count(), 1);
      EXPECT_EQ(p.edge(0), z.edge(n.edge));
    }
    if (n.kind == NodeKind::S && id != top) {
      // The chain t1 <- s2 -> t2.
      Digraph p = pertinent_graph(tree, id);
      EXPECT_EQ(p.edge_count(), 2);
      EXPECT_EQ(p.out_degree(2), 2);
    }
  }
}

TEST(SkeletonEmbeddings, Counts) {
  auto theta = build_spqr(fixtures::theta3(), 0);
  const SpqrNode& p = theta.node(theta.node(theta.root()).children[0]);
  ASSERT_EQ(p.kind, NodeKind::P);
  EXPECT_EQ(skeleton_embeddings(p, 5).size(), 6U);

  auto k4 = build_spqr(fixtures::k4(), 5);
  EXPECT_EQ(skeleton_embeddings(k4.node(k4.node(k4.root()).children[0]), 4).size(), 2U);

  auto z = build_spqr(fixtures::zigzag(), 0);
  EXPECT_EQ(skeleton_embeddings(z.node(z.node(z.root()).children[0]), 4).size(), 1U);
}

TEST(SkeletonEmbeddings, RNodeFlipIsMirror) {
  auto k4 = build_spqr(fixtures::k4(), 5);
  auto embs = skeleton_embeddings(k4.node(k4.node(k4.root()).children[0]), 4);
  ASSERT_EQ(embs.size(), 2U);
  EXPECT_EQ(mirrored(embs[0]).rotation, embs[1].rotation);
  // K4 has 4 triangular faces in either embedding.
  EXPECT_EQ(trace_faces(embs[0]).size(), 4U);
}

TEST(PNodeRotation, FirstChildIsLeftmost) {
  auto theta = build_spqr(fixtures::theta3(), 0);
  const SpqrNode& p = theta.node(theta.node(theta.root()).children[0]);
  RotationSystem rs = p_node_rotation(p, {2, 1, 3}, 5);
  // The face left of the reference dart v -> u continues along the first child.
  for (const auto& face : trace_faces(rs)) {
    for (size_t i = 0; i < face.size(); ++i) {
      if (face[i].edge == 0 && face[i].from == p.pole_v) {
        EXPECT_EQ(face[(i + 1) % face.size()].edge, 2);
      }
    }
  }
}

TEST(RSkeletons, IndependentOfReferenceEdge) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = random_planar(5 + static_cast<int>(seed % 5), seed);
    auto first = build_spqr(g, 0).r_skeletons();
    for (EdgeId e = 1; e < g.edge_count(); ++e) EXPECT_EQ(build_spqr(g, e).r_skeletons(), first);
  }
}

TEST(SkeletonIndex, MapsEdgesToChildren) {
  auto tree = build_spqr(fixtures::k4(), 5);
  const int r = tree.node(tree.root()).children[0];
  EXPECT_EQ(tree.skeleton_index_of(r, 5), 0);
  for (size_t i = 0; i < tree.node(r).children.size(); ++i) {
    const EdgeId e = tree.node(tree.node(r).children[i]).edge;
    EXPECT_EQ(tree.skeleton_index_of(r, e), static_cast<int>(i) + 1);
  }
}

TEST(DumpTree, Golden) {
  auto tree = build_spqr(fixtures::zigzag(), 0);
  EXPECT_EQ(dump_tree(tree),
            "Q #0 poles=(0,1) edge=0->1\n"
            "  S #1 poles=(0,1) skeleton: ref(0,1) real(0,3) virt#3(3,1)\n"
            "    Q #2 poles=(0,3) edge=0->3\n"
            "    S #3 poles=(3,1) skeleton: ref(3,1) real(3,2) real(2,1)\n"
            "      Q #4 poles=(3,2) edge=2->3\n"
            "      Q #5 poles=(2,1) edge=2->1\n");
}
