#include "stpec/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

namespace stpec {

Digraph alt_cycle(int m) {
  if (m < 2) throw GraphError("alt-cycle needs m >= 2");
  const int n = 2 * m;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    edges.push_back(i % 2 == 0 ? Edge{i, j} : Edge{j, i});
  }
  std::sort(edges.begin(), edges.end());
  return Digraph(n, edges);
}

Digraph random_planar(int n, std::uint64_t seed) {
  if (n < 3) throw GraphError("random-planar needs n >= 3");
  std::mt19937_64 rng(seed);
  auto pick = [&](size_t bound) { return std::uniform_int_distribution<size_t>(0, bound - 1)(rng); };

  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::vector<Vertex>> faces{{0, 1, 2}, {2, 1, 0}};
  auto adjacent = [&](Vertex a, Vertex b) {
    return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
  };
  // Splits face f along a path a ... b through `inner` (empty for a chord).
  auto split = [&](size_t f, size_t i, size_t j, const std::vector<Vertex>& inner) {
    const auto face = faces[f];
    std::vector<Vertex> one;
    std::vector<Vertex> two;
    for (size_t p = i;; p = (p + 1) % face.size()) {
      one.push_back(face[p]);
      if (p == j) break;
    }
    for (size_t p = j;; p = (p + 1) % face.size()) {
      two.push_back(face[p]);
      if (p == i) break;
    }
    one.insert(one.end(), inner.rbegin(), inner.rend());
    two.insert(two.end(), inner.begin(), inner.end());
    faces[f] = one;
    faces.push_back(two);
  };

  for (Vertex x = 3; x < n; ++x) {
    const size_t f = pick(faces.size());
    const size_t len = faces[f].size();
    const size_t i = pick(len);
    const size_t j = (i + 1 + pick(len - 1)) % len;
    edges.emplace_back(faces[f][i], x);
    edges.emplace_back(faces[f][j], x);
    split(f, i, j, {x});
  }
  const size_t chords = pick(static_cast<size_t>(n));
  for (size_t c = 0; c < chords; ++c) {
    const size_t f = pick(faces.size());
    const size_t len = faces[f].size();
    if (len < 4) continue;
    const size_t i = pick(len);
    const size_t j = (i + 2 + pick(len - 3)) % len;
    const Vertex a = faces[f][i];
    const Vertex b = faces[f][j];
    if (adjacent(a, b)) continue;
    edges.emplace_back(a, b);
    split(f, i, j, {});
  }

  std::vector<int> rank(static_cast<size_t>(n));
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<Edge> oriented;
  for (auto [a, b] : edges) {
    oriented.push_back(rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)] ? Edge{a, b} : Edge{b, a});
  }
  std::sort(oriented.begin(), oriented.end());
  return Digraph(n, oriented);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("STPEC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 1;
}

}  // namespace stpec
