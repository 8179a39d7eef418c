#include "stpec/upward.hpp"

#include <algorithm>
#include <sstream>

namespace stpec {

bool is_switch_angle(const Digraph& g, const Corner& corner) {
  return dir_at(g.edge(corner.entering), corner.vertex) == dir_at(g.edge(corner.leaving), corner.vertex);
}

bool check_upward_face(const Digraph& g, const FaceWalk& face, const AngleAssignment& labels,
                       bool is_external) {
  SwitchClass switches = classify_switches(g);
  int balance = 0;
  for (size_t i = 0; i < face.boundary.size(); ++i) {
    const Corner& c = face.boundary[i];
    AngleId id{face.id, static_cast<int>(i)};
    if (!labels.contains(id)) return false;
    const int label = labels.at(id);
    if (!is_switch_angle(g, c)) {
      if (label != 0) return false;
      continue;
    }
    if (label == 1 && !switches.is_switch(c.vertex)) return false;
    if (label != 1 && label != -1) return false;
    balance += label;
  }
  return balance == (is_external ? 2 : -2);
}

bool check_upward_vertex(const Digraph& g, const PlanarEmbedding& embedding,
                         const AngleAssignment& labels, Vertex v) {
  SwitchClass switches = classify_switches(g);
  int plus = 0;
  int zero = 0;
  int minus = 0;
  for (const FaceWalk& face : enumerate_faces(embedding)) {
    for (size_t i = 0; i < face.boundary.size(); ++i) {
      if (face.boundary[i].vertex != v) continue;
      AngleId id{face.id, static_cast<int>(i)};
      if (!labels.contains(id)) return false;
      switch (labels.at(id)) {
        case 1: ++plus; break;
        case 0: ++zero; break;
        case -1: ++minus; break;
        default: return false;
      }
    }
  }
  if (switches.is_switch(v)) return plus == 1 && zero == 0;
  return zero == 2 && plus == 0;
}

std::string to_string(const Signature& sigma) {
  if (sigma.empty()) return "∅";
  std::ostringstream os;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) os << ' ';
    switch (sigma[i].kind) {
      case SymbolKind::Src: os << "σ"; break;
      case SymbolKind::Snk: os << "τ"; break;
      case SymbolKind::SrcLocal: os << "σℓ"; break;
      case SymbolKind::SnkLocal: os << "τℓ"; break;
    }
    os << sigma[i].vertex;
  }
  return os.str();
}

bool is_short(const Signature& sigma, int k) {
  return static_cast<int>(sigma.size()) <= 4 * k + 2;
}

Signature reversed(const Signature& sigma) { return {sigma.rbegin(), sigma.rend()}; }

Symbol localized(Symbol s) {
  if (s.kind == SymbolKind::Src) s.kind = SymbolKind::SrcLocal;
  if (s.kind == SymbolKind::Snk) s.kind = SymbolKind::SnkLocal;
  return s;
}

Signature signature_of_path(const Digraph& g, const HalfBoundary& path) {
  SwitchClass switches = classify_switches(g);
  Signature sigma;
  for (size_t i = 1; i + 1 < path.vertices.size(); ++i) {
    const Vertex w = path.vertices[i];
    const Dir before = dir_at(g.edge(path.edges[i - 1]), w);
    const Dir after = dir_at(g.edge(path.edges[i]), w);
    if (before != after) continue;
    const bool global = switches.is_switch(w);
    if (before == Dir::Out) {
      sigma.push_back({global ? SymbolKind::Src : SymbolKind::SrcLocal, w});
    } else {
      sigma.push_back({global ? SymbolKind::Snk : SymbolKind::SnkLocal, w});
    }
  }
  return sigma;
}

std::pair<HalfBoundary, HalfBoundary> half_boundaries(const Digraph& g_nu,
                                                      const PlanarEmbedding& embedding, Vertex u,
                                                      Vertex v) {
  auto faces = enumerate_faces(embedding);
  const FaceWalk& outer = faces.at(static_cast<size_t>(embedding.external_face));
  const auto& walk = outer.boundary;
  auto find = [&](Vertex x) {
    for (size_t i = 0; i < walk.size(); ++i) {
      if (walk[i].vertex == x) return i;
    }
    throw GraphError("pole " + std::to_string(x) + " is not on the external face");
  };
  const size_t iu = find(u);
  const size_t iv = find(v);
  auto collect = [&](size_t from, size_t to) {
    HalfBoundary hb;
    size_t i = from;
    hb.vertices.push_back(walk[i].vertex);
    while (i != to) {
      hb.edges.push_back(walk[i].leaving);
      i = (i + 1) % walk.size();
      hb.vertices.push_back(walk[i].vertex);
    }
    return hb;
  };
  HalfBoundary uv = collect(iu, iv);
  HalfBoundary vu = collect(iv, iu);
  std::set<Vertex> first(uv.vertices.begin() + 1, uv.vertices.end() - 1);
  for (size_t i = 1; i + 1 < vu.vertices.size(); ++i) {
    if (first.count(vu.vertices[i])) {
      uv.bifacial.insert(vu.vertices[i]);
      vu.bifacial.insert(vu.vertices[i]);
    }
  }
  (void)g_nu;
  return {uv, vu};
}

Signature restrict_signature(const Signature& sigma, const std::set<Vertex>& bifacial,
                             const std::set<Vertex>& plus_in_inner_face) {
  Signature out = sigma;
  for (Symbol& s : out) {
    if (s.undecided() && bifacial.count(s.vertex) && plus_in_inner_face.count(s.vertex)) {
      s = localized(s);
    }
  }
  return out;
}

Signature restrict_signature(const AngleAssignment& labels, const Signature& sigma,
                             const std::vector<FaceWalk>& faces, const std::set<int>& inner_faces,
                             const std::set<Vertex>& bifacial) {
  std::set<Vertex> plus;
  for (const FaceWalk& face : faces) {
    if (!inner_faces.count(face.id)) continue;
    for (size_t i = 0; i < face.boundary.size(); ++i) {
      AngleId id{face.id, static_cast<int>(i)};
      if (labels.contains(id) && labels.at(id) == 1) plus.insert(face.boundary[i].vertex);
    }
  }
  return restrict_signature(sigma, bifacial, plus);
}

}  // namespace stpec
