#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stpec/digraph.hpp"
#include "stpec/planarity.hpp"

namespace stpec {

/// Direction of an edge as seen from one of its endpoints.
enum class Dir : std::uint8_t { Out, In };

inline Dir dir_at(const Edge& e, Vertex v) { return e.tail == v ? Dir::Out : Dir::In; }

/// An angle is a corner of a face walk: (face id, position in the walk).
struct AngleId {
  int face = 0;
  int position = 0;

  friend auto operator<=>(const AngleId&, const AngleId&) = default;
};

/// Labels in {-1, 0, +1} keyed by angle.
class AngleAssignment {
 public:
  void set(AngleId angle, int label) { labels_[angle] = label; }
  [[nodiscard]] int at(AngleId angle) const { return labels_.at(angle); }
  [[nodiscard]] bool contains(AngleId angle) const { return labels_.count(angle) != 0; }
  [[nodiscard]] const std::map<AngleId, int>& labels() const { return labels_; }

 private:
  std::map<AngleId, int> labels_;
};

/// A corner is a switch angle when both of its edges leave (or both enter) it.
bool is_switch_angle(const Digraph& g, const Corner& corner);

/// Balance check for one face plus the label-kind constraints: non-switch
/// angles are 0, switch angles are -1 or +1 (+1 only at switches of g), and
/// #(+1) - #(-1) is -2 for an inner face, +2 for the external face.
bool check_upward_face(const Digraph& g, const FaceWalk& face, const AngleAssignment& labels,
                       bool is_external);

/// Property (i)/(ii) at v over all faces of the embedding.
bool check_upward_vertex(const Digraph& g, const PlanarEmbedding& embedding,
                         const AngleAssignment& labels, Vertex v);

enum class SymbolKind : std::uint8_t { Src, Snk, SrcLocal, SnkLocal };

struct Symbol {
  SymbolKind kind = SymbolKind::Src;
  Vertex vertex = 0;

  [[nodiscard]] bool undecided() const { return kind == SymbolKind::Src || kind == SymbolKind::Snk; }
  [[nodiscard]] bool source_like() const { return kind == SymbolKind::Src || kind == SymbolKind::SrcLocal; }

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Signature = std::vector<Symbol>;

/// Renders e.g. "σ3 τℓ5"; the empty signature renders as "∅".
std::string to_string(const Signature& sigma);

/// Short means at most 4k+2 symbols.
bool is_short(const Signature& sigma, int k);

Signature reversed(const Signature& sigma);

/// A switch-vertex-of-G symbol turned into its local (forced -1) variant.
Symbol localized(Symbol s);

/// A path between the poles along the external face.
struct HalfBoundary {
  std::vector<Vertex> vertices;  // from the first pole to the second
  std::vector<EdgeId> edges;     // edges[i] joins vertices[i] and vertices[i+1]
  std::set<Vertex> bifacial;     // interior vertices lying on both half-boundaries
};

/// Signature of a simple undirected path of g; switch status is taken from g.
Signature signature_of_path(const Digraph& g, const HalfBoundary& path);

/// The two half-boundaries of an embedded graph with poles u, v on its
/// external face: B_uv walks the external face from u to v, B_vu from v back
/// to u. Throws GraphError if a pole is not on the external face.
std::pair<HalfBoundary, HalfBoundary> half_boundaries(const Digraph& g_nu,
                                                      const PlanarEmbedding& embedding, Vertex u,
                                                      Vertex v);

/// Replaces each undecided symbol whose vertex is bifacial and makes a +1
/// angle in an inner face by its local variant. Symbol count is unchanged.
Signature restrict_signature(const Signature& sigma, const std::set<Vertex>& bifacial,
                             const std::set<Vertex>& plus_in_inner_face);

/// Same, reading the +1 angles from an assignment over the given inner faces.
Signature restrict_signature(const AngleAssignment& labels, const Signature& sigma,
                             const std::vector<FaceWalk>& faces, const std::set<int>& inner_faces,
                             const std::set<Vertex>& bifacial);

}  // namespace stpec
