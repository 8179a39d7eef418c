#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "stpec/digraph.hpp"
#include "stpec/planarity.hpp"
#include "stpec/upward.hpp"

namespace stpec {

/// Shape of a switch angle on a face: both boundary edges leave the vertex
/// (Src) or both enter it (Snk).
enum class AngleType : std::uint8_t { Src, Snk };

/// A switch angle on a face boundary, with its label (-1 or +1).
struct SwitchSlot {
  Vertex vertex = 0;
  AngleType type = AngleType::Src;
  int label = -1;

  friend bool operator==(const SwitchSlot&, const SwitchSlot&) = default;
};

/// Slot of a simplified boundary: a switch angle, or one representative for a
/// maximal run of non-switch angles.
struct BoundarySlot {
  bool is_run = false;
  SwitchSlot angle;             // valid when !is_run
  std::vector<Vertex> members;  // the collapsed run, in walk order
  Vertex representative = 0;
};

struct SimplifiedBoundary {
  std::vector<BoundarySlot> slots;
  int switch_angles = 0;
};

/// Collapses every maximal run of non-switch angles of the face into one slot
/// whose representative is the first vertex of the run (or the last, when
/// `last_representative`).
SimplifiedBoundary simplify_boundary(const Digraph& g, const FaceWalk& face,
                                     const AngleAssignment& labels,
                                     bool last_representative = false);

/// Saturating edges added inside one face.
struct FaceSolution {
  int count = 0;
  std::vector<Edge> edges;  // sorted
  /// External face only: the source and sink left unsaturated.
  std::optional<std::pair<Vertex, Vertex>> kept;
};

/// Minimum set of non-crossing saturating edges for a face given as the cyclic
/// sequence of its switch angles. Inner faces: every +1 switch is saturated.
/// External face: all but one +1 source and one +1 sink are saturated. The
/// subdivided face must stay upward (every inner piece balances to -2, the
/// outer piece to +2). Returns nullopt when no solution uses at most `budget`
/// edges. Ties go to the lexicographically smallest sorted edge list.
std::optional<FaceSolution> solve_face(const std::vector<SwitchSlot>& slots, bool external,
                                       int budget);

/// Switch angles of a face walk in walk order.
std::vector<SwitchSlot> switch_slots(const Digraph& g, const FaceWalk& face,
                                     const AngleAssignment& labels);

/// Inner-face minimum; nullopt is the infinity marker.
std::optional<FaceSolution> min_saturating_edges(const Digraph& g, const FaceWalk& face,
                                                 const AngleAssignment& labels,
                                                 int budget = 1 << 20);

/// External-face minimum, keeping one source and one sink unsaturated.
std::optional<FaceSolution> min_saturating_edges_external(const Digraph& g, const FaceWalk& face,
                                                          const AngleAssignment& labels,
                                                          int budget = 1 << 20);

/// Positional chords (tail slot, head slot) on a cycle of `slot_count` slots.
using Chord = std::pair<int, int>;

/// True if two chords on a cycle cross (endpoints strictly interleave).
bool chords_cross(Chord a, Chord b, int slot_count);

/// Full validity test of a chord set on a switch-angle cycle: non-crossing,
/// orientation/bimodality at every slot, and the balance of every piece.
/// On success for the external face, `kept` receives the unsaturated pair.
bool valid_saturation(const std::vector<SwitchSlot>& slots, const std::vector<Chord>& chords,
                      bool external, std::optional<std::pair<int, int>>* kept = nullptr);

}  // namespace stpec
