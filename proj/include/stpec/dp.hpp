#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stpec/digraph.hpp"
#include "stpec/planarity.hpp"
#include "stpec/spqr.hpp"
#include "stpec/upward.hpp"

namespace stpec {

/// What an ancestor needs to know about one pole of a pertinent graph.
struct PoleState {
  Dir dir_uv = Dir::Out;  // the pole's edge on B_uv
  Dir dir_vu = Dir::Out;  // the pole's edge on B_vu
  /// No internal angle of the pole is +1. Always true for non-switches.
  bool active = true;
  /// Internal angles of a non-switch pole whose two edges differ in direction.
  int zeros = 0;

  friend auto operator<=>(const PoleState&, const PoleState&) = default;
};

/// Candidate tuple: signatures of B_uv and B_vu plus the two pole states.
struct TableKey {
  Signature sigma1;
  Signature sigma2;
  PoleState u;
  PoleState v;

  friend auto operator<=>(const TableKey&, const TableKey&) = default;
};

std::string to_string(const TableKey& key);

/// The tuple of the mirrored embedding.
TableKey mirrored(const TableKey& key);

struct Backpointer {
  std::vector<std::pair<int, TableKey>> children;  // (child node, chosen tuple)
  std::vector<Edge> local;                         // saturating edges added here
};

struct TableEntry {
  int cost = 0;
  std::vector<Edge> witness;  // sorted
  Backpointer back;
};

using Table = std::map<TableKey, TableEntry>;

struct DpStats {
  long long entries_stored = 0;
  long long long_signatures_discarded = 0;
  /// Stored entries with a signature longer than 4k+2; must stay zero.
  long long stored_long_signatures = 0;
  /// Faces that passed the balance check but admit no saturation at all.
  long long infeasible_faces = 0;

  void merge(const DpStats& o);
};

struct DpContext {
  const SpqrTree& tree;
  int k = 0;
  const PlanarEmbedding* fixed = nullptr;
  DpStats* stats = nullptr;
  SwitchClass switches;

  DpContext(const SpqrTree& t, int budget, const PlanarEmbedding* fixed_embedding, DpStats* s);
};

Table process_q_node(const DpContext& ctx, int id);
Table process_s_node(const DpContext& ctx, int id, const std::vector<Table>& tables);

/// Skeleton indices of the P-node children that are processed: all Q-children
/// and non-empty children, plus at most 4k+11 children whose tables hold only
/// empty signature pairs.
std::vector<int> prune_p_children(const DpContext& ctx, int id, const std::vector<Table>& tables);

Table process_p_node(const DpContext& ctx, int id, const std::vector<Table>& tables);
Table process_r_node(const DpContext& ctx, int id, const std::vector<Table>& tables);

/// Tables for every node except the root Q-node, bottom-up.
std::vector<Table> compute_tables(const DpContext& ctx);

/// Edges collected by replaying backpointers from (node, key).
std::vector<Edge> reconstruct_witness(const std::vector<Table>& tables, int node,
                                      const TableKey& key);

void dump_table(std::ostream& os, const SpqrTree& tree, int id, const Table& table);

struct RootedSolution {
  int cost = 0;
  std::vector<Edge> witness;
};

/// Minimum completion with at most k edges keeping edge e on the external
/// face. With `fixed`, only that embedding (and its external face) is used.
std::optional<RootedSolution> solve_rooted(const Digraph& g, EdgeId e, int k,
                                           const PlanarEmbedding* fixed = nullptr,
                                           DpStats* stats = nullptr, std::ostream* trace = nullptr);

struct SolveOptions {
  const PlanarEmbedding* fixed_embedding = nullptr;
  std::optional<EdgeId> ref_edge;
  int jobs = 1;
  std::ostream* trace = nullptr;
};

struct RootOutcome {
  EdgeId edge = 0;
  std::optional<int> cost;
};

struct SolveResult {
  bool yes = false;
  std::optional<int> min_edges;
  std::optional<std::vector<Edge>> witness;
  std::optional<RejectReason> rejected;
  std::vector<RootOutcome> per_edge;
  DpStats stats;
};

SolveResult solve(const Digraph& g, int k, const SolveOptions& options = {});

}  // namespace stpec
