#pragma once

#include <optional>
#include <vector>

#include "stpec/digraph.hpp"

namespace stpec {

struct OracleResult {
  std::optional<int> minimum;
  std::optional<std::vector<Edge>> witness;
  long long nodes_explored = 0;
};

/// Smallest set of at most k_max new oriented edges (never parallel or
/// anti-parallel to an existing edge) making g st-planar. Sets are tried by
/// size, then in lexicographic order, so the witness is the smallest such
/// set. Throws GraphError above 10 vertices.
OracleResult brute_force_min_completion(const Digraph& g, int k_max);

/// st-planarity decided by trying every rotation system of g: some planar
/// one (V - E + F = 2) must have its unique source and sink on a common face.
/// Throws GraphError above 6 vertices.
bool exhaustive_st_check(const Digraph& g);

}  // namespace stpec
