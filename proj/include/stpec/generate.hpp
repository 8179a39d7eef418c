#pragma once

#include <cstdint>

#include "stpec/digraph.hpp"

namespace stpec {

/// Cycle on 2m vertices whose edges alternate direction: m sources, m sinks.
Digraph alt_cycle(int m);

/// Random biconnected planar acyclic digraph on n >= 3 vertices. Grows a
/// plane graph from a triangle by ears (a new vertex joined to two vertices of
/// a face) and chords, then orients edges along a random vertex order.
/// Identical seeds give identical graphs.
Digraph random_planar(int n, std::uint64_t seed);

/// Default seed, overridden by the STPEC_SEED environment variable.
std::uint64_t default_seed();

}  // namespace stpec
