#ifndef TRIPACK_HITTING_HPP
#define TRIPACK_HITTING_HPP

#include <cstdint>

#include "tripack/graph.hpp"

namespace tripack {

// All edges inside the clique class of a split graph. Valid because every
// triangle of a split graph has at least two clique vertices, hence a clique
// edge. PreconditionError when g is not split.
HittingSet clique_edges_hitting(const PartitionedGraph& g);

// The complement of a large edge cut: no triangle can have all three edges
// crossing a bipartition, so the non-cut edges hit every triangle. The cut is
// found exactly for n <= 24 and by seeded 1-flip local search with restarts
// beyond that, until it reaches the guaranteed size m/2 + (n-1)/4;
// InfeasibleError if the search cannot reach that size (disconnected input
// or restart budget exhausted).
HittingSet cut_complement_hitting(const Graph& g, std::uint64_t seed = 0,
                                  int restart_budget = 1000);

} // namespace tripack

#endif
