#ifndef TRIPACK_COLORING_HPP
#define TRIPACK_COLORING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

using Bipartition = std::pair<std::vector<int>, std::vector<int>>;

// Proper edge coloring of a bipartite graph with exactly max_degree classes
// (zero classes when edgeless). Every edge must have one endpoint in each
// side of `bipartition`; PreconditionError otherwise. Classic constructive
// proof: insert edges one at a time, recoloring one alternating path when the
// endpoints have no common missing color.
EdgeColoring konig_color(const Graph& g, const Bipartition& bipartition);

// A 2-coloring of the vertices touched by edges, if one exists. Isolated
// vertices are placed on the first side.
std::optional<Bipartition> find_bipartition(const Graph& g);

// Proper edge coloring with at most max_degree+1 classes (Misra-Gries fan
// rotation plus alternating-path recoloring). Deterministic: lowest-index
// color and lowest-index vertex win every tie.
EdgeColoring vizing_color(const Graph& g);

// Proper edge coloring with exactly max_degree classes, for graphs whose
// maximum-degree vertices induce a forest (such a coloring then exists).
// Runs vizing_color first; if that used an extra class, tries Kempe-chain
// elimination of the smallest class, then falls back to backtracking over
// edge colors. PreconditionError if the max-degree vertices contain a cycle,
// BudgetError if the backtracking search exceeds `search_budget` nodes.
EdgeColoring delta_color_class1(const Graph& g, std::int64_t search_budget = 10'000'000);

} // namespace tripack

#endif
