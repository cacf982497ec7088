#ifndef TRIPACK_FLOW_HPP
#define TRIPACK_FLOW_HPP

#include <map>
#include <utility>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

// Required degree per vertex. Vertices absent from the map require 0.
struct DegreeSpec {
    std::map<int, int> required;

    int at(int v) const {
        auto it = required.find(v);
        return it == required.end() ? 0 : it->second;
    }
    int sum_over(const std::vector<int>& vertices) const {
        int s = 0;
        for (int v : vertices) s += at(v);
        return s;
    }
};

struct Arc {
    int tail;
    int head;
    int capacity;
};

struct FlowNetwork {
    int node_count = 0;
    std::vector<Arc> arcs;
    int source = 0;
    int sink = 0;
};

struct MaxFlowResult {
    int value = 0;
    std::vector<int> arc_flows; // parallel to FlowNetwork::arcs
};

// Integral maximum flow by shortest augmenting paths (Edmonds-Karp).
// Validates the network shape: capacities >= 0, no arcs into the source or
// out of the sink.
MaxFlowResult max_flow(const FlowNetwork& net);

using BipartiteSides = std::pair<std::vector<int>, std::vector<int>>;

// Ore-Ryser feasibility of an f-factor in a bipartite graph on sides (C, D):
// f(C) = f(D) and, for every D' <= D,
//   f(D') <= sum over y in N(D') of min(f(y), |N(y) cap D'|).
// Checked by direct subset enumeration for |D| <= 20 and through max-flow
// feasibility beyond that (the two are equivalent).
bool ore_ryser_feasible(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f);

// A spanning subgraph H of g with d_H(v) = f(v) for every vertex, built from
// an integral flow. InfeasibleError if none exists.
Graph f_factor(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f);

// Degree prescription over the complete bipartite graph with sides of size
// c_size (vertices 0..c_size-1) and d_size (vertices c_size..c_size+d_size-1):
// every D vertex requires k, and C vertices take ceil(k*d/c) or floor(k*d/c)
// so that both sides sum to k*d_size. The first (k*d_size mod c_size)
// C-vertices receive the ceiling value.
DegreeSpec balanced_factor(int c_size, int d_size, int k);

} // namespace tripack

#endif
