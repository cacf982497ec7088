#include "tripack/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace tripack {

namespace {

void validate_network(const FlowNetwork& net) {
    if (net.node_count <= 0) throw PreconditionError("flow network needs nodes");
    if (net.source < 0 || net.source >= net.node_count || net.sink < 0 ||
        net.sink >= net.node_count || net.source == net.sink)
        throw PreconditionError("bad source/sink");
    for (const Arc& a : net.arcs) {
        if (a.tail < 0 || a.tail >= net.node_count || a.head < 0 || a.head >= net.node_count)
            throw PreconditionError("arc endpoint out of range");
        if (a.capacity < 0) throw PreconditionError("negative arc capacity");
        if (a.head == net.source) throw PreconditionError("arc into the source");
        if (a.tail == net.sink) throw PreconditionError("arc out of the sink");
    }
}

} // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    validate_network(net);
    int n = net.node_count;
    // residual arcs stored pairwise: 2i forward, 2i+1 backward
    std::vector<int> head(net.arcs.size() * 2), residual(net.arcs.size() * 2);
    std::vector<std::vector<int>> out(n);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const Arc& a = net.arcs[i];
        head[2 * i] = a.head;
        residual[2 * i] = a.capacity;
        head[2 * i + 1] = a.tail;
        residual[2 * i + 1] = 0;
        out[a.tail].push_back(static_cast<int>(2 * i));
        out[a.head].push_back(static_cast<int>(2 * i + 1));
    }

    MaxFlowResult result;
    std::vector<int> via(n);
    while (true) {
        std::fill(via.begin(), via.end(), -1);
        via[net.source] = -2;
        std::queue<int> bfs;
        bfs.push(net.source);
        while (!bfs.empty() && via[net.sink] == -1) {
            int u = bfs.front();
            bfs.pop();
            for (int arc : out[u]) {
                if (residual[arc] > 0 && via[head[arc]] == -1) {
                    via[head[arc]] = arc;
                    bfs.push(head[arc]);
                }
            }
        }
        if (via[net.sink] == -1) break;
        int push = std::numeric_limits<int>::max();
        for (int v = net.sink; v != net.source; v = head[via[v] ^ 1])
            push = std::min(push, residual[via[v]]);
        for (int v = net.sink; v != net.source; v = head[via[v] ^ 1]) {
            residual[via[v]] -= push;
            residual[via[v] ^ 1] += push;
        }
        result.value += push;
    }

    result.arc_flows.resize(net.arcs.size());
    for (std::size_t i = 0; i < net.arcs.size(); ++i)
        result.arc_flows[i] = net.arcs[i].capacity - residual[2 * i];
    return result;
}

namespace {

void validate_bipartite_sides(const Graph& g, const BipartiteSides& sides) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int v : sides.first) side.at(v) = 0;
    for (int v : sides.second) {
        if (side.at(v) == 0) throw PreconditionError("bipartite sides overlap");
        side[v] = 1;
    }
    for (const Edge& e : g.edges())
        if (side[e.u] == -1 || side[e.v] == -1 || side[e.u] == side[e.v])
            throw PreconditionError("graph is not bipartite on the given sides");
}

// Network: source -> C vertex (cap f), C -> D per edge (cap 1), D -> sink (cap f).
FlowNetwork factor_network(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f) {
    int n = g.vertex_count();
    FlowNetwork net;
    net.node_count = n + 2;
    net.source = n;
    net.sink = n + 1;
    std::vector<char> in_c(n, 0);
    for (int v : sides.first) in_c[v] = 1;
    for (int v : sides.first) net.arcs.push_back({net.source, v, f.at(v)});
    for (int v : sides.second) net.arcs.push_back({v, net.sink, f.at(v)});
    for (const Edge& e : g.edges()) {
        int c = in_c[e.u] ? e.u : e.v;
        int d = in_c[e.u] ? e.v : e.u;
        net.arcs.push_back({c, d, 1});
    }
    return net;
}

bool flow_feasible(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f) {
    int fc = f.sum_over(sides.first);
    int fd = f.sum_over(sides.second);
    if (fc != fd) return false;
    return max_flow(factor_network(g, sides, f)).value == fd;
}

} // namespace

bool ore_ryser_feasible(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f) {
    validate_bipartite_sides(g, sides);
    const std::vector<int>& d_side = sides.second;
    if (d_side.size() > 20) return flow_feasible(g, sides, f);

    if (f.sum_over(sides.first) != f.sum_over(d_side)) return false;
    std::vector<std::vector<int>> nbrs(d_side.size());
    for (std::size_t i = 0; i < d_side.size(); ++i) nbrs[i] = g.neighbors(d_side[i]);

    std::uint32_t subsets = 1u << d_side.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        int fd = 0;
        for (std::size_t i = 0; i < d_side.size(); ++i)
            if (mask & (1u << i)) fd += f.at(d_side[i]);
        // N(D') with per-neighbour |N(y) cap D'| counts
        std::map<int, int> hit;
        for (std::size_t i = 0; i < d_side.size(); ++i)
            if (mask & (1u << i))
                for (int y : nbrs[i]) hit[y] += 1;
        int rhs = 0;
        for (const auto& [y, count] : hit) rhs += std::min(f.at(y), count);
        if (fd > rhs) return false;
    }
    return true;
}

Graph f_factor(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f) {
    validate_bipartite_sides(g, sides);
    int fc = f.sum_over(sides.first);
    int fd = f.sum_over(sides.second);
    if (fc != fd) throw InfeasibleError("side degree sums differ");
    FlowNetwork net = factor_network(g, sides, f);
    MaxFlowResult flow = max_flow(net);
    if (flow.value != fd) throw InfeasibleError("no f-factor exists");
    Graph out(g.vertex_count());
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        const Arc& a = net.arcs[i];
        if (a.tail != net.source && a.head != net.sink && flow.arc_flows[i] == 1)
            out.add_edge(a.tail, a.head);
    }
    return out;
}

DegreeSpec balanced_factor(int c_size, int d_size, int k) {
    if (c_size < 0 || d_size < 0) throw DomainError("negative side size");
    if (k < 0 || k > c_size)
        throw DomainError("required degree k=" + std::to_string(k) + " outside [0," +
                          std::to_string(c_size) + "]");
    DegreeSpec f;
    int total = k * d_size;
    if (c_size > 0) {
        int lo = total / c_size;
        int r = total % c_size;
        for (int v = 0; v < c_size; ++v) f.required[v] = v < r ? lo + 1 : lo;
    } else if (total > 0) {
        throw DomainError("empty C side cannot carry positive degree sum");
    }
    for (int v = 0; v < d_size; ++v) f.required[c_size + v] = k;
    return f;
}

} // namespace tripack
