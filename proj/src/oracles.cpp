#include "tripack/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace tripack {

namespace {

struct TriangleSystem {
    std::vector<Edge> edges;                    // canonical ascending order
    std::vector<Triangle> triangles;            // canonical ascending order
    std::vector<std::array<int, 3>> tri_edges;  // edge ids per triangle
    std::vector<std::vector<int>> edge_tris;    // triangle ids per edge

    explicit TriangleSystem(const Graph& g) {
        edges = g.edges();
        triangles = enumerate_triangles(g);
        if (static_cast<int>(triangles.size()) > kMaxOracleTriangles)
            throw BudgetError("triangle count " + std::to_string(triangles.size()) +
                              " exceeds the oracle limit of " +
                              std::to_string(kMaxOracleTriangles));
        std::map<Edge, int> id;
        for (std::size_t i = 0; i < edges.size(); ++i) id[edges[i]] = static_cast<int>(i);
        edge_tris.resize(edges.size());
        tri_edges.resize(triangles.size());
        for (std::size_t t = 0; t < triangles.size(); ++t) {
            for (int i = 0; i < 3; ++i) {
                int e = id.at(triangles[t].edge(i));
                tri_edges[t][i] = e;
                edge_tris[e].push_back(static_cast<int>(t));
            }
        }
    }
};

class NuSolver {
public:
    NuSolver(const Graph& g, std::int64_t budget) : sys_(g), budget_(budget) {
        edge_free_.assign(sys_.edges.size(), 1);
    }

    NuResult run() {
        // greedy seed: first-fit over the canonical triangle order
        std::vector<int> greedy = greedy_packing();
        best_ = static_cast<long long>(greedy.size());
        best_set_ = greedy;
        chosen_.clear();
        dfs(0);
        NuResult out;
        out.value = best_;
        for (int t : best_set_) out.witness.triangles.push_back(sys_.triangles[t]);
        std::sort(out.witness.triangles.begin(), out.witness.triangles.end());
        return out;
    }

private:
    bool triangle_live(int t) const {
        const auto& te = sys_.tri_edges[t];
        return edge_free_[te[0]] && edge_free_[te[1]] && edge_free_[te[2]];
    }

    std::vector<int> greedy_packing() const {
        std::vector<char> free = edge_free_;
        std::vector<int> take;
        for (std::size_t t = 0; t < sys_.triangles.size(); ++t) {
            const auto& te = sys_.tri_edges[t];
            if (free[te[0]] && free[te[1]] && free[te[2]]) {
                free[te[0]] = free[te[1]] = free[te[2]] = 0;
                take.push_back(static_cast<int>(t));
            }
        }
        return take;
    }

    void dfs(long long count) {
        if (++nodes_ > budget_) throw BudgetError("packing search budget exceeded");

        // upper bound: every further triangle consumes 3 live edges
        int live_edges = 0;
        int branch_edge = -1;
        for (std::size_t e = 0; e < sys_.edges.size(); ++e) {
            if (!edge_free_[e]) continue;
            bool in_live = false;
            for (int t : sys_.edge_tris[e])
                if (triangle_live(t)) {
                    in_live = true;
                    break;
                }
            if (in_live) {
                ++live_edges;
                if (branch_edge == -1) branch_edge = static_cast<int>(e);
            }
        }
        if (branch_edge == -1) {
            if (count > best_) {
                best_ = count;
                best_set_ = chosen_;
            }
            return;
        }
        if (count + live_edges / 3 <= best_) return;

        // include one of the live triangles through the branch edge
        for (int t : sys_.edge_tris[branch_edge]) {
            if (!triangle_live(t)) continue;
            const auto& te = sys_.tri_edges[t];
            edge_free_[te[0]] = edge_free_[te[1]] = edge_free_[te[2]] = 0;
            chosen_.push_back(t);
            dfs(count + 1);
            chosen_.pop_back();
            edge_free_[te[0]] = edge_free_[te[1]] = edge_free_[te[2]] = 1;
        }
        // or exclude the edge from the packing altogether
        edge_free_[branch_edge] = 0;
        dfs(count);
        edge_free_[branch_edge] = 1;
    }

    TriangleSystem sys_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    long long best_ = 0;
    std::vector<char> edge_free_;
    std::vector<int> chosen_;
    std::vector<int> best_set_;
};

class TauSolver {
public:
    TauSolver(const Graph& g, std::int64_t budget) : sys_(g), budget_(budget) {
        hit_.assign(sys_.edges.size(), 0);
        excluded_.assign(sys_.edges.size(), 0);
    }

    TauResult run() {
        greedy_hitting();
        dfs(0);
        TauResult out;
        out.value = best_;
        for (std::size_t e = 0; e < sys_.edges.size(); ++e)
            if (best_hit_[e]) out.witness.edges.push_back(sys_.edges[e]);
        return out;
    }

private:
    bool triangle_unhit(int t) const {
        const auto& te = sys_.tri_edges[t];
        return !hit_[te[0]] && !hit_[te[1]] && !hit_[te[2]];
    }

    // initial incumbent: repeatedly hit the edge meeting the most unhit triangles
    void greedy_hitting() {
        std::vector<char> saved_hit = hit_;
        long long count = 0;
        while (true) {
            std::vector<int> cover(sys_.edges.size(), 0);
            int best_edge = -1;
            for (std::size_t t = 0; t < sys_.triangles.size(); ++t) {
                if (!triangle_unhit(static_cast<int>(t))) continue;
                for (int e : sys_.tri_edges[t]) {
                    ++cover[e];
                    if (best_edge == -1 || cover[e] > cover[best_edge]) best_edge = e;
                }
            }
            if (best_edge == -1) break;
            hit_[best_edge] = 1;
            ++count;
        }
        best_ = count;
        best_hit_ = hit_;
        hit_ = saved_hit;
    }

    // greedy packing of unhit triangles; a valid lower bound on the hits
    // still required
    long long packing_bound() const {
        std::vector<char> used(sys_.edges.size(), 0);
        long long size = 0;
        for (std::size_t t = 0; t < sys_.triangles.size(); ++t) {
            const auto& te = sys_.tri_edges[t];
            if (hit_[te[0]] || hit_[te[1]] || hit_[te[2]]) continue;
            if (used[te[0]] || used[te[1]] || used[te[2]]) continue;
            used[te[0]] = used[te[1]] = used[te[2]] = 1;
            ++size;
        }
        return size;
    }

    void dfs(long long count) {
        if (++nodes_ > budget_) throw BudgetError("hitting search budget exceeded");
        if (count >= best_) return;

        // choose the unhit triangle with the fewest hittable edges
        int pick = -1;
        int pick_options = 4;
        for (std::size_t t = 0; t < sys_.triangles.size(); ++t) {
            if (!triangle_unhit(static_cast<int>(t))) continue;
            const auto& te = sys_.tri_edges[t];
            int options = !excluded_[te[0]] + !excluded_[te[1]] + !excluded_[te[2]];
            if (options < pick_options) {
                pick_options = options;
                pick = static_cast<int>(t);
                if (options == 0) break;
            }
        }
        if (pick == -1) {
            best_ = count;
            best_hit_ = hit_;
            return;
        }
        if (pick_options == 0) return; // triangle can no longer be hit
        if (count + packing_bound() >= best_) return;

        // hit one edge; edges already tried are excluded in later branches
        const auto& te = sys_.tri_edges[pick];
        std::array<int, 3> order{te[0], te[1], te[2]};
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return sys_.edge_tris[a].size() > sys_.edge_tris[b].size();
        });
        std::vector<int> newly_excluded;
        for (int e : order) {
            if (excluded_[e]) continue;
            hit_[e] = 1;
            dfs(count + 1);
            hit_[e] = 0;
            excluded_[e] = 1;
            newly_excluded.push_back(e);
        }
        for (int e : newly_excluded) excluded_[e] = 0;
    }

    TriangleSystem sys_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    long long best_ = 0;
    std::vector<char> hit_;
    std::vector<char> excluded_;
    std::vector<char> best_hit_;
};

} // namespace

NuResult exact_nu(const Graph& g, std::int64_t node_budget) {
    return NuSolver(g, node_budget).run();
}

TauResult exact_tau(const Graph& g, std::int64_t node_budget) {
    return TauSolver(g, node_budget).run();
}

MaxCutResult exact_max_cut(const Graph& g) {
    int n = g.vertex_count();
    if (n > 24) throw PreconditionError("exact max cut limited to 24 vertices");
    MaxCutResult out;
    if (n <= 1) {
        for (int v = 0; v < n; ++v) out.sides.first.push_back(v);
        return out;
    }

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(adj[v]);

    // gray-code walk over sides of vertices 1..n-1; vertex 0 stays on side 0
    std::uint32_t side1 = 0;
    long long cut = 0;
    long long best = 0;
    std::uint32_t best_mask = 0;
    std::uint64_t total = 1ULL << (n - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i) + 1;
        int on1 = std::popcount(adj[v] & side1);
        int on0 = deg[v] - on1;
        bool was_on_side1 = (side1 >> v) & 1;
        cut += was_on_side1 ? on1 - on0 : on0 - on1;
        side1 ^= 1u << v;
        if (cut > best) {
            best = cut;
            best_mask = side1;
        }
    }

    out.value = best;
    for (int v = 0; v < n; ++v)
        ((best_mask >> v) & 1 ? out.sides.second : out.sides.first).push_back(v);
    return out;
}

} // namespace tripack
