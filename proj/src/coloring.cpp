#include "tripack/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tripack {

namespace {

// color -> neighbour reached through that color, or -1. One row per vertex.
class ColorTable {
public:
    ColorTable(int n, int colors)
        : n_(n), colors_(colors), at_(static_cast<std::size_t>(n) * colors, -1) {}

    int get(int v, int c) const { return at_[static_cast<std::size_t>(v) * colors_ + c]; }
    bool free_at(int v, int c) const { return get(v, c) == -1; }

    int lowest_free(int v) const {
        for (int c = 0; c < colors_; ++c)
            if (free_at(v, c)) return c;
        return -1;
    }

    int edge_color(int u, int v) const {
        for (int c = 0; c < colors_; ++c)
            if (get(u, c) == v) return c;
        return -1;
    }

    void assign(int u, int v, int c) {
        set(u, c, v);
        set(v, c, u);
    }
    void clear(int u, int v, int c) {
        set(u, c, -1);
        set(v, c, -1);
    }

    // Swap colors `first` and `second` along the maximal alternating path
    // leaving x through its `first`-colored edge (no-op if absent). The path
    // is collected before any recoloring so the walk never chases edges it
    // already flipped.
    void invert_path(int x, int first, int second) {
        struct Step {
            int u, v, color;
        };
        std::vector<Step> path;
        int cur = x;
        int expect = first;
        while (true) {
            int y = get(cur, expect);
            if (y == -1 || y == x) break; // endpoint, or the component is a cycle
            path.push_back({cur, y, expect});
            cur = y;
            expect = expect == first ? second : first;
        }
        for (const Step& s : path) clear(s.u, s.v, s.color);
        for (const Step& s : path) assign(s.u, s.v, s.color == first ? second : first);
    }

    EdgeColoring to_coloring(int colors_used) const {
        EdgeColoring out;
        out.classes.resize(colors_used);
        for (int v = 0; v < n_; ++v)
            for (int c = 0; c < colors_used; ++c) {
                int w = get(v, c);
                if (w > v) out.classes[c].push_back(Edge(v, w));
            }
        for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
        return out;
    }

private:
    void set(int v, int c, int w) { at_[static_cast<std::size_t>(v) * colors_ + c] = w; }

    int n_;
    int colors_;
    std::vector<int> at_;
};

void drop_empty_classes(EdgeColoring& c) {
    c.classes.erase(std::remove_if(c.classes.begin(), c.classes.end(),
                                   [](const std::vector<Edge>& cls) { return cls.empty(); }),
                    c.classes.end());
}

} // namespace

std::optional<Bipartition> find_bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (int v = 0; v < n; ++v)
        (side[v] == 1 ? out.second : out.first).push_back(v);
    return out;
}

EdgeColoring konig_color(const Graph& g, const Bipartition& bipartition) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int v : bipartition.first) side.at(v) = 0;
    for (int v : bipartition.second) {
        if (side.at(v) == 0) throw PreconditionError("bipartition sides overlap");
        side[v] = 1;
    }
    for (const Edge& e : g.edges())
        if (side[e.u] == -1 || side[e.v] == -1 || side[e.u] == side[e.v])
            throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                    " does not cross the bipartition");

    if (g.edge_count() == 0) return EdgeColoring{};
    int delta = g.max_degree();
    ColorTable table(n, delta);

    for (const Edge& e : g.edges()) {
        int alpha = table.lowest_free(e.u);
        if (table.free_at(e.v, alpha)) {
            table.assign(e.u, e.v, alpha);
            continue;
        }
        // alpha busy at v, beta busy at u: swap along the alpha/beta path
        // from v. In a bipartite graph that path cannot reach u, so
        // afterwards alpha is free at both endpoints.
        int beta = table.lowest_free(e.v);
        table.invert_path(e.v, alpha, beta);
        table.assign(e.u, e.v, alpha);
    }

    // a max-degree vertex meets every color, so all delta classes are nonempty
    return table.to_coloring(delta);
}

namespace {

// Misra & Gries fan construction for Vizing's bound.
struct VizingState {
    const Graph& g;
    ColorTable table;

    VizingState(const Graph& graph, int colors)
        : g(graph), table(graph.vertex_count(), colors) {}

    // Maximal fan of u starting at neighbour v: each next entry is a
    // neighbour whose connecting edge wears a color free at the previous
    // entry. Scanning restarts after every extension so the lowest-index
    // neighbour wins.
    std::vector<int> maximal_fan(int u, int v) {
        std::vector<int> fan{v};
        std::vector<char> used(g.vertex_count(), 0);
        used[v] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            for (int w : g.neighbors(u)) {
                if (used[w]) continue;
                int c = table.edge_color(u, w);
                if (c != -1 && table.free_at(fan.back(), c)) {
                    fan.push_back(w);
                    used[w] = 1;
                    extended = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Shift each fan edge's color one step towards the front; the last fan
    // edge ends up uncolored.
    void rotate_fan(int u, const std::vector<int>& fan) {
        for (std::size_t i = 0; i + 1 < fan.size(); ++i) {
            int c = table.edge_color(u, fan[i + 1]);
            int old = table.edge_color(u, fan[i]);
            if (old != -1) table.clear(u, fan[i], old);
            table.clear(u, fan[i + 1], c);
            table.assign(u, fan[i], c);
        }
    }

    void color_edge(int u, int v) {
        std::vector<int> fan = maximal_fan(u, v);
        int c = table.lowest_free(u);
        int d = table.lowest_free(fan.back());
        table.invert_path(u, d, c);
        // After the inversion some fan vertex has d free, and the fan prefix
        // up to the first such vertex is still a valid fan.
        std::size_t w = 0;
        while (w < fan.size() && !table.free_at(fan[w], d)) ++w;
        if (w == fan.size()) throw Error("internal: Misra-Gries fan invariant violated");
        fan.resize(w + 1);
        rotate_fan(u, fan);
        table.assign(u, fan.back(), d);
    }
};

} // namespace

EdgeColoring vizing_color(const Graph& g) {
    if (g.edge_count() == 0) return EdgeColoring{};
    int delta = g.max_degree();
    VizingState state(g, delta + 1);
    for (const Edge& e : g.edges()) state.color_edge(e.u, e.v);
    EdgeColoring out = state.table.to_coloring(delta + 1);
    drop_empty_classes(out);
    return out;
}

namespace {

std::vector<int> max_degree_vertices(const Graph& g) {
    int delta = g.max_degree();
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == delta) out.push_back(v);
    return out;
}

bool induces_forest(const Graph& g, const std::vector<int>& vertices) {
    Graph sub = induced_edge_subgraph(g, vertices);
    std::vector<int> parent(sub.vertex_count(), -2);
    for (int s : vertices) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            bool skipped_parent = false;
            for (int w : sub.neighbors(u)) {
                if (w == parent[u] && !skipped_parent) {
                    skipped_parent = true;
                    continue;
                }
                if (parent[w] != -2) return false; // second path to w: cycle
                parent[w] = u;
                stack.push_back(w);
            }
        }
    }
    return true;
}

// Try to recolor edge e (currently uncolored) with a color below `delta`,
// flipping at most one Kempe chain.
bool kempe_recolor(ColorTable& table, int delta, const Edge& e) {
    for (int c = 0; c < delta; ++c)
        if (table.free_at(e.u, c) && table.free_at(e.v, c)) {
            table.assign(e.u, e.v, c);
            return true;
        }
    for (int alpha = 0; alpha < delta; ++alpha) {
        if (!table.free_at(e.u, alpha)) continue;
        for (int beta = 0; beta < delta; ++beta) {
            if (beta == alpha || !table.free_at(e.v, beta)) continue;
            // If the alpha/beta chain starting at v avoids u, flipping it
            // frees alpha at v while leaving u untouched.
            int x = e.v;
            int expect = alpha;
            bool hits_u = false;
            while (true) {
                int y = table.get(x, expect);
                if (y == -1) break;
                if (y == e.u) {
                    hits_u = true;
                    break;
                }
                x = y;
                expect = expect == alpha ? beta : alpha;
            }
            if (hits_u) continue;
            table.invert_path(e.v, alpha, beta);
            table.assign(e.u, e.v, alpha);
            return true;
        }
    }
    return false;
}

// Exhaustive search for a coloring with exactly `delta` classes, choosing the
// most constrained edge first, lowest color first. Color classes are
// interchangeable, so the edges at one maximum-degree vertex are pinned to
// colors 0,1,... up front; every solution can be permuted into that form.
class BacktrackColorer {
public:
    BacktrackColorer(const Graph& g, int delta, std::int64_t budget)
        : edges_(g.edges()), delta_(delta), budget_(budget), used_(g.vertex_count(), 0),
          assigned_(edges_.size(), -1) {
        if (delta > 63) throw PreconditionError("backtracking limited to max degree 63");
        full_ = delta == 0 ? 0 : (~0ULL >> (64 - delta));

        int pivot = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > g.degree(pivot)) pivot = v;
        int next = 0;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].u != pivot && edges_[i].v != pivot) continue;
            assigned_[i] = next;
            used_[edges_[i].u] |= 1ULL << next;
            used_[edges_[i].v] |= 1ULL << next;
            ++pinned_;
            ++next;
        }
    }

    bool run(ColorTable& table) {
        if (!search(pinned_)) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            table.assign(edges_[i].u, edges_[i].v, assigned_[i]);
        return true;
    }

private:
    std::uint64_t options(const Edge& e) const { return ~(used_[e.u] | used_[e.v]) & full_; }

    bool search(std::size_t colored) {
        if (colored == edges_.size()) return true;
        if (++nodes_ > budget_) throw BudgetError("edge-coloring search budget exceeded");
        std::size_t pick = edges_.size();
        int fewest = delta_ + 1;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (assigned_[i] != -1) continue;
            int cnt = std::popcount(options(edges_[i]));
            if (cnt < fewest) {
                fewest = cnt;
                pick = i;
                if (cnt == 0) break;
            }
        }
        std::uint64_t opts = options(edges_[pick]);
        while (opts) {
            int c = std::countr_zero(opts);
            opts &= opts - 1;
            const Edge& e = edges_[pick];
            assigned_[pick] = c;
            used_[e.u] |= 1ULL << c;
            used_[e.v] |= 1ULL << c;
            if (search(colored + 1)) return true;
            used_[e.u] &= ~(1ULL << c);
            used_[e.v] &= ~(1ULL << c);
            assigned_[pick] = -1;
        }
        return false;
    }

    std::vector<Edge> edges_;
    int delta_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::size_t pinned_ = 0;
    std::uint64_t full_ = 0;
    std::vector<std::uint64_t> used_;
    std::vector<int> assigned_;
};

} // namespace

EdgeColoring delta_color_class1(const Graph& g, std::int64_t search_budget) {
    if (g.edge_count() == 0) return EdgeColoring{};
    if (!induces_forest(g, max_degree_vertices(g)))
        throw PreconditionError("maximum-degree vertices do not induce a forest");

    int delta = g.max_degree();
    EdgeColoring attempt = vizing_color(g);
    if (static_cast<int>(attempt.class_count()) <= delta) return attempt;

    // Vizing used an extra class. Try to dissolve one class into the others
    // via Kempe chains, attempting every class as the victim, smallest first,
    // and sweeping its edges until no further edge moves.
    std::vector<std::size_t> victims(attempt.classes.size());
    std::iota(victims.begin(), victims.end(), 0);
    std::stable_sort(victims.begin(), victims.end(), [&](std::size_t a, std::size_t b) {
        return attempt.classes[a].size() < attempt.classes[b].size();
    });
    for (std::size_t victim : victims) {
        ColorTable table(g.vertex_count(), delta);
        int next = 0;
        for (std::size_t i = 0; i < attempt.classes.size(); ++i) {
            if (i == victim) continue;
            for (const Edge& e : attempt.classes[i]) table.assign(e.u, e.v, next);
            ++next;
        }
        std::vector<Edge> pending = attempt.classes[victim];
        bool progress = true;
        while (progress && !pending.empty()) {
            progress = false;
            for (std::size_t i = 0; i < pending.size();) {
                if (kempe_recolor(table, delta, pending[i])) {
                    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
                    progress = true;
                } else {
                    ++i;
                }
            }
        }
        if (pending.empty()) return table.to_coloring(delta);
    }

    ColorTable fresh(g.vertex_count(), delta);
    BacktrackColorer colorer(g, delta, search_budget);
    if (!colorer.run(fresh))
        throw PreconditionError("no edge coloring with max-degree classes exists");
    return fresh.to_coloring(delta);
}

} // namespace tripack
