#include "tripack/graph.hpp"

#include <algorithm>
#include <bit>

namespace tripack {

Triangle::Triangle(int a, int b, int c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw DomainError("triangle vertices must be distinct");
}

Edge Triangle::edge(int i) const {
    switch (i) {
    case 0: return Edge(v[0], v[1]);
    case 1: return Edge(v[0], v[2]);
    default: return Edge(v[1], v[2]);
    }
}

Graph::Graph(int n) : n_(n), m_(0), words_((n + 63) / 64) {
    if (n < 0) throw DomainError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range [0," +
                          std::to_string(n_) + ")");
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return false;
    adj_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
    adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) return false;
    adj_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(1ULL << (v % 64));
    adj_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(1ULL << (u % 64));
    --m_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    return (adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        for (int w = u / 64; w < words_; ++w) {
            std::uint64_t bits = r[w];
            if (w == u / 64) bits &= ~((2ULL << (u % 64)) - 1); // only v > u
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                out.push_back(Edge(u, v));
            }
        }
    }
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

PartitionedGraph::PartitionedGraph(Graph graph, std::vector<VertexClass> classes)
    : graph_(std::move(graph)), classes_(std::move(classes)) {
    int n = graph_.vertex_count();
    class_of_.assign(n, -1);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        for (int v : classes_[c].vertices) {
            if (v < 0 || v >= n)
                throw ParseError("class vertex " + std::to_string(v) + " out of range");
            if (class_of_[v] != -1)
                throw ParseError("vertex " + std::to_string(v) + " appears in two classes");
            class_of_[v] = static_cast<int>(c);
        }
    }
    for (int v = 0; v < n; ++v)
        if (class_of_[v] == -1)
            throw ParseError("vertex " + std::to_string(v) + " not covered by any class");

    for (const VertexClass& cls : classes_) {
        for (std::size_t i = 0; i < cls.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.vertices.size(); ++j) {
                bool edge = graph_.has_edge(cls.vertices[i], cls.vertices[j]);
                if (cls.role == ClassRole::clique && !edge)
                    throw ParseError("clique class misses edge " +
                                     std::to_string(cls.vertices[i]) + "-" +
                                     std::to_string(cls.vertices[j]));
                if (cls.role == ClassRole::independent && edge)
                    throw ParseError("independent class contains edge " +
                                     std::to_string(cls.vertices[i]) + "-" +
                                     std::to_string(cls.vertices[j]));
            }
        }
    }

    complete_ = true;
    for (int u = 0; u < n && complete_; ++u)
        for (int v = u + 1; v < n && complete_; ++v)
            if (class_of_[u] != class_of_[v] && !graph_.has_edge(u, v)) complete_ = false;
}

bool PartitionedGraph::is_split() const {
    if (classes_.size() != 2) return false;
    return (classes_[0].role == ClassRole::clique && classes_[1].role == ClassRole::independent) ||
           (classes_[0].role == ClassRole::independent && classes_[1].role == ClassRole::clique);
}

const std::vector<int>& PartitionedGraph::clique_vertices() const {
    if (!is_split()) throw PreconditionError("not a split graph");
    return classes_[0].role == ClassRole::clique ? classes_[0].vertices : classes_[1].vertices;
}

const std::vector<int>& PartitionedGraph::independent_vertices() const {
    if (!is_split()) throw PreconditionError("not a split graph");
    return classes_[0].role == ClassRole::independent ? classes_[0].vertices
                                                      : classes_[1].vertices;
}

std::size_t EdgeColoring::edge_count() const {
    std::size_t total = 0;
    for (const auto& cls : classes) total += cls.size();
    return total;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
    std::vector<Triangle> out;
    int words = g.words_per_row();
    for (const Edge& e : g.edges()) {
        const std::uint64_t* ru = g.row(e.u);
        const std::uint64_t* rv = g.row(e.v);
        // common neighbours w > e.v keep (u,v,w) canonical and unique
        for (int w = e.v / 64; w < words; ++w) {
            std::uint64_t bits = ru[w] & rv[w];
            if (w == e.v / 64) bits &= ~((2ULL << (e.v % 64)) - 1);
            while (bits) {
                int x = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                Triangle t;
                t.v = {e.u, e.v, x};
                out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool validate_packing(const Graph& g, const TrianglePacking& p) {
    std::vector<Edge> used;
    used.reserve(p.triangles.size() * 3);
    for (const Triangle& t : p.triangles) {
        for (int i = 0; i < 3; ++i) {
            Edge e = t.edge(i);
            if (!g.has_edge(e.u, e.v)) return false;
            used.push_back(e);
        }
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool validate_hitting(const Graph& g, const HittingSet& h) {
    Graph rest = g;
    for (const Edge& e : h.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        rest.remove_edge(e.u, e.v);
    }
    return enumerate_triangles(rest).empty();
}

bool validate_coloring(const Graph& g, const EdgeColoring& c) {
    std::vector<Edge> all;
    for (const auto& cls : c.classes) {
        std::vector<int> touched;
        for (const Edge& e : cls) {
            if (!g.has_edge(e.u, e.v)) return false;
            touched.push_back(e.u);
            touched.push_back(e.v);
            all.push_back(e);
        }
        std::sort(touched.begin(), touched.end());
        if (std::adjacent_find(touched.begin(), touched.end()) != touched.end())
            return false; // two edges of the class share a vertex
    }
    if (static_cast<int>(all.size()) != g.edge_count()) return false;
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int left, int right) {
    Graph g(left + right);
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) g.add_edge(u, left + v);
    return g;
}

PartitionedGraph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 0) throw DomainError("negative part size");
        n += p;
    }
    Graph g(n);
    std::vector<VertexClass> classes;
    std::vector<int> part_of(n);
    int next = 0;
    for (int p : parts) {
        VertexClass cls;
        cls.role = ClassRole::independent;
        for (int i = 0; i < p; ++i) {
            part_of[next] = static_cast<int>(classes.size());
            cls.vertices.push_back(next++);
        }
        classes.push_back(std::move(cls));
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return PartitionedGraph(std::move(g), std::move(classes));
}

PartitionedGraph complete_split(int k_size, int s_size) {
    if (k_size < 0 || s_size < 0) throw DomainError("negative class size");
    Graph g(k_size + s_size);
    VertexClass clique{ClassRole::clique, {}};
    VertexClass indep{ClassRole::independent, {}};
    for (int v = 0; v < k_size; ++v) clique.vertices.push_back(v);
    for (int v = 0; v < s_size; ++v) indep.vertices.push_back(k_size + v);
    for (int u = 0; u < k_size; ++u)
        for (int v = u + 1; v < k_size + s_size; ++v) g.add_edge(u, v);
    return PartitionedGraph(std::move(g), {std::move(clique), std::move(indep)});
}

Graph induced_edge_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vertices) in.at(v) = 1;
    Graph out(g.vertex_count());
    for (const Edge& e : g.edges())
        if (in[e.u] && in[e.v]) out.add_edge(e.u, e.v);
    return out;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
    Graph out = g;
    for (const Edge& e : edges) out.remove_edge(e.u, e.v);
    return out;
}

Graph graph_union(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw DomainError("graph union requires equal vertex counts");
    Graph out = a;
    for (const Edge& e : b.edges()) out.add_edge(e.u, e.v);
    return out;
}

} // namespace tripack
