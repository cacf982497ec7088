#ifndef TRIPACK_GRAPH_HPP
#define TRIPACK_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tripack/errors.hpp"

namespace tripack {

// Undirected edge in canonical (min,max) form.
struct Edge {
    int u;
    int v;

    Edge() : u(0), v(0) {}
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Three distinct vertices in ascending order.
struct Triangle {
    std::array<int, 3> v;

    Triangle() : v{0, 0, 0} {}
    Triangle(int a, int b, int c);

    Edge edge(int i) const;  // i in {0,1,2}: (v0,v1), (v0,v2), (v1,v2)

    friend bool operator==(const Triangle& a, const Triangle& b) { return a.v == b.v; }
    friend bool operator!=(const Triangle& a, const Triangle& b) { return !(a == b); }
    friend bool operator<(const Triangle& a, const Triangle& b) { return a.v < b.v; }
};

// Simple undirected graph on vertices 0..n-1, adjacency stored as bitset rows
// so neighbourhood intersections (the inner loop of triangle enumeration) are
// word operations.
class Graph {
public:
    Graph() : n_(0), m_(0), words_(0) {}
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    // Rejects loops and out-of-range endpoints; returns false if the edge was
    // already present.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;

    // Canonical edges in ascending (u,v) order.
    std::vector<Edge> edges() const;
    std::vector<int> neighbors(int v) const;

    bool connected() const;

    // Raw adjacency row of v, words_per_row() words of 64 bits each.
    const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_;
    int m_;
    int words_;
    std::vector<std::uint64_t> adj_;
};

enum class ClassRole { clique, independent };

struct VertexClass {
    ClassRole role;
    std::vector<int> vertices;
};

// Graph plus labelled vertex classes (clique / independent roles), used for
// split and k-partite structure. Construction validates that the classes
// partition the vertex set and that each class induces the subgraph its role
// demands; the completeness flag records whether every cross-class pair is an
// edge.
class PartitionedGraph {
public:
    PartitionedGraph(Graph graph, std::vector<VertexClass> classes);

    const Graph& graph() const { return graph_; }
    const std::vector<VertexClass>& classes() const { return classes_; }
    int class_of(int v) const { return class_of_[v]; }
    bool complete() const { return complete_; }

    bool is_split() const;
    // For split graphs: the clique / independent class. PreconditionError otherwise.
    const std::vector<int>& clique_vertices() const;
    const std::vector<int>& independent_vertices() const;

private:
    Graph graph_;
    std::vector<VertexClass> classes_;
    std::vector<int> class_of_;
    bool complete_;
};

// Pairwise edge-disjoint triangles (the nu-side certificate); disjointness is
// checked by validate_packing, not by the container.
struct TrianglePacking {
    std::vector<Triangle> triangles;

    std::size_t size() const { return triangles.size(); }
};

// Edge set whose removal is meant to leave the graph triangle-free (the
// tau-side certificate).
struct HittingSet {
    std::vector<Edge> edges;

    std::size_t size() const { return edges.size(); }
};

// Ordered list of matchings.
struct EdgeColoring {
    std::vector<std::vector<Edge>> classes;

    std::size_t class_count() const { return classes.size(); }
    std::size_t edge_count() const;
};

// All vertex triples inducing triangles, each once, (v0<v1<v2) ascending.
std::vector<Triangle> enumerate_triangles(const Graph& g);

// True iff every triangle of p exists in g and no edge is used twice.
bool validate_packing(const Graph& g, const TrianglePacking& p);

// True iff h's edges all exist in g and g minus h is triangle-free.
bool validate_hitting(const Graph& g, const HittingSet& h);

// True iff the classes partition E(g) and each class is a matching.
bool validate_coloring(const Graph& g, const EdgeColoring& c);

// Builders used throughout the tests and the harness.
Graph complete_graph(int n);
Graph complete_bipartite(int left, int right);
// Complete multipartite graph; vertices are assigned part by part in order.
PartitionedGraph complete_multipartite(const std::vector<int>& parts);
// Clique vertices 0..k-1, independent vertices k..k+s-1, all cross edges.
PartitionedGraph complete_split(int k_size, int s_size);

// Same vertex set, only the edges with both endpoints inside `vertices`.
Graph induced_edge_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph remove_edges(const Graph& g, const std::vector<Edge>& edges);
Graph graph_union(const Graph& a, const Graph& b);

} // namespace tripack

#endif
