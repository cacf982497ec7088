#ifndef TRIPACK_BOUNDS_HPP
#define TRIPACK_BOUNDS_HPP

#include <vector>

#include "tripack/graph.hpp"
#include "tripack/rational.hpp"

namespace tripack {

// Turn an edge coloring of g[x_set] into a packing of triangles with two
// vertices in x_set and one in y_set: the min(|Y|, k) largest classes are
// paired with distinct Y vertices (classes sorted by size descending, ties by
// class index; apexes in ascending vertex order). Requires every x-y pair to
// be an edge of g, and the coloring's classes to be disjoint matchings inside
// g[x_set] (they need not cover all of E(g[x_set]); the packing then extends
// exactly the colored edges). The result has at least
// min(1, |Y|/k) * (colored edge count) triangles.
TrianglePacking extend_packing(const Graph& g, const std::vector<int>& x_set,
                               const std::vector<int>& y_set, const EdgeColoring& coloring);

// Packing of the complete split graph (clique vertices 0..k_size-1,
// independent vertices k_size..k_size+s_size-1) in which every triangle has
// two clique vertices and one independent vertex; its size is at least
// (k_size-1)/2 * min(s_size, k_size), rounded down when fractional.
TrianglePacking complete_split_packing(int k_size, int s_size);

// Feder's exact maximum triangle packing size of the complete graph K_n.
long long nu_complete_formula(int n);

// nu(g) >= |T(g)| * nu(K_n) / C(n,3), for any graph on n >= 3 vertices.
Rational lower_bound_general(const Graph& g);

// nu(g) >= |T'| / max(|S|, |K|) for split graphs, where T' counts triangles
// with at least one vertex in each class.
Rational lower_bound_split(const PartitionedGraph& g);

// The factor n^2 / (3(4m - n^2)) bounding tau/nu on tripartite graphs with
// m > n^2/4 edges. DomainError when m <= n^2/4.
Rational tripartite_bound_factor(int n, int m);

// Triangle count lower bound n/9 * (4m - n^2); may be negative for sparse
// graphs.
Rational bollobas_triangle_bound(int n, int m);

// tau(g) <= m/2 - (n-1)/4 via the complement of a large edge cut.
Rational cut_upper_bound_tau(int n, int m);

} // namespace tripack

#endif
