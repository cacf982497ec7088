#ifndef TRIPACK_JSON_IO_HPP
#define TRIPACK_JSON_IO_HPP

#include <optional>
#include <string>

#include "tripack/graph.hpp"

namespace tripack {

// Graph JSON format used by every CLI command:
//   {
//     "n": <int>,
//     "classes": [ {"role": "clique"|"independent", "vertices": [int,...]}, ... ],
//     "edges": [ [u,v], ... ]
//   }
// "classes" may be empty or absent (plain graph). A non-empty class list must
// satisfy the PartitionedGraph invariants; any violation raises ParseError
// with a description of the offending field.
struct LoadedGraph {
    Graph graph;
    std::optional<PartitionedGraph> partitioned;
};

LoadedGraph graph_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
std::string graph_to_json(const PartitionedGraph& pg);

std::string coloring_to_json(const EdgeColoring& c);
std::string packing_to_json(const TrianglePacking& p);
std::string hitting_to_json(const HittingSet& h);
std::string triangles_to_json(const std::vector<Triangle>& ts);

} // namespace tripack

#endif
