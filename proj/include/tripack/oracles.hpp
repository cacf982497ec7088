#ifndef TRIPACK_ORACLES_HPP
#define TRIPACK_ORACLES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

inline constexpr std::int64_t kDefaultOracleBudget = 2'000'000'000;
inline constexpr int kMaxOracleTriangles = 2000;

struct NuResult {
    long long value = 0;
    TrianglePacking witness;
};

struct TauResult {
    long long value = 0;
    HittingSet witness;
};

struct MaxCutResult {
    long long value = 0;
    std::pair<std::vector<int>, std::vector<int>> sides;
};

// Exact maximum triangle packing by branch and bound: branch on the first
// free edge lying in some live triangle (exclude it from the packing, or
// include one of its triangles); a greedy packing seeds the incumbent.
// BudgetError when the triangle count exceeds kMaxOracleTriangles or the
// node budget runs out.
NuResult exact_nu(const Graph& g, std::int64_t node_budget = kDefaultOracleBudget);

// Exact minimum triangle hitting: pick an unhit triangle and branch over
// which of its edges enters the hitting set, pruning with the greedy-packing
// lower bound on the remaining graph. Memo-free DFS; budgets as exact_nu.
TauResult exact_tau(const Graph& g, std::int64_t node_budget = kDefaultOracleBudget);

// Exact maximum cut by gray-code enumeration of bipartitions (vertex 0 is
// pinned to one side). PreconditionError for n > 24.
MaxCutResult exact_max_cut(const Graph& g);

} // namespace tripack

#endif
