#ifndef TRIPACK_HARNESS_HPP
#define TRIPACK_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripack/graph.hpp"
#include "tripack/oracles.hpp"

namespace tripack {

// One experiment instance: the inequality under test either held (pass) or
// did not. Rows marked informational are recorded for context but lie outside
// the theorem's hypotheses (for dense split graphs, n <= 8).
struct ReportRow {
    std::string instance_id;
    int n = 0;
    int m = 0;
    std::string shape; // class sizes, e.g. "K=5;S=4" or "3|3|3" or "2,1,1,1"
    std::optional<long long> nu_exact;
    std::optional<long long> tau_exact;
    std::vector<std::pair<std::string, std::string>> bounds; // (name, exact value)
    std::string ratio; // exact rational string, empty when undefined
    bool informational = false;
    bool budget_exceeded = false;
    bool pass = true;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExperimentReport {
    std::vector<ReportRow> rows;
    std::string max_ratio;                    // largest ratio over rows, "" if none
    std::vector<std::string> counterexamples; // ids of failing rows (expected empty)

    int failures() const { return static_cast<int>(counterexamples.size()); }
    void finalize(); // fills max_ratio / counterexamples from the rows

    std::string to_json() const;
    std::string to_csv() const;
    static ExperimentReport from_json(const std::string& text);

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

// Random split graph with minimum degree at least delta_min: clique size
// drawn uniformly from the feasible range, independent vertices attached with
// coin-flip neighborhoods in the clique, then degree deficits repaired with
// extra cross edges. InfeasibleError after the retry budget.
PartitionedGraph gen_split(int n, int delta_min, std::uint64_t seed);

// Random tripartite graph with exactly m edges: class labels drawn uniformly
// per vertex (resampled until the classes admit m edges), then m cross pairs
// chosen by shuffle. InfeasibleError when no class assignment can carry m.
PartitionedGraph gen_tripartite(int n, int m, std::uint64_t seed);

// Seeded split graphs with delta >= ceil(3n/5); each row checks
// tau <= 2*nu and records the split packing lower bound and the clique-edge
// hitting upper bound. Rows with n <= 8 are marked informational.
ExperimentReport verify_split_dense(int trials, int n_max, std::uint64_t seed,
                                    std::int64_t oracle_budget = kDefaultOracleBudget);

// Seeded tripartite graphs with m > n^2/4; each row checks
// tau <= n^2/(3(4m-n^2)) * nu.
ExperimentReport verify_tripartite_dense(int trials, int n_max, std::uint64_t seed,
                                         std::int64_t oracle_budget = kDefaultOracleBudget);

// certify() over every part tuple 1 <= d <= c <= b <= a <= a_max with at
// least five vertices; checks the certificate ratio <= 3/2 and, where the
// oracles are cheap (n <= 10), that the certificate never beats the exact
// values and that tau/nu <= 3/2 exactly.
ExperimentReport sweep_4partite(int a_max,
                                std::int64_t oracle_budget = kDefaultOracleBudget);

} // namespace tripack

#endif
