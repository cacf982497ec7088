// Acceptance suite: runs the toolkit's end-to-end guarantees and prints one
// pass/fail line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tripack/bounds.hpp"
#include "tripack/coloring.hpp"
#include "tripack/flow.hpp"
#include "tripack/four_partite.hpp"
#include "tripack/harness.hpp"
#include "tripack/hitting.hpp"
#include "tripack/oracles.hpp"
#include "tripack/rng.hpp"

using namespace tripack;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& detail, const std::string& message) {
    if (!ok && detail.empty()) detail = message;
    return ok;
}

// ---- criterion bodies ------------------------------------------------------

bool sweep_ratio(std::string& detail) {
    ExperimentReport report = sweep_4partite(6);
    bool ok = true;
    for (const ReportRow& row : report.rows)
        ok &= check(row.pass, detail, "row " + row.instance_id + " failed");
    ok &= check(report.rows.size() == 125, detail, "expected 125 part tuples");
    return ok;
}

bool tightness(std::string& detail) {
    PartitionedGraph host = build_complete_4partite(FourPartiteSpec(2, 1, 1, 1));
    long long nu = exact_nu(host.graph()).value;
    long long tau = exact_tau(host.graph()).value;
    bool ok = check(nu == 2, detail, "nu(2,1,1,1) = " + std::to_string(nu));
    ok &= check(tau == 3, detail, "tau(2,1,1,1) = " + std::to_string(tau));
    return ok;
}

bool feder_formula(std::string& detail) {
    const long long expected[] = {0, 1, 1, 2, 4, 7, 8, 12};
    bool ok = true;
    for (int n = 2; n <= 9; ++n) {
        long long formula = nu_complete_formula(n);
        long long oracle = exact_nu(complete_graph(n)).value;
        ok &= check(formula == expected[n - 2], detail,
                    "formula(" + std::to_string(n) + ") = " + std::to_string(formula));
        ok &= check(oracle == formula, detail,
                    "oracle(K_" + std::to_string(n) + ") = " + std::to_string(oracle));
    }
    return ok;
}

bool tripartite_equality(std::string& detail) {
    PartitionedGraph host = complete_multipartite({3, 3, 3});
    long long nu = exact_nu(host.graph()).value;
    long long tau = exact_tau(host.graph()).value;
    Rational factor = tripartite_bound_factor(9, 27);
    bool ok = check(nu == 9, detail, "nu(K_333) = " + std::to_string(nu));
    ok &= check(tau == 9, detail, "tau(K_333) = " + std::to_string(tau));
    ok &= check(factor == Rational(1), detail, "factor(9,27) = " + factor.str());
    ok &= check(Rational(tau) == factor * Rational(nu), detail, "equality violated");
    return ok;
}

bool dense_split(std::string& detail) {
    ExperimentReport report = verify_split_dense(100, 12, 0x5EED5EEDULL);
    bool ok = check(report.rows.size() == 100, detail, "expected 100 rows");
    ok &= check(report.failures() == 0, detail,
                std::to_string(report.failures()) + " counterexamples");
    return ok;
}

bool dense_tripartite(std::string& detail) {
    ExperimentReport report = verify_tripartite_dense(100, 12, 0x7EED7EEDULL);
    bool ok = check(report.rows.size() == 100, detail, "expected 100 rows");
    ok &= check(report.failures() == 0, detail,
                std::to_string(report.failures()) + " counterexamples");
    for (const ReportRow& row : report.rows)
        ok &= check(4 * row.m > row.n * row.n, detail, "sparse row generated");
    return ok;
}

bool coloring_properties(std::string& detail) {
    SplitMix64 rng(0xC0105EEDULL);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        int left = 1 + static_cast<int>(rng.below(15));
        int right = 1 + static_cast<int>(rng.below(15));
        Graph g(left + right);
        int percent = 15 + static_cast<int>(rng.below(80));
        for (int u = 0; u < left; ++u)
            for (int v = 0; v < right; ++v)
                if (rng.below(100) < static_cast<std::uint64_t>(percent))
                    g.add_edge(u, left + v);
        Bipartition sides;
        for (int v = 0; v < left; ++v) sides.first.push_back(v);
        for (int v = 0; v < right; ++v) sides.second.push_back(left + v);
        EdgeColoring c = konig_color(g, sides);
        ok &= check(validate_coloring(g, c), detail, "konig coloring invalid");
        std::size_t want = g.edge_count() == 0 ? 0 : static_cast<std::size_t>(g.max_degree());
        ok &= check(c.class_count() == want, detail, "konig class count != max degree");
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(15));
        Graph g(n);
        int percent = 15 + static_cast<int>(rng.below(80));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
        EdgeColoring c = vizing_color(g);
        ok &= check(validate_coloring(g, c), detail, "vizing coloring invalid");
        if (g.edge_count() > 0)
            ok &= check(c.class_count() <= static_cast<std::size_t>(g.max_degree() + 1),
                        detail, "vizing exceeded max degree + 1");
    }
    return ok;
}

bool f_factor_equivalence(std::string& detail) {
    SplitMix64 rng(0xFAC70BEDULL);
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
        int left = 1 + static_cast<int>(rng.below(7));
        int right = 1 + static_cast<int>(rng.below(7));
        Graph g(left + right);
        int percent = 25 + static_cast<int>(rng.below(70));
        for (int u = 0; u < left; ++u)
            for (int v = 0; v < right; ++v)
                if (rng.below(100) < static_cast<std::uint64_t>(percent))
                    g.add_edge(u, left + v);
        BipartiteSides sides;
        for (int v = 0; v < left; ++v) sides.first.push_back(v);
        for (int v = 0; v < right; ++v) sides.second.push_back(left + v);
        DegreeSpec f;
        for (int v = 0; v < left + right; ++v)
            f.required[v] = static_cast<int>(rng.below(g.degree(v) + 1));

        bool ore = ore_ryser_feasible(g, sides, f);
        int fc = f.sum_over(sides.first);
        int fd = f.sum_over(sides.second);
        FlowNetwork net;
        net.node_count = g.vertex_count() + 2;
        net.source = g.vertex_count();
        net.sink = g.vertex_count() + 1;
        for (int v : sides.first) net.arcs.push_back({net.source, v, f.at(v)});
        for (int v : sides.second) net.arcs.push_back({v, net.sink, f.at(v)});
        for (const Edge& e : g.edges()) {
            bool u_in_c = e.u < left;
            net.arcs.push_back({u_in_c ? e.u : e.v, u_in_c ? e.v : e.u, 1});
        }
        bool flow = fc == fd && max_flow(net).value == fd;
        ok &= check(ore == flow, detail, "ore-ryser and flow disagree");
        if (ore) {
            Graph factor = f_factor(g, sides, f);
            for (int v = 0; v < g.vertex_count(); ++v)
                ok &= check(factor.degree(v) == f.at(v), detail, "factor degree off");
        }
    }
    return ok;
}

bool extend_packing_property(std::string& detail) {
    SplitMix64 rng(0xE87E4DULL);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        Graph g;
        std::vector<int> x_set, y_set;
        if (trial % 2 == 0) {
            int k = 2 + static_cast<int>(rng.below(6));
            int s = 1 + static_cast<int>(rng.below(6));
            PartitionedGraph split = complete_split(k, s);
            g = split.graph();
            x_set = split.clique_vertices();
            y_set = split.independent_vertices();
        } else {
            int parts_count = 2 + static_cast<int>(rng.below(3));
            std::vector<int> parts;
            for (int i = 0; i < parts_count; ++i)
                parts.push_back(1 + static_cast<int>(rng.below(4)));
            int apex = 1 + static_cast<int>(rng.below(4));
            parts.push_back(apex);
            PartitionedGraph multi = complete_multipartite(parts);
            g = multi.graph();
            // the last part plays Y, the rest are X
            for (const VertexClass& cls : multi.classes()) {
                if (&cls == &multi.classes().back())
                    y_set = cls.vertices;
                else
                    x_set.insert(x_set.end(), cls.vertices.begin(), cls.vertices.end());
            }
        }
        EdgeColoring coloring = vizing_color(induced_edge_subgraph(g, x_set));
        TrianglePacking p = extend_packing(g, x_set, y_set, coloring);
        ok &= check(validate_packing(g, p), detail, "extended packing invalid");
        long long colored = static_cast<long long>(coloring.edge_count());
        if (coloring.class_count() > 0) {
            Rational bound = std::min(Rational(1),
                                      Rational(static_cast<std::int64_t>(y_set.size()),
                                               static_cast<std::int64_t>(
                                                   coloring.class_count()))) *
                             Rational(colored);
            ok &= check(Rational(static_cast<std::int64_t>(p.size())) >= bound, detail,
                        "lemma bound missed");
        }
        x_set.clear();
        y_set.clear();
    }
    return ok;
}

bool cut_complement_property(std::string& detail) {
    SplitMix64 rng(0xC07C07ULL);
    bool ok = true;
    int produced = 0;
    while (produced < 200) {
        int n = 3 + static_cast<int>(rng.below(8)); // n <= 10
        Graph g(n);
        int percent = 30 + static_cast<int>(rng.below(65));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
        if (!g.connected()) continue;
        ++produced;
        HittingSet h = cut_complement_hitting(g);
        ok &= check(validate_hitting(g, h), detail, "cut complement not a hitting set");
        ok &= check(4 * static_cast<long long>(h.size()) <=
                        2LL * g.edge_count() - (n - 1),
                    detail, "cut complement exceeds m/2 - (n-1)/4");
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1. 4-partite sweep a<=6: valid certificates, ratio <= 3/2", sweep_ratio},
        {"2. tightness at (2,1,1,1): nu=2, tau=3", tightness},
        {"3. Feder formula matches exact nu(K_n), 2<=n<=9", feder_formula},
        {"4. K_{3,3,3}: nu=tau=9 and factor(9,27)=1", tripartite_equality},
        {"5. 100 dense split graphs (n<=12): tau <= 2 nu", dense_split},
        {"6. 100 dense tripartite graphs (n<=12): tau <= factor * nu", dense_tripartite},
        {"7. konig=Delta on 200 bipartite; vizing<=Delta+1 on 200 graphs", coloring_properties},
        {"8. ore-ryser == flow feasibility on 500 bipartite instances", f_factor_equivalence},
        {"9. extend_packing meets the lemma bound on 100 instances", extend_packing_property},
        {"10. cut-complement hitting size <= m/2-(n-1)/4 on 200 graphs", cut_complement_property},
    };

    int failed = 0;
    for (Criterion& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        std::printf("%s  %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(),
                    seconds, detail.empty() ? "" : " - ", detail.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed;
}
