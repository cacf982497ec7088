#include "tripack/harness.hpp"

#include <algorithm>
#include <json.hpp>

#include "tripack/bounds.hpp"
#include "tripack/four_partite.hpp"
#include "tripack/hitting.hpp"
#include "tripack/rational.hpp"
#include "tripack/rng.hpp"

namespace tripack {

using nlohmann::json;

void ExperimentReport::finalize() {
    max_ratio.clear();
    counterexamples.clear();
    std::optional<Rational> best;
    for (const ReportRow& row : rows) {
        if (!row.pass) counterexamples.push_back(row.instance_id);
        if (!row.ratio.empty()) {
            std::size_t slash = row.ratio.find('/');
            Rational r = slash == std::string::npos
                             ? Rational(std::stoll(row.ratio))
                             : Rational(std::stoll(row.ratio.substr(0, slash)),
                                        std::stoll(row.ratio.substr(slash + 1)));
            if (!best || r > *best) best = r;
        }
    }
    if (best) max_ratio = best->str();
}

std::string ExperimentReport::to_json() const {
    json doc;
    doc["rows"] = json::array();
    for (const ReportRow& row : rows) {
        json r;
        r["instance_id"] = row.instance_id;
        r["n"] = row.n;
        r["m"] = row.m;
        r["shape"] = row.shape;
        if (row.nu_exact) r["nu_exact"] = *row.nu_exact;
        if (row.tau_exact) r["tau_exact"] = *row.tau_exact;
        json bounds = json::array();
        for (const auto& [name, value] : row.bounds)
            bounds.push_back(json::array({name, value}));
        r["bounds"] = bounds;
        r["ratio"] = row.ratio;
        r["informational"] = row.informational;
        r["budget_exceeded"] = row.budget_exceeded;
        r["pass"] = row.pass;
        doc["rows"].push_back(r);
    }
    doc["summary"]["max_ratio"] = max_ratio;
    doc["summary"]["counterexamples"] = counterexamples;
    doc["summary"]["failures"] = failures();
    return doc.dump();
}

ExperimentReport ExperimentReport::from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed report JSON");
    ExperimentReport report;
    for (const json& r : doc.at("rows")) {
        ReportRow row;
        row.instance_id = r.at("instance_id").get<std::string>();
        row.n = r.at("n").get<int>();
        row.m = r.at("m").get<int>();
        row.shape = r.at("shape").get<std::string>();
        if (r.contains("nu_exact")) row.nu_exact = r.at("nu_exact").get<long long>();
        if (r.contains("tau_exact")) row.tau_exact = r.at("tau_exact").get<long long>();
        for (const json& b : r.at("bounds"))
            row.bounds.emplace_back(b.at(0).get<std::string>(), b.at(1).get<std::string>());
        row.ratio = r.at("ratio").get<std::string>();
        row.informational = r.at("informational").get<bool>();
        row.budget_exceeded = r.at("budget_exceeded").get<bool>();
        row.pass = r.at("pass").get<bool>();
        report.rows.push_back(std::move(row));
    }
    report.max_ratio = doc.at("summary").at("max_ratio").get<std::string>();
    for (const json& c : doc.at("summary").at("counterexamples"))
        report.counterexamples.push_back(c.get<std::string>());
    return report;
}

std::string ExperimentReport::to_csv() const {
    std::string out = "instance_id,n,m,shape,nu_exact,tau_exact,bounds,ratio,pass\n";
    for (const ReportRow& row : rows) {
        out += row.instance_id + ',' + std::to_string(row.n) + ',' + std::to_string(row.m) +
               ',' + row.shape + ',';
        out += row.nu_exact ? std::to_string(*row.nu_exact) : std::string();
        out += ',';
        out += row.tau_exact ? std::to_string(*row.tau_exact) : std::string();
        out += ',';
        for (std::size_t i = 0; i < row.bounds.size(); ++i) {
            if (i) out += ';';
            out += row.bounds[i].first + '=' + row.bounds[i].second;
        }
        out += ',' + row.ratio + ',' + (row.pass ? "1" : "0") + '\n';
    }
    return out;
}

PartitionedGraph gen_split(int n, int delta_min, std::uint64_t seed) {
    if (n < 1) throw DomainError("gen_split needs n >= 1");
    if (delta_min < 0 || delta_min > n - 1)
        throw DomainError("delta_min outside [0, n-1]");
    SplitMix64 rng(seed);

    int k_lo = std::max(1, delta_min);
    for (int attempt = 0; attempt < 200; ++attempt) {
        int k = static_cast<int>(rng.range(k_lo, n));
        Graph g(n);
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
        for (int s = k; s < n; ++s)
            for (int u = 0; u < k; ++u)
                if (rng.coin()) g.add_edge(u, s);

        // repair: raise the minimum degree with extra cross edges
        bool stuck = false;
        while (!stuck) {
            int v = 0;
            for (int u = 1; u < n; ++u)
                if (g.degree(u) < g.degree(v)) v = u;
            if (g.degree(v) >= delta_min) break;
            std::vector<int> candidates;
            if (v >= k) {
                for (int u = 0; u < k; ++u)
                    if (!g.has_edge(u, v)) candidates.push_back(u);
            } else {
                for (int s = k; s < n; ++s)
                    if (!g.has_edge(v, s)) candidates.push_back(s);
            }
            if (candidates.empty())
                stuck = true;
            else
                g.add_edge(v, candidates[rng.below(candidates.size())]);
        }
        if (stuck) continue;

        VertexClass clique{ClassRole::clique, {}};
        VertexClass indep{ClassRole::independent, {}};
        for (int v = 0; v < k; ++v) clique.vertices.push_back(v);
        for (int v = k; v < n; ++v) indep.vertices.push_back(v);
        return PartitionedGraph(std::move(g), {std::move(clique), std::move(indep)});
    }
    throw InfeasibleError("gen_split retry budget exhausted");
}

PartitionedGraph gen_tripartite(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw DomainError("gen_tripartite needs n, m >= 0");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> label(n);
        for (int v = 0; v < n; ++v) label[v] = static_cast<int>(rng.below(3));
        std::vector<std::pair<int, int>> cross;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (label[u] != label[v]) cross.emplace_back(u, v);
        if (static_cast<int>(cross.size()) < m) continue;
        rng.shuffle(cross);
        Graph g(n);
        for (int i = 0; i < m; ++i) g.add_edge(cross[i].first, cross[i].second);
        std::vector<VertexClass> classes(3);
        for (auto& cls : classes) cls.role = ClassRole::independent;
        for (int v = 0; v < n; ++v) classes[label[v]].vertices.push_back(v);
        return PartitionedGraph(std::move(g), std::move(classes));
    }
    throw InfeasibleError("no tripartite class assignment admits m=" + std::to_string(m));
}

namespace {

std::string pad_id(const char* prefix, int i) {
    std::string num = std::to_string(i);
    return std::string(prefix) + std::string(num.size() >= 4 ? 0 : 4 - num.size(), '0') + num;
}

} // namespace

ExperimentReport verify_split_dense(int trials, int n_max, std::uint64_t seed,
                                    std::int64_t oracle_budget) {
    if (n_max < 5) throw DomainError("verify_split_dense needs n_max >= 5");
    ExperimentReport report;
    SplitMix64 master(seed);
    for (int i = 0; i < trials; ++i) {
        std::uint64_t row_seed = master.next();
        SplitMix64 rng(row_seed);
        int n = static_cast<int>(rng.range(5, n_max));
        int delta_min = (3 * n + 4) / 5; // ceil(3n/5)
        PartitionedGraph pg = gen_split(n, delta_min, rng.next());

        ReportRow row;
        row.instance_id = pad_id("split-", i);
        row.n = n;
        row.m = pg.graph().edge_count();
        row.shape = "K=" + std::to_string(pg.clique_vertices().size()) +
                    ";S=" + std::to_string(pg.independent_vertices().size());
        row.informational = n <= 8;
        try {
            NuResult nu = exact_nu(pg.graph(), oracle_budget);
            TauResult tau = exact_tau(pg.graph(), oracle_budget);
            row.nu_exact = nu.value;
            row.tau_exact = tau.value;
            if (nu.value > 0)
                row.ratio = Rational(tau.value, nu.value).str();
            row.bounds.emplace_back("nu_lower_split", lower_bound_split(pg).str());
            row.bounds.emplace_back(
                "tau_upper_clique",
                std::to_string(clique_edges_hitting(pg).size()));
            row.pass = tau.value <= 2 * nu.value;
        } catch (const BudgetError&) {
            row.budget_exceeded = true;
            row.pass = false;
        }
        report.rows.push_back(std::move(row));
    }
    report.finalize();
    return report;
}

ExperimentReport verify_tripartite_dense(int trials, int n_max, std::uint64_t seed,
                                         std::int64_t oracle_budget) {
    if (n_max < 4) throw DomainError("verify_tripartite_dense needs n_max >= 4");
    ExperimentReport report;
    SplitMix64 master(seed);
    for (int i = 0; i < trials; ++i) {
        std::uint64_t row_seed = master.next();
        SplitMix64 rng(row_seed);
        // sample until the class assignment can carry a dense edge count
        PartitionedGraph pg = [&] {
            while (true) {
                int n = static_cast<int>(rng.range(4, n_max));
                int dense_min = n * n / 4 + 1; // m > n^2/4
                int m_cap = n * n / 3;
                if (m_cap < dense_min) continue;
                int m = static_cast<int>(rng.range(dense_min, m_cap));
                try {
                    return gen_tripartite(n, m, rng.next());
                } catch (const InfeasibleError&) {
                    continue;
                }
            }
        }();

        int n = pg.graph().vertex_count();
        int m = pg.graph().edge_count();
        ReportRow row;
        row.instance_id = pad_id("tri-", i);
        row.n = n;
        row.m = m;
        std::string shape;
        for (const VertexClass& cls : pg.classes()) {
            if (!shape.empty()) shape += '|';
            shape += std::to_string(cls.vertices.size());
        }
        row.shape = shape;
        try {
            Rational factor = tripartite_bound_factor(n, m);
            NuResult nu = exact_nu(pg.graph(), oracle_budget);
            TauResult tau = exact_tau(pg.graph(), oracle_budget);
            row.nu_exact = nu.value;
            row.tau_exact = tau.value;
            if (nu.value > 0)
                row.ratio = Rational(tau.value, nu.value).str();
            row.bounds.emplace_back("factor", factor.str());
            row.bounds.emplace_back("bollobas_triangles",
                                    bollobas_triangle_bound(n, m).str());
            row.pass = Rational(tau.value) <= factor * Rational(nu.value);
        } catch (const BudgetError&) {
            row.budget_exceeded = true;
            row.pass = false;
        }
        report.rows.push_back(std::move(row));
    }
    report.finalize();
    return report;
}

ExperimentReport sweep_4partite(int a_max, std::int64_t oracle_budget) {
    if (a_max < 2) throw DomainError("sweep_4partite needs a_max >= 2");
    ExperimentReport report;
    for (int a = 1; a <= a_max; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= b; ++c)
                for (int d = 1; d <= c; ++d) {
                    if (a + b + c + d < 5) continue;
                    FourPartiteSpec spec(a, b, c, d);
                    PartitionedGraph pg = build_complete_4partite(spec);

                    ReportRow row;
                    row.instance_id = "4p-" + std::to_string(a) + "," + std::to_string(b) +
                                      "," + std::to_string(c) + "," + std::to_string(d);
                    row.n = spec.total();
                    row.m = pg.graph().edge_count();
                    row.shape = std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + "," + std::to_string(d);
                    try {
                        TuzaCertificate cert = certify(spec);
                        row.ratio = cert.ratio.str();
                        row.bounds.emplace_back("certificate_packing",
                                                std::to_string(cert.packing.size()));
                        row.bounds.emplace_back("certificate_hitting",
                                                std::to_string(cert.hitting.size()));
                        row.bounds.emplace_back("case_tag", cert.case_tag);
                        row.pass = cert.ratio <= Rational(3, 2);
                        if (spec.total() <= 10) {
                            NuResult nu = exact_nu(pg.graph(), oracle_budget);
                            TauResult tau = exact_tau(pg.graph(), oracle_budget);
                            row.nu_exact = nu.value;
                            row.tau_exact = tau.value;
                            // certificates bound the optima from the safe side
                            bool feasible =
                                static_cast<long long>(cert.packing.size()) <= nu.value &&
                                static_cast<long long>(cert.hitting.size()) >= tau.value;
                            bool theorem = nu.value == 0 ||
                                           Rational(tau.value) <=
                                               Rational(3, 2) * Rational(nu.value);
                            row.pass = row.pass && feasible && theorem;
                        }
                    } catch (const BudgetError&) {
                        row.budget_exceeded = true;
                        row.pass = false;
                    }
                    report.rows.push_back(std::move(row));
                }
    report.finalize();
    return report;
}

} // namespace tripack
