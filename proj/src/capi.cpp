#include "tripack_c.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include <json.hpp>

#include "tripack/bounds.hpp"
#include "tripack/coloring.hpp"
#include "tripack/flow.hpp"
#include "tripack/four_partite.hpp"
#include "tripack/harness.hpp"
#include "tripack/hitting.hpp"
#include "tripack/json_io.hpp"
#include "tripack/oracles.hpp"

using nlohmann::json;

struct tripack_graph {
    tripack::LoadedGraph loaded;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tripack_status fail(tripack_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
tripack_status guarded(Fn&& fn) {
    try {
        fn();
        return TRIPACK_OK;
    } catch (const tripack::ParseError& e) {
        return fail(TRIPACK_ERR_PARSE, e.what());
    } catch (const tripack::PreconditionError& e) {
        return fail(TRIPACK_ERR_PRECONDITION, e.what());
    } catch (const tripack::DomainError& e) {
        return fail(TRIPACK_ERR_DOMAIN, e.what());
    } catch (const tripack::BudgetError& e) {
        return fail(TRIPACK_ERR_BUDGET, e.what());
    } catch (const tripack::InfeasibleError& e) {
        return fail(TRIPACK_ERR_INFEASIBLE, e.what());
    } catch (const std::exception& e) {
        return fail(TRIPACK_ERR_INTERNAL, e.what());
    }
}

tripack_status require(bool ok, const char* what) {
    return ok ? TRIPACK_OK : fail(TRIPACK_ERR_NULL, what);
}

std::int64_t effective_budget(std::int64_t budget) {
    return budget > 0 ? budget : tripack::kDefaultOracleBudget;
}

json rows_json(const std::vector<tripack::Edge>& edges) {
    json arr = json::array();
    for (const tripack::Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

json certificate_json(const tripack::FourPartiteSpec& spec,
                      const tripack::TuzaCertificate& cert) {
    json doc;
    doc["parts"] = json::array({spec.a, spec.b, spec.c, spec.d});
    json packing = json::array();
    for (const tripack::Triangle& t : cert.packing.triangles)
        packing.push_back(json::array({t.v[0], t.v[1], t.v[2]}));
    doc["packing"] = packing;
    doc["hitting"] = rows_json(cert.hitting.edges);
    doc["ratio"] = cert.ratio.str();
    doc["case_tag"] = cert.case_tag;
    return doc;
}

tripack_status report_out(const tripack::ExperimentReport& report, const char* format,
                          char** out, int* failures) {
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "csv")
        return fail(TRIPACK_ERR_DOMAIN, "format must be \"json\" or \"csv\"");
    *out = dup_string(fmt == "json" ? report.to_json() : report.to_csv());
    if (failures) *failures = report.failures();
    return TRIPACK_OK;
}

} // namespace

extern "C" {

const char* tripack_status_name(tripack_status status) {
    switch (status) {
    case TRIPACK_OK: return "ok";
    case TRIPACK_ERR_PARSE: return "parse-error";
    case TRIPACK_ERR_PRECONDITION: return "precondition-error";
    case TRIPACK_ERR_DOMAIN: return "domain-error";
    case TRIPACK_ERR_BUDGET: return "budget-exceeded";
    case TRIPACK_ERR_INFEASIBLE: return "infeasible";
    case TRIPACK_ERR_NULL: return "null-argument";
    default: return "internal-error";
    }
}

const char* tripack_last_error(void) { return g_last_error.c_str(); }

void tripack_string_free(char* text) { std::free(text); }

tripack_status tripack_graph_from_json(const char* text, tripack_graph** out) {
    if (tripack_status s = require(text && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        auto handle = std::make_unique<tripack_graph>();
        handle->loaded = tripack::graph_from_json(text);
        *out = handle.release();
    });
}

tripack_status tripack_graph_to_json(const tripack_graph* g, char** out) {
    if (tripack_status s = require(g && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        *out = dup_string(g->loaded.partitioned
                              ? tripack::graph_to_json(*g->loaded.partitioned)
                              : tripack::graph_to_json(g->loaded.graph));
    });
}

void tripack_graph_free(tripack_graph* g) { delete g; }

int tripack_graph_vertices(const tripack_graph* g) {
    return g ? g->loaded.graph.vertex_count() : -1;
}

int tripack_graph_edges(const tripack_graph* g) {
    return g ? g->loaded.graph.edge_count() : -1;
}

tripack_status tripack_enumerate_triangles(const tripack_graph* g, char** out) {
    if (tripack_status s = require(g && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        *out = dup_string(tripack::triangles_to_json(tripack::enumerate_triangles(g->loaded.graph)));
    });
}

tripack_status tripack_color(const tripack_graph* g, const char* method, int64_t budget,
                             char** out) {
    if (tripack_status s = require(g && method && out, "null argument"); s != TRIPACK_OK)
        return s;
    return guarded([&] {
        std::string name = method;
        tripack::EdgeColoring coloring;
        if (name == "konig") {
            tripack::Bipartition sides;
            const auto& pg = g->loaded.partitioned;
            if (pg && pg->classes().size() == 2 &&
                pg->classes()[0].role == tripack::ClassRole::independent &&
                pg->classes()[1].role == tripack::ClassRole::independent) {
                sides = {pg->classes()[0].vertices, pg->classes()[1].vertices};
            } else {
                auto found = tripack::find_bipartition(g->loaded.graph);
                if (!found) throw tripack::PreconditionError("graph is not bipartite");
                sides = *found;
            }
            coloring = tripack::konig_color(g->loaded.graph, sides);
        } else if (name == "vizing") {
            coloring = tripack::vizing_color(g->loaded.graph);
        } else if (name == "class1") {
            coloring = budget > 0 ? tripack::delta_color_class1(g->loaded.graph, budget)
                                  : tripack::delta_color_class1(g->loaded.graph);
        } else {
            throw tripack::DomainError("unknown coloring method \"" + name + "\"");
        }
        *out = dup_string(tripack::coloring_to_json(coloring));
    });
}

tripack_status tripack_bounds(const tripack_graph* g, char** out) {
    if (tripack_status s = require(g && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        const tripack::Graph& graph = g->loaded.graph;
        int n = graph.vertex_count();
        int m = graph.edge_count();
        json doc;
        doc["cut_upper_bound_tau"] = tripack::cut_upper_bound_tau(n, m).str();
        doc["bollobas_triangle_bound"] = tripack::bollobas_triangle_bound(n, m).str();
        if (n >= 3) doc["lower_bound_general"] = tripack::lower_bound_general(graph).str();
        if (g->loaded.partitioned && g->loaded.partitioned->is_split())
            doc["lower_bound_split"] =
                tripack::lower_bound_split(*g->loaded.partitioned).str();
        if (4LL * m > static_cast<long long>(n) * n)
            doc["tripartite_bound_factor"] = tripack::tripartite_bound_factor(n, m).str();
        *out = dup_string(doc.dump());
    });
}

tripack_status tripack_hit(const tripack_graph* g, const char* method, uint64_t seed,
                           char** out) {
    if (tripack_status s = require(g && method && out, "null argument"); s != TRIPACK_OK)
        return s;
    return guarded([&] {
        std::string name = method;
        tripack::HittingSet hitting;
        if (name == "clique") {
            if (!g->loaded.partitioned)
                throw tripack::PreconditionError("clique hitting needs a split graph");
            hitting = tripack::clique_edges_hitting(*g->loaded.partitioned);
        } else if (name == "cut") {
            hitting = tripack::cut_complement_hitting(g->loaded.graph, seed);
        } else {
            throw tripack::DomainError("unknown hitting method \"" + name + "\"");
        }
        *out = dup_string(tripack::hitting_to_json(hitting));
    });
}

tripack_status tripack_exact_nu(const tripack_graph* g, int64_t budget, char** out) {
    if (tripack_status s = require(g && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        tripack::NuResult r = tripack::exact_nu(g->loaded.graph, effective_budget(budget));
        json doc;
        doc["value"] = r.value;
        json packing = json::array();
        for (const tripack::Triangle& t : r.witness.triangles)
            packing.push_back(json::array({t.v[0], t.v[1], t.v[2]}));
        doc["triangles"] = packing;
        *out = dup_string(doc.dump());
    });
}

tripack_status tripack_exact_tau(const tripack_graph* g, int64_t budget, char** out) {
    if (tripack_status s = require(g && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        tripack::TauResult r = tripack::exact_tau(g->loaded.graph, effective_budget(budget));
        json doc;
        doc["value"] = r.value;
        doc["edges"] = rows_json(r.witness.edges);
        *out = dup_string(doc.dump());
    });
}

tripack_status tripack_exact_max_cut(const tripack_graph* g, char** out) {
    if (tripack_status s = require(g && out, "null argument"); s != TRIPACK_OK) return s;
    return guarded([&] {
        tripack::MaxCutResult r = tripack::exact_max_cut(g->loaded.graph);
        json doc;
        doc["value"] = r.value;
        doc["sides"] = json::array({r.sides.first, r.sides.second});
        *out = dup_string(doc.dump());
    });
}

tripack_status tripack_f_factor(const tripack_graph* g, const char* degrees_json,
                                char** out) {
    if (tripack_status s = require(g && degrees_json && out, "null argument");
        s != TRIPACK_OK)
        return s;
    return guarded([&] {
        if (!g->loaded.partitioned || g->loaded.partitioned->classes().size() != 2 ||
            g->loaded.partitioned->classes()[0].role != tripack::ClassRole::independent ||
            g->loaded.partitioned->classes()[1].role != tripack::ClassRole::independent)
            throw tripack::PreconditionError(
                "f-factor needs a graph with exactly two independent classes");
        json deg = json::parse(degrees_json, nullptr, false);
        if (deg.is_discarded() || !deg.is_object())
            throw tripack::ParseError("degree map must be a JSON object");
        tripack::DegreeSpec f;
        for (const auto& [key, value] : deg.items()) {
            if (!value.is_number_integer())
                throw tripack::ParseError("degree of vertex " + key + " must be an integer");
            f.required[std::stoi(key)] = value.get<int>();
        }
        tripack::BipartiteSides sides{g->loaded.partitioned->classes()[0].vertices,
                                      g->loaded.partitioned->classes()[1].vertices};
        tripack::Graph factor = tripack::f_factor(g->loaded.graph, sides, f);
        *out = dup_string(rows_json(factor.edges()).dump());
    });
}

tripack_status tripack_certify_4partite(int a, int b, int c, int d, int with_exact,
                                        int64_t budget, char** out) {
    if (tripack_status s = require(out != nullptr, "null argument"); s != TRIPACK_OK)
        return s;
    return guarded([&] {
        tripack::FourPartiteSpec spec(a, b, c, d);
        tripack::TuzaCertificate cert = tripack::certify(spec);
        json doc = certificate_json(spec, cert);
        if (with_exact) {
            tripack::PartitionedGraph host = tripack::build_complete_4partite(spec);
            doc["nu"] = tripack::exact_nu(host.graph(), effective_budget(budget)).value;
            doc["tau"] = tripack::exact_tau(host.graph(), effective_budget(budget)).value;
        }
        *out = dup_string(doc.dump());
    });
}

tripack_status tripack_gen_split(int n, int delta_min, uint64_t seed, char** out) {
    if (tripack_status s = require(out != nullptr, "null argument"); s != TRIPACK_OK)
        return s;
    return guarded([&] {
        *out = dup_string(tripack::graph_to_json(tripack::gen_split(n, delta_min, seed)));
    });
}

tripack_status tripack_gen_tripartite(int n, int m, uint64_t seed, char** out) {
    if (tripack_status s = require(out != nullptr, "null argument"); s != TRIPACK_OK)
        return s;
    return guarded([&] {
        *out = dup_string(tripack::graph_to_json(tripack::gen_tripartite(n, m, seed)));
    });
}

tripack_status tripack_verify_split(int trials, int n_max, uint64_t seed, int64_t budget,
                                    const char* format, char** out, int* failures) {
    if (tripack_status s = require(out != nullptr, "null argument"); s != TRIPACK_OK)
        return s;
    tripack::ExperimentReport report;
    tripack_status status = guarded([&] {
        report = tripack::verify_split_dense(trials, n_max, seed, effective_budget(budget));
    });
    if (status != TRIPACK_OK) return status;
    return report_out(report, format, out, failures);
}

tripack_status tripack_verify_tripartite(int trials, int n_max, uint64_t seed,
                                         int64_t budget, const char* format, char** out,
                                         int* failures) {
    if (tripack_status s = require(out != nullptr, "null argument"); s != TRIPACK_OK)
        return s;
    tripack::ExperimentReport report;
    tripack_status status = guarded([&] {
        report =
            tripack::verify_tripartite_dense(trials, n_max, seed, effective_budget(budget));
    });
    if (status != TRIPACK_OK) return status;
    return report_out(report, format, out, failures);
}

tripack_status tripack_sweep_4partite(int a_max, int64_t budget, const char* format,
                                      char** out, int* failures) {
    if (tripack_status s = require(out != nullptr, "null argument"); s != TRIPACK_OK)
        return s;
    tripack::ExperimentReport report;
    tripack_status status = guarded(
        [&] { report = tripack::sweep_4partite(a_max, effective_budget(budget)); });
    if (status != TRIPACK_OK) return status;
    return report_out(report, format, out, failures);
}

} // extern "C"
