#include "tripack/json_io.hpp"

#include <json.hpp>

namespace tripack {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

LoadedGraph graph_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    if (!j.is_object()) throw ParseError("graph document must be a JSON object");
    if (!j.contains("n")) throw ParseError("missing field \"n\"");
    int n = require_int(j.at("n"), "\"n\"");
    if (n < 0) throw ParseError("\"n\" must be non-negative");

    Graph g(n);
    if (j.contains("edges")) {
        const json& edges = j.at("edges");
        if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
        for (const json& e : edges) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a pair [u,v]");
            int u = require_int(e[0], "edge endpoint");
            int v = require_int(e[1], "edge endpoint");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("edge endpoint out of range [0," + std::to_string(n) + ")");
            if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
            if (!g.add_edge(u, v))
                throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
    }

    LoadedGraph out{g, std::nullopt};
    if (j.contains("classes") && !j.at("classes").empty()) {
        const json& classes = j.at("classes");
        if (!classes.is_array()) throw ParseError("\"classes\" must be an array");
        std::vector<VertexClass> parsed;
        for (const json& c : classes) {
            if (!c.is_object() || !c.contains("role") || !c.contains("vertices"))
                throw ParseError("each class needs \"role\" and \"vertices\"");
            VertexClass cls;
            std::string role = c.at("role").get<std::string>();
            if (role == "clique")
                cls.role = ClassRole::clique;
            else if (role == "independent")
                cls.role = ClassRole::independent;
            else
                throw ParseError("unknown class role \"" + role + "\"");
            for (const json& v : c.at("vertices"))
                cls.vertices.push_back(require_int(v, "class vertex"));
            parsed.push_back(std::move(cls));
        }
        out.partitioned = PartitionedGraph(g, std::move(parsed));
    }
    return out;
}

namespace {

json edges_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

json graph_body(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["classes"] = json::array();
    j["edges"] = edges_json(g.edges());
    return j;
}

} // namespace

std::string graph_to_json(const Graph& g) { return graph_body(g).dump(); }

std::string graph_to_json(const PartitionedGraph& pg) {
    json j = graph_body(pg.graph());
    for (const VertexClass& cls : pg.classes()) {
        json c;
        c["role"] = cls.role == ClassRole::clique ? "clique" : "independent";
        c["vertices"] = cls.vertices;
        j["classes"].push_back(c);
    }
    return j.dump();
}

std::string coloring_to_json(const EdgeColoring& c) {
    json arr = json::array();
    for (const auto& cls : c.classes) arr.push_back(edges_json(cls));
    return arr.dump();
}

std::string packing_to_json(const TrianglePacking& p) {
    json arr = json::array();
    for (const Triangle& t : p.triangles) arr.push_back(json::array({t.v[0], t.v[1], t.v[2]}));
    return arr.dump();
}

std::string hitting_to_json(const HittingSet& h) { return edges_json(h.edges).dump(); }

std::string triangles_to_json(const std::vector<Triangle>& ts) {
    json arr = json::array();
    for (const Triangle& t : ts) arr.push_back(json::array({t.v[0], t.v[1], t.v[2]}));
    return arr.dump();
}

} // namespace tripack
