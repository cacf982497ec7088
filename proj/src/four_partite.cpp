#include "tripack/four_partite.hpp"

#include <algorithm>

#include "tripack/bounds.hpp"
#include "tripack/coloring.hpp"
#include "tripack/flow.hpp"

namespace tripack {

FourPartiteSpec::FourPartiteSpec(int a_, int b_, int c_, int d_) : a(a_), b(b_), c(c_), d(d_) {
    if (d < 0) throw DomainError("negative part size");
    if (!(a >= b && b >= c && c >= d))
        throw DomainError("part sizes must satisfy a >= b >= c >= d");
}

namespace {

struct Blocks {
    std::vector<int> a, b, c, d;

    explicit Blocks(const FourPartiteSpec& s) {
        int next = 0;
        for (int i = 0; i < s.a; ++i) a.push_back(next++);
        for (int i = 0; i < s.b; ++i) b.push_back(next++);
        for (int i = 0; i < s.c; ++i) c.push_back(next++);
        for (int i = 0; i < s.d; ++i) d.push_back(next++);
    }
};

std::vector<int> concat(std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> out;
    for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

void cross_edges(HittingSet& h, const std::vector<int>& x, const std::vector<int>& y) {
    for (int u : x)
        for (int v : y) h.edges.push_back(Edge(u, v));
}

} // namespace

PartitionedGraph build_complete_4partite(const FourPartiteSpec& spec) {
    return complete_multipartite({spec.a, spec.b, spec.c, spec.d});
}

HittingSet hitting_case1(const FourPartiteSpec& spec) {
    if (spec.a < spec.b + spec.c + 1)
        throw PreconditionError("hitting_case1 needs a >= b+c+1");
    Blocks blocks(spec);
    HittingSet out;
    cross_edges(out, blocks.b, blocks.c);
    cross_edges(out, blocks.c, blocks.d);
    cross_edges(out, blocks.b, blocks.d);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

HittingSet hitting_ad_bc(const FourPartiteSpec& spec) {
    Blocks blocks(spec);
    HittingSet out;
    cross_edges(out, blocks.a, blocks.d);
    cross_edges(out, blocks.b, blocks.c);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

TrianglePacking packing_claim1(const FourPartiteSpec& spec) {
    Blocks blocks(spec);
    PartitionedGraph host = build_complete_4partite(spec);
    const Graph& g = host.graph();
    std::vector<int> bcd = concat({&blocks.b, &blocks.c, &blocks.d});
    EdgeColoring coloring = vizing_color(induced_edge_subgraph(g, bcd));
    return extend_packing(g, bcd, blocks.a, coloring);
}

TrianglePacking packing_claim2(const FourPartiteSpec& spec) {
    if (spec.a > spec.c + spec.d) throw PreconditionError("packing_claim2 needs a <= c+d");
    Blocks blocks(spec);
    PartitionedGraph host = build_complete_4partite(spec);
    const Graph& g = host.graph();
    int x = (spec.c + spec.d - spec.a) / 2;

    std::vector<int> c_front(blocks.c.begin(), blocks.c.begin() + x);
    std::vector<int> c_rest(blocks.c.begin() + x, blocks.c.end());
    int d_cut = spec.a - spec.c + x;
    std::vector<int> d_front(blocks.d.begin(), blocks.d.begin() + d_cut);
    std::vector<int> d_rest(blocks.d.begin() + d_cut, blocks.d.end());

    // ab triangles: Konig coloring of G[A u B] has exactly a classes, and the
    // apex pool C'' u D' also has a vertices, so every A-B edge is used.
    std::vector<int> ab = concat({&blocks.a, &blocks.b});
    std::vector<int> apexes_p = concat({&c_rest, &d_front});
    EdgeColoring ab_coloring =
        konig_color(induced_edge_subgraph(g, ab), {blocks.a, blocks.b});
    TrianglePacking packing = extend_packing(g, ab, apexes_p, ab_coloring);

    // x*(c+d-a-x) more triangles from C'-A and C'-B edges with apexes in D'',
    // taken in the graph with the A-B edges deleted so the two packings
    // cannot collide.
    if (x > 0 && !d_rest.empty()) {
        Graph trimmed = g;
        for (int u : blocks.a)
            for (int v : blocks.b) trimmed.remove_edge(u, v);
        std::vector<int> cab = concat({&c_front, &blocks.a, &blocks.b});
        EdgeColoring cab_coloring =
            konig_color(induced_edge_subgraph(trimmed, cab), {c_front, ab});
        TrianglePacking extra = extend_packing(trimmed, cab, d_rest, cab_coloring);
        packing.triangles.insert(packing.triangles.end(), extra.triangles.begin(),
                                 extra.triangles.end());
    }
    std::sort(packing.triangles.begin(), packing.triangles.end());
    return packing;
}

TrianglePacking packing_claim3(const FourPartiteSpec& spec, std::int64_t coloring_budget) {
    if (spec.c == spec.d) throw PreconditionError("packing_claim3 needs c != d");
    Blocks blocks(spec);
    PartitionedGraph host = build_complete_4partite(spec);
    const Graph& g = host.graph();
    std::vector<int> bcd = concat({&blocks.b, &blocks.c, &blocks.d});
    EdgeColoring coloring =
        delta_color_class1(induced_edge_subgraph(g, bcd), coloring_budget);
    return extend_packing(g, bcd, blocks.a, coloring);
}

TrianglePacking packing_case1_ffactor(const FourPartiteSpec& spec) {
    if (!(spec.c + spec.d < spec.a && spec.a <= spec.b + spec.c))
        throw PreconditionError("packing_case1_ffactor needs c+d < a <= b+c");
    if (spec.a < spec.b + 1) throw PreconditionError("packing_case1_ffactor needs a >= b+1");
    Blocks blocks(spec);
    PartitionedGraph host = build_complete_4partite(spec);
    const Graph& g = host.graph();

    // f-factor of G[C u D] with degree a-b-1 on D and near-balanced degrees
    // on C; a-b-1 <= c-1 here, so the prescription is feasible.
    int k = spec.a - spec.b - 1;
    DegreeSpec local = balanced_factor(spec.c, spec.d, k);
    DegreeSpec f;
    for (const auto& [v, req] : local.required) {
        int host = v < spec.c ? blocks.c[v] : blocks.d[v - spec.c];
        f.required[host] = req;
    }
    Graph cd = induced_edge_subgraph(g, concat({&blocks.c, &blocks.d}));
    Graph factor = f_factor(cd, {blocks.c, blocks.d}, f);

    std::vector<int> bcd = concat({&blocks.b, &blocks.c, &blocks.d});
    Graph core = induced_edge_subgraph(g, concat({&blocks.b, &blocks.c}));
    core = graph_union(core, induced_edge_subgraph(g, concat({&blocks.b, &blocks.d})));
    core = graph_union(core, factor);

    // every degree in core is at most a-1, so Vizing needs at most a classes
    EdgeColoring coloring = vizing_color(core);
    return extend_packing(g, bcd, blocks.a, coloring);
}

namespace {

// Konig on the bipartite union G[B u C] u G[B u D], B against C u D; at most
// max(b, c+d) <= a classes. Used when a <= b+1 in the middle branch.
TrianglePacking packing_case1_bipartite(const FourPartiteSpec& spec) {
    Blocks blocks(spec);
    PartitionedGraph host = build_complete_4partite(spec);
    const Graph& g = host.graph();
    std::vector<int> cd = concat({&blocks.c, &blocks.d});
    std::vector<int> bcd = concat({&blocks.b, &blocks.c, &blocks.d});
    Graph core = induced_edge_subgraph(g, bcd);
    for (int u : blocks.c)
        for (int v : blocks.d) core.remove_edge(u, v);
    EdgeColoring coloring = konig_color(core, {blocks.b, cd});
    return extend_packing(g, bcd, blocks.a, coloring);
}

} // namespace

TuzaCertificate certify(const FourPartiteSpec& spec, const CertifyOptions& opts) {
    if (spec.total() < 5) throw PreconditionError("certify needs at least five vertices");
    if (spec.a < 2) throw PreconditionError("certify needs a >= 2");
    PartitionedGraph host = build_complete_4partite(spec);
    const Graph& g = host.graph();

    struct Candidate {
        const char* tag;
        TrianglePacking packing;
    };
    std::vector<Candidate> packings;
    auto try_packing = [&](const char* tag, auto&& build) {
        try {
            packings.push_back({tag, build()});
        } catch (const PreconditionError&) {
            // construction not applicable to this shape
        } catch (const BudgetError&) {
            // coloring search gave up; other constructions still stand
        }
    };

    try_packing("claim1", [&] { return packing_claim1(spec); });
    if (spec.c + spec.d < spec.a && spec.a <= spec.b + spec.c) {
        if (spec.a >= spec.b + 1)
            try_packing("case1-ffactor", [&] { return packing_case1_ffactor(spec); });
        if (spec.a <= spec.b + 1)
            try_packing("case1-bipartite", [&] { return packing_case1_bipartite(spec); });
    }
    if (spec.a <= spec.c + spec.d) {
        try_packing("claim2", [&] { return packing_claim2(spec); });
        if (spec.c != spec.d)
            try_packing("claim3", [&] { return packing_claim3(spec, opts.coloring_budget); });
    }

    const Candidate* best = &packings.front();
    for (const Candidate& cand : packings)
        if (cand.packing.size() > best->packing.size()) best = &cand;

    HittingSet hitting = hitting_ad_bc(spec);
    const char* hit_tag = "ad+bc";
    if (spec.a >= spec.b + spec.c + 1) {
        HittingSet alt = hitting_case1(spec);
        if (alt.size() < hitting.size()) {
            hitting = std::move(alt);
            hit_tag = "bc+cd+bd";
        }
    }

    TuzaCertificate cert;
    cert.packing = best->packing;
    cert.hitting = std::move(hitting);
    cert.case_tag = std::string(best->tag) + "|" + hit_tag;
    if (cert.hitting.size() == 0)
        cert.ratio = Rational(0);
    else if (cert.packing.size() == 0)
        throw Error("internal: nonempty hitting with empty packing");
    else
        cert.ratio = Rational(static_cast<std::int64_t>(cert.hitting.size()),
                              static_cast<std::int64_t>(cert.packing.size()));

    if (!validate_packing(g, cert.packing) || !validate_hitting(g, cert.hitting))
        throw Error("internal: certificate failed validation");
    return cert;
}

} // namespace tripack
