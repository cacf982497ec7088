#ifndef TRIPACK_FOUR_PARTITE_HPP
#define TRIPACK_FOUR_PARTITE_HPP

#include <cstdint>
#include <string>

#include "tripack/graph.hpp"
#include "tripack/rational.hpp"

namespace tripack {

// Part sizes of a complete 4-partite graph, sorted a >= b >= c >= d >= 0.
struct FourPartiteSpec {
    int a;
    int b;
    int c;
    int d;

    FourPartiteSpec(int a_, int b_, int c_, int d_);

    int total() const { return a + b + c + d; }
};

// Explicit (packing, hitting) pair witnessing tau(G)/nu(G) <= |H|/|P| for one
// instance, together with the proof branch that produced each side.
struct TuzaCertificate {
    TrianglePacking packing;
    HittingSet hitting;
    Rational ratio; // |hitting| / |packing|; 0 when the hitting is empty
    std::string case_tag;
};

// Complete 4-partite graph with vertex ids assigned block by block:
// A first, then B, C, D.
PartitionedGraph build_complete_4partite(const FourPartiteSpec& spec);

// All B-C, C-D and B-D edges; size bc+cd+bd. Requires a >= b+c+1.
HittingSet hitting_case1(const FourPartiteSpec& spec);

// All A-D and B-C edges; size ad+bc. Valid for every complete 4-partite graph.
HittingSet hitting_ad_bc(const FourPartiteSpec& spec);

// Packing from a Vizing coloring of G[B u C u D] extended into A; at least
// a/(b+c+1) * (bc+bd+cd) triangles. Applicable whenever a >= 1.
TrianglePacking packing_claim1(const FourPartiteSpec& spec);

// Two edge-disjoint packings: a Konig coloring of G[A u B] extended into the
// last c-x vertices of C and first a-c+x of D (ab triangles), plus a coloring
// of the A/B-deleted graph on C' u A u B extended into the rest of D
// (x*(c+d-a-x) triangles), where x = floor((c+d-a)/2). Requires a <= c+d.
TrianglePacking packing_claim2(const FourPartiteSpec& spec);

// Packing from a max-degree-class coloring of G[B u C u D] (exactly b+c
// classes; its maximum-degree vertices are exactly D, an independent set)
// extended into A; at least a/(b+c) * (bc+bd+cd) triangles. Requires c != d.
TrianglePacking packing_claim3(const FourPartiteSpec& spec,
                               std::int64_t coloring_budget = 10'000'000);

// Packing for the branch c+d < a <= b+c with a >= b+1: color the union of
// G[B u D], G[B u C] and an (a-b-1)-regular-on-D factor of G[C u D] with at
// most a classes, extend into A; at least ad+bc-d triangles.
TrianglePacking packing_case1_ffactor(const FourPartiteSpec& spec);

struct CertifyOptions {
    std::int64_t coloring_budget = 10'000'000;
};

// Certificate with ratio <= 3/2 for any complete 4-partite graph on at least
// five vertices (hence a >= 2): the best packing over every applicable
// construction against the smaller of the two hitting sets.
TuzaCertificate certify(const FourPartiteSpec& spec, const CertifyOptions& opts = {});

} // namespace tripack

#endif
