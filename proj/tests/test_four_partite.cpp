#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tripack/four_partite.hpp"
#include "tripack/oracles.hpp"

using namespace tripack;

namespace {

Rational claim1_bound(const FourPartiteSpec& s) {
    return Rational(s.a, s.b + s.c + 1) *
           Rational(static_cast<std::int64_t>(s.b) * s.c + static_cast<std::int64_t>(s.b) * s.d +
                    static_cast<std::int64_t>(s.c) * s.d);
}

} // namespace

TEST_CASE("spec ordering is enforced") {
    CHECK_THROWS_AS(FourPartiteSpec(1, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(FourPartiteSpec(2, 1, 1, -1), DomainError);
    FourPartiteSpec ok(2, 1, 1, 0);
    CHECK(ok.total() == 4);
}

TEST_CASE("build_complete_4partite shapes") {
    PartitionedGraph g5 = build_complete_4partite(FourPartiteSpec(2, 1, 1, 1));
    CHECK(g5.graph().vertex_count() == 5);
    CHECK(g5.graph().edge_count() == 9); // K_5 minus the edge inside A
    CHECK_FALSE(g5.graph().has_edge(0, 1));

    PartitionedGraph k4 = build_complete_4partite(FourPartiteSpec(1, 1, 1, 1));
    CHECK(k4.graph().edge_count() == 6);

    PartitionedGraph g8 = build_complete_4partite(FourPartiteSpec(4, 2, 1, 1));
    CHECK(g8.graph().vertex_count() == 8);
    CHECK(g8.graph().edge_count() == 21);
    CHECK(g8.complete());
}

TEST_CASE("hitting_case1 sizes and validity") {
    FourPartiteSpec spec(4, 2, 1, 1);
    HittingSet h = hitting_case1(spec);
    CHECK(h.size() == 5); // bc+cd+bd = 2+1+2
    CHECK(validate_hitting(build_complete_4partite(spec).graph(), h));

    CHECK(hitting_case1(FourPartiteSpec(3, 1, 1, 0)).size() == 1);
    CHECK(hitting_case1(FourPartiteSpec(5, 2, 2, 0)).size() == 4);
    CHECK_THROWS_AS(hitting_case1(FourPartiteSpec(3, 2, 1, 1)), PreconditionError);
}

TEST_CASE("hitting_ad_bc sizes and validity") {
    FourPartiteSpec spec(2, 1, 1, 1);
    HittingSet h = hitting_ad_bc(spec);
    CHECK(h.size() == 3);
    CHECK(validate_hitting(build_complete_4partite(spec).graph(), h));

    FourPartiteSpec k4(1, 1, 1, 1);
    HittingSet h4 = hitting_ad_bc(k4);
    CHECK(h4.size() == 2);
    CHECK(validate_hitting(build_complete_4partite(k4).graph(), h4));

    CHECK(hitting_ad_bc(FourPartiteSpec(3, 2, 2, 0)).size() == 4); // bc only
}

TEST_CASE("hittings validate across many shapes") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 0; c <= b; ++c)
                for (int d = 0; d <= c; ++d) {
                    FourPartiteSpec spec(a, b, c, d);
                    PartitionedGraph host = build_complete_4partite(spec);
                    CHECK(validate_hitting(host.graph(), hitting_ad_bc(spec)));
                    if (a >= b + c + 1)
                        CHECK(validate_hitting(host.graph(), hitting_case1(spec)));
                }
}

TEST_CASE("packing_claim1 meets its bound") {
    for (auto [spec, floor_bound] :
         {std::pair{FourPartiteSpec(2, 2, 2, 2), 5LL},   // 24/5 rounded up
          std::pair{FourPartiteSpec(1, 1, 1, 1), 1LL},
          std::pair{FourPartiteSpec(3, 3, 3, 3), 12LL}}) { // 81/7 -> 12
        TrianglePacking p = packing_claim1(spec);
        PartitionedGraph host = build_complete_4partite(spec);
        CHECK(validate_packing(host.graph(), p));
        CHECK(static_cast<long long>(p.size()) >= floor_bound);
        CHECK(Rational(static_cast<std::int64_t>(p.size())) >= claim1_bound(spec));
    }
}

TEST_CASE("packing_claim2 meets its bound") {
    FourPartiteSpec spec(4, 4, 4, 3);
    TrianglePacking p = packing_claim2(spec);
    CHECK(validate_packing(build_complete_4partite(spec).graph(), p));
    CHECK(p.size() >= 18); // ab + x(c+d-a-x) = 16 + 1*2 with x=1

    FourPartiteSpec tight(4, 2, 2, 2); // a = c+d: second term vanishes
    TrianglePacking pt = packing_claim2(tight);
    CHECK(validate_packing(build_complete_4partite(tight).graph(), pt));
    CHECK(pt.size() >= 8); // ab

    FourPartiteSpec small(2, 2, 2, 2);
    TrianglePacking ps = packing_claim2(small);
    CHECK(validate_packing(build_complete_4partite(small).graph(), ps));
    CHECK(ps.size() >= 5); // 4 + 1*1

    CHECK_THROWS_AS(packing_claim2(FourPartiteSpec(4, 2, 2, 1)), PreconditionError);
}

TEST_CASE("packing_claim3 meets its bound") {
    FourPartiteSpec spec(3, 3, 3, 2);
    TrianglePacking p = packing_claim3(spec);
    PartitionedGraph host = build_complete_4partite(spec);
    CHECK(validate_packing(host.graph(), p));
    CHECK(p.size() >= 10); // floor of 3*21/6

    FourPartiteSpec small(2, 2, 2, 1);
    TrianglePacking ps = packing_claim3(small);
    CHECK(validate_packing(build_complete_4partite(small).graph(), ps));
    CHECK(ps.size() >= 4); // 2*8/4
    CHECK(exact_nu(build_complete_4partite(small).graph()).value >= 4);

    CHECK_THROWS_AS(packing_claim3(FourPartiteSpec(3, 3, 2, 2)), PreconditionError);
}

TEST_CASE("packing_case1_ffactor meets ad+bc-d") {
    FourPartiteSpec spec(4, 3, 2, 1);
    TrianglePacking p = packing_case1_ffactor(spec);
    CHECK(validate_packing(build_complete_4partite(spec).graph(), p));
    CHECK(p.size() >= 9); // 4*1 + 3*2 - 1

    FourPartiteSpec wide(5, 4, 2, 1);
    TrianglePacking pw = packing_case1_ffactor(wide);
    CHECK(validate_packing(build_complete_4partite(wide).graph(), pw));
    CHECK(pw.size() >= 12); // 5 + 8 - 1

    // a = b+1 makes the factor empty and the bound bc+bd
    FourPartiteSpec tight(4, 3, 2, 1);
    CHECK(tight.a == tight.b + 1);
    CHECK_THROWS_AS(packing_case1_ffactor(FourPartiteSpec(4, 4, 3, 2)), PreconditionError);
}

TEST_CASE("certify the five-vertex tight instance") {
    TuzaCertificate cert = certify(FourPartiteSpec(2, 1, 1, 1));
    CHECK(cert.ratio == Rational(3, 2));
    CHECK(cert.hitting.size() == 3);
    CHECK(cert.packing.size() == 2);
}

TEST_CASE("certify the a >= b+c+1 branch at ratio <= 1") {
    TuzaCertificate cert = certify(FourPartiteSpec(4, 2, 1, 1));
    CHECK(cert.ratio <= Rational(1));
    CHECK(cert.hitting.size() == 5);
    CHECK(cert.packing.size() >= 5);
}

TEST_CASE("certify the balanced shape") {
    TuzaCertificate cert = certify(FourPartiteSpec(3, 3, 3, 3));
    CHECK(cert.hitting.size() == 18); // ad+bc
    CHECK(cert.packing.size() >= 12);
    CHECK(cert.ratio <= Rational(3, 2));
}

TEST_CASE("certify handles empty parts") {
    // d = 0 and even c = 0 run through the same machinery
    TuzaCertificate flat = certify(FourPartiteSpec(3, 2, 1, 0));
    CHECK(flat.ratio <= Rational(3, 2));
    TuzaCertificate no_triangles = certify(FourPartiteSpec(4, 1, 0, 0));
    CHECK(no_triangles.hitting.size() == 0);
    CHECK(no_triangles.ratio == Rational(0));
}

TEST_CASE("certify rejects undersized instances") {
    CHECK_THROWS_AS(certify(FourPartiteSpec(1, 1, 1, 1)), PreconditionError);
    CHECK_THROWS_AS(certify(FourPartiteSpec(2, 1, 1, 0)), PreconditionError);
}

TEST_CASE("certificates are never better than the exact optima") {
    for (auto spec : {FourPartiteSpec(2, 1, 1, 1), FourPartiteSpec(2, 2, 1, 1),
                      FourPartiteSpec(2, 2, 2, 1), FourPartiteSpec(2, 2, 2, 2),
                      FourPartiteSpec(3, 2, 2, 1), FourPartiteSpec(3, 3, 2, 1),
                      FourPartiteSpec(4, 2, 2, 1), FourPartiteSpec(4, 3, 2, 1)}) {
        TuzaCertificate cert = certify(spec);
        PartitionedGraph host = build_complete_4partite(spec);
        long long nu = exact_nu(host.graph()).value;
        long long tau = exact_tau(host.graph()).value;
        CHECK(static_cast<long long>(cert.packing.size()) <= nu);
        CHECK(static_cast<long long>(cert.hitting.size()) >= tau);
        CHECK(Rational(tau) <= Rational(3, 2) * Rational(nu));
    }
}
