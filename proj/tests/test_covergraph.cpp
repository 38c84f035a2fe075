#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "kleinian/covergraph.hpp"

using namespace kleinian;

TEST_CASE("build_n structure") {
    CoverGraph g1 = build_n(1);
    CHECK(g1.pieces.size() == 4);  // MS, Na, Nb, T1
    int j_gluings = 0;
    for (const auto& gl : g1.gluings) j_gluings += gl.map == MapTag::J;
    CHECK(j_gluings == 3);
    CHECK(g1.gluings.size() == 3);
    int open_degree = 0;
    for (int pid : g1.unglued_ports()) open_degree += g1.ports[pid].degree;
    CHECK(open_degree == 11);
    CHECK(g1.is_connected());

    CoverGraph g2 = build_n(2);
    int rt_gluings = 0;
    for (const auto& gl : g2.gluings) rt_gluings += gl.map == MapTag::RT;
    CHECK(rt_gluings == 3);

    CHECK_THROWS_AS(build_n(0), InvalidParameter);
    CHECK_THROWS_AS(build_n(-2), InvalidParameter);
}

TEST_CASE("build_closed structure") {
    CoverGraph g = build_closed(1, 1);
    CHECK(g.pieces.size() == 8);
    CHECK(g.closed);
    CHECK(g.unglued_ports().empty());
    CHECK(g.is_connected());
    CHECK(degree_audit(g).all_ok());

    // Different splits give different labeled graphs with the same degrees.
    CoverGraph g21 = build_closed(2, 1), g12 = build_closed(1, 2);
    auto labels = [](const CoverGraph& cg) {
        std::map<std::string, int> out;
        for (const auto& piece : cg.pieces) out[piece.label] = piece.degree;
        return out;
    };
    CHECK(labels(g21) != labels(g12));
    CHECK(degree_audit(g21).all_ok());
    CHECK(degree_audit(g12).all_ok());

    CHECK_THROWS_AS(build_closed(0, 1), InvalidParameter);
    CHECK_THROWS_AS(build_closed(1, 0), InvalidParameter);
}

TEST_CASE("degree audits pass for the built families") {
    for (int n = 1; n <= 6; ++n) {
        CoverGraph g = build_n(n);
        CAPTURE(n);
        REQUIRE(degree_audit(g).all_ok());
        REQUIRE(boundary_census(g).all_ok());
        REQUIRE(psi_check(g).pass());
    }
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            CoverGraph g = build_closed(m, n);
            CAPTURE(m);
            CAPTURE(n);
            REQUIRE(degree_audit(g).all_ok());
            REQUIRE(psi_check(g).pass());
        }
    }
}

TEST_CASE("negative control: transposed RT tags are located") {
    CoverGraph g = build_n(2);
    for (auto& gl : g.gluings) {
        if (gl.map != MapTag::RT) continue;
        if (g.ports[gl.port_a].tag == ComponentTag::Gcomp) {
            g.ports[gl.port_a].tag = ComponentTag::Ginvcomp;
            break;
        }
    }
    PsiReport report = psi_check(g);
    CHECK(!report.pass());
    bool located = false;
    for (const auto& v : report.violations)
        if (v.find("RT-gluing") != std::string::npos && v.find("tag mismatch") != std::string::npos)
            located = true;
    CHECK(located);
}

TEST_CASE("negative control: corrupted F0 marker is flagged") {
    CoverGraph g = build_n(1);
    for (auto& port : g.ports) {
        if (port.tag == ComponentTag::F0) {
            port.marker = {1, 2, 3, 4};  // identity instead of the mutation
            break;
        }
    }
    PsiReport report = psi_check(g);
    CHECK(!report.pass());
}

TEST_CASE("negative control: removing the degree-5 piece breaks the audit") {
    CoverGraph g = build_n(1);
    int na = -1;
    for (const auto& piece : g.pieces)
        if (piece.tag == CoverTag::Na) na = piece.id;
    REQUIRE(na >= 0);
    std::erase_if(g.gluings, [&](const Gluing& gl) {
        return g.ports[gl.port_a].piece == na || g.ports[gl.port_b].piece == na;
    });
    // Zero out the piece's contribution rather than reindexing everything.
    g.pieces[na].degree = 0;
    for (auto& port : g.ports)
        if (port.piece == na) port.degree = 0;
    AuditReport audit = degree_audit(g);
    CHECK(!audit.all_ok());
    bool found_six = false;
    for (const auto& line : audit.lines) found_six = found_six || (!line.ok && line.total == 6);
    CHECK(found_six);
}

TEST_CASE("connectivity detection") {
    CoverGraph g = build_n(1);
    g.gluings.clear();
    CHECK(!g.is_connected());
}

TEST_CASE("mirror symmetry of the balanced closed cover") {
    CoverGraph g = build_closed(2, 2);
    std::map<std::string, int> labels;
    for (const auto& piece : g.pieces) labels[piece.label] = piece.degree;
    for (const auto& [label, degree] : labels) {
        if (label.rfind("mirror-", 0) == 0) continue;
        CAPTURE(label);
        REQUIRE(labels.count("mirror-" + label) == 1);
        REQUIRE(labels.at("mirror-" + label) == degree);
    }
    int mirror_gluings = 0;
    for (const auto& gl : g.gluings) mirror_gluings += gl.map == MapTag::Mirror;
    CHECK(mirror_gluings == 3);
}

TEST_CASE("component orbits carry the port degrees") {
    CHECK(expected_component_orbit(ComponentTag::F0) == std::vector<int>{0});
    auto gcomp = expected_component_orbit(ComponentTag::Gcomp);
    auto ginv = expected_component_orbit(ComponentTag::Ginvcomp);
    CHECK(gcomp == std::vector<int>{2, 6, 7, 8, 10});
    CHECK(ginv == std::vector<int>{1, 3, 4, 5, 9});
}

TEST_CASE("dot export") {
    std::string dot = to_dot(build_n(2));
    CHECK(dot.find("graph cover") != std::string::npos);
    CHECK(dot.find("RT/Gcomp") != std::string::npos);
    CHECK(dot.find("J/F0") != std::string::npos);
    CHECK(dot.find("degree 11") != std::string::npos);
}

TEST_CASE("minimality bound") {
    CHECK(minimality_bound() == 11);
    CHECK(minimality_bound_with(55) == 1);
    CHECK(minimality_bound_with(1) == 55);
    CHECK_THROWS_AS(minimality_bound_with(0), InvalidParameter);
}

TEST_CASE("mutation marker rendering") {
    CHECK(cusp_permutation_str(kMutationMarker) == "(1 3)(2 4)");
}
