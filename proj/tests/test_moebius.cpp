#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kleinian/registry.hpp"
#include "kleinian/wordsearch.hpp"

using namespace kleinian;

namespace {

FieldElem fe(long a, long b, long c, long d) {
    return FieldElem(Rational(a), Rational(b), Rational(c), Rational(d));
}

ProjectiveMatrix mi(long a, long b, long c, long d) {
    return ProjectiveMatrix(fe(a, 0, 0, 0), fe(b, 0, 0, 0), fe(c, 0, 0, 0), fe(d, 0, 0, 0));
}

}  // namespace

TEST_CASE("canonical form identifies M and -M") {
    ProjectiveMatrix m = registry().mat("p2");
    ProjectiveMatrix neg = mi(1, -5, 0, 1);  // -(p2 display)
    CHECK(m == neg);
    CHECK(mi(-1, 0, 0, -1) == ProjectiveMatrix());
}

TEST_CASE("construction rejects non-unimodular matrices") {
    CHECK_THROWS_AS(mi(2, 0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mi(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("registry: all fifteen named matrices are unimodular") {
    const Registry& reg = registry();
    auto base = reg.base_names();
    CHECK(base.size() == 15);
    for (const auto& name : base) {
        const ProjectiveMatrix& m = reg.mat(name);
        CAPTURE(name);
        CHECK((m.a() * m.d() - m.b() * m.c()).is_one());
    }
    CHECK(reg.names().size() == 33);  // 15 base + rT + a2,a3 + 12 pk_j + 3 m1_n
    CHECK(reg.get("rT").antiholomorphic);
}

TEST_CASE("composition law and involutions") {
    const Registry& reg = registry();
    ExtendedIsometry m1 = reg.get("m1");
    CHECK(compose(m1, m1) == ExtendedIsometry::identity());  // m1^2 = -I
    ExtendedIsometry rT = reg.get("rT");
    CHECK(compose(rT, rT) == ExtendedIsometry::identity());
    CHECK(compose(ExtendedIsometry::identity(), m1) == m1);
    ExtendedIsometry b0 = reg.get("b0");
    CHECK(equals_projective(compose(b0, compose(b0, b0)), ExtendedIsometry::identity()));
    CHECK(!equals_projective(reg.get("p2"), ExtendedIsometry::identity()));
    CHECK(compose(b0, b0) != ExtendedIsometry::identity());
}

TEST_CASE("mutation conjugates the boundary parabolics to inverses") {
    const Registry& reg = registry();
    ExtendedIsometry m1 = reg.get("m1");
    // Hand-computed products frozen: m1 p1 m1^-1 = (16,-25;9,-14) = p3^-1.
    CHECK(conjugate(m1, reg.get("p1")).mat == mi(16, -25, 9, -14));
    CHECK(conjugate(m1, reg.get("p1")) == reg.get("p3").inverse());
    CHECK(conjugate(m1, reg.get("p2")) == reg.get("p4").inverse());
    CHECK(conjugate(m1, reg.get("p3")) == reg.get("p1").inverse());
    CHECK(conjugate(m1, reg.get("p4")) == reg.get("p2").inverse());
}

TEST_CASE("conjugation by c steps the elliptic ladder") {
    const Registry& reg = registry();
    ExtendedIsometry cinv = ExtendedIsometry::holomorphic(reg.mat("c").inverse());
    CHECK(conjugate(cinv, reg.get("a0")) == reg.get("a1"));
    CHECK(conjugate(cinv, reg.get("a1")) == reg.get("a2"));
    CHECK(conjugate(cinv, reg.get("a2")) == reg.get("a3"));
    CHECK(evaluate_registry_word("c*f0") == evaluate_registry_word("f0*c"));
}

TEST_CASE("trace classification") {
    const Registry& reg = registry();
    CHECK(trace_class(reg.mat("p1")) == TraceClass::Parabolic);
    CHECK(trace_class(reg.mat("a0")) == TraceClass::Elliptic);  // order 3, trace -1
    CHECK(trace_class(ProjectiveMatrix()) == TraceClass::Identity);
    // s*t has non-real trace.
    CHECK(trace_class(reg.mat("s") * reg.mat("t")) == TraceClass::Loxodromic);
    // A real hyperbolic element.
    CHECK(trace_class(mi(2, 1, 1, 1)) == TraceClass::Loxodromic);
    for (int k = 1; k <= 4; ++k)
        CHECK(trace_class(reg.mat("p" + std::to_string(k))) == TraceClass::Parabolic);
}

TEST_CASE("parabolic fixed points") {
    const Registry& reg = registry();
    CHECK(parabolic_fixed_point(reg.mat("p1")) == BoundaryPoint::at(FieldElem::zero()));
    CHECK(parabolic_fixed_point(reg.mat("p2")) == BoundaryPoint::at_infinity());
    CHECK(parabolic_fixed_point(reg.mat("p3")) == BoundaryPoint::at(FieldElem::rational(5, 3)));
    CHECK(parabolic_fixed_point(reg.mat("p4")) == BoundaryPoint::at(FieldElem::rational(3, 2)));
    CHECK_THROWS_AS(parabolic_fixed_point(reg.mat("a0")), NotParabolic);
}

TEST_CASE("boundary action") {
    const Registry& reg = registry();
    CHECK(apply_boundary(reg.get("m1"), BoundaryPoint::at_infinity()) ==
          BoundaryPoint::at(FieldElem::rational(3, 2)));
    CHECK(apply_boundary(reg.get("f0"), BoundaryPoint::at(FieldElem::zero())) ==
          BoundaryPoint::at(FieldElem::one()));
    BoundaryPoint fixed = BoundaryPoint::at(-FieldElem::i_sqrt2());
    CHECK(apply_boundary(reg.get("rT"), fixed) == fixed);
    // p1 sends its fixed point to itself and infinity to 1.
    CHECK(apply_boundary(reg.get("p1"), BoundaryPoint::at(FieldElem::zero())) ==
          BoundaryPoint::at(FieldElem::zero()));
}

TEST_CASE("entrywise conjugation") {
    const Registry& reg = registry();
    CHECK(reg.mat("c").entrywise_conj() == reg.mat("c").inverse());
    CHECK(reg.mat("s").entrywise_conj() == reg.mat("s"));
    ProjectiveMatrix gbar = reg.mat("g").entrywise_conj();
    CHECK((gbar.a() * gbar.d() - gbar.b() * gbar.c()).is_one());
    CHECK(gbar.entrywise_conj() == reg.mat("g"));
}

TEST_CASE("p4 is the displayed product of the first three") {
    const Registry& reg = registry();
    CHECK(reg.mat("p1") * reg.mat("p2") * reg.mat("p3").inverse() == reg.mat("p4"));
}

TEST_CASE("matrix literals parse and render") {
    const Registry& reg = registry();
    for (const auto& name : reg.base_names()) {
        const ProjectiveMatrix& m = reg.mat(name);
        CAPTURE(name);
        REQUIRE(parse_matrix(m.str()) == m);
    }
    CHECK(parse_matrix("[[1,0],[1,1]]") == reg.mat("p1"));
    CHECK(parse_matrix("[[1, i*r2], [0, 1]]") == reg.mat("c"));
    CHECK_THROWS_AS(parse_matrix("[[1,0],[1]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("1,0,1,1"), ParseError);
}
