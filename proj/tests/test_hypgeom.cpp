#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kleinian/hypgeom.hpp"
#include "kleinian/registry.hpp"

using namespace kleinian;

namespace {

FieldElem fe(long a, long b, long c, long d) {
    return FieldElem(Rational(a), Rational(b), Rational(c), Rational(d));
}

const Hyperplane kIH = vertical_x(FieldElem::zero());
const Hyperplane kIHHalf = vertical_x(FieldElem::rational(1, 2));
const Hyperplane kTopHalf = vertical_y(FieldElem::rational(1, 2));

std::vector<BoundaryPoint> sample_points(const Hyperplane& h) {
    if (h.kind() == Hyperplane::Kind::Vertical) {
        std::vector<BoundaryPoint> out;
        for (long s : {0L, 1L, -2L})
            out.push_back(BoundaryPoint::at(h.anchor() + FieldElem::integer(s) * h.direction()));
        return out;
    }
    // Unit-radius walls: center + {1, -1, i}.
    REQUIRE(h.radius_sq() == FieldElem::one());
    return {BoundaryPoint::at(h.center() + FieldElem::one()),
            BoundaryPoint::at(h.center() - FieldElem::one()),
            BoundaryPoint::at(h.center() + FieldElem::i())};
}

}  // namespace

TEST_CASE("vertical-plane normalization makes equality representation-free") {
    Hyperplane a = Hyperplane::vertical(fe(3, 0, 1, 0) * FieldElem::rational(1, 2), fe(1, 0, 0, 0));
    // Same line y = 1/2 with shifted anchor and rescaled negative direction.
    Hyperplane b = Hyperplane::vertical(FieldElem::rational(1, 2) * FieldElem::i() +
                                            fe(-7, 2, 0, 0),
                                        fe(-2, 1, 0, 0));
    CHECK(Hyperplane::vertical(fe(3, 0, 0, 0) + FieldElem::rational(1, 2) * FieldElem::i(),
                               FieldElem::one()) == kTopHalf);
    CHECK(b == Hyperplane::vertical(FieldElem::rational(1, 2) * FieldElem::i(), FieldElem::one()));
    CHECK(a.kind() == Hyperplane::Kind::Vertical);
    CHECK_THROWS_AS(Hyperplane::vertical(FieldElem::zero(), FieldElem::zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(Hyperplane::hemisphere(FieldElem::zero(), -FieldElem::one()),
                    std::invalid_argument);
}

TEST_CASE("reflections normalize to the expected matrices") {
    ExtendedIsometry r_ih = reflect(kIH);
    CHECK(r_ih.antiholomorphic);
    CHECK(r_ih.mat == ProjectiveMatrix(FieldElem::i(), fe(0, 0, 0, 0), fe(0, 0, 0, 0),
                                       -FieldElem::i()));
    ExtendedIsometry r_b0 = reflect(ball_wall(0));
    CHECK(r_b0.mat == ProjectiveMatrix(fe(0, 0, 0, 0), FieldElem::i(), FieldElem::i(),
                                       fe(0, 0, 0, 0)));
}

TEST_CASE("reflections are involutions fixing three wall points") {
    for (const Hyperplane& h : {kIH, kIHHalf, kTopHalf, ball_wall(0), ball_wall(1),
                                Hyperplane::hemisphere(fe(1, 0, 0, 0), FieldElem::one())}) {
        ExtendedIsometry r = reflect(h);
        CAPTURE(h.str());
        REQUIRE(compose(r, r) == ExtendedIsometry::identity());
        for (const BoundaryPoint& p : sample_points(h)) REQUIRE(apply_boundary(r, p) == p);
    }
}

TEST_CASE("face pairings arise from reflection pairs") {
    const Registry& reg = registry();
    CHECK(compose_reflections(kIH, kIHHalf) == reg.mat("f0"));
    CHECK(compose_reflections(kTopHalf, ball_wall(0)) == reg.mat("b0"));
    CHECK(compose_reflections(kIHHalf, ball_wall(0)) == reg.mat("a0"));
    CHECK(compose_reflections(kIHHalf, ball_wall(1)) == reg.mat("a1"));
}

TEST_CASE("compose_reflections in reverse order inverts") {
    const Hyperplane faces[] = {kIH, kIHHalf, kTopHalf, ball_wall(0), ball_wall(1)};
    for (const Hyperplane& h1 : faces) {
        for (const Hyperplane& h2 : faces) {
            if (h1 == h2) continue;
            REQUIRE(compose_reflections(h1, h2).inverse() == compose_reflections(h2, h1));
        }
    }
}

TEST_CASE("dihedral angles of the wall family") {
    CHECK(dihedral_angle(ball_wall(0), ball_wall(1)).kind == DihedralAngle::Kind::Angle);
    CHECK(dihedral_angle(ball_wall(0), ball_wall(1)).cos_sq.is_zero());

    Hyperplane mirrored = Hyperplane::hemisphere(fe(1, 0, 0, 0), FieldElem::one());
    DihedralAngle unoriented = dihedral_angle(ball_wall(0), mirrored);
    CHECK(unoriented.cos_sq == FieldElem::rational(1, 4));
    CHECK(unoriented.cos_sign == 1);
    CHECK(*unoriented.cosine() == FieldElem::rational(1, 2));

    H3Point ref{FieldElem::rational(1, 4), FieldElem::integer(2)};
    DihedralAngle interior = dihedral_angle(ball_wall(0), mirrored, ref);
    CHECK(interior.cos_sign == -1);  // 2*pi/3 seen from outside both walls
    CHECK(classify_incidence(interior) == Incidence::TwoPiOver3);

    CHECK(dihedral_angle(ball_wall(0), ball_wall(2)).kind == DihedralAngle::Kind::Disjoint);
    CHECK(dihedral_angle(kIH, vertical_x(FieldElem::one())).kind ==
          DihedralAngle::Kind::TangentAtInfinity);
    CHECK(dihedral_angle(kIH, mirrored).kind == DihedralAngle::Kind::Tangent);
    CHECK(classify_incidence(dihedral_angle(kTopHalf, ball_wall(0), ref)) == Incidence::PiOver3);
}

TEST_CASE("dihedral angle is symmetric and isometry-invariant") {
    PolyhedronSpec q2 = make_doubled_qn_spec(2);
    std::vector<Hyperplane> faces;
    for (const auto& [name, plane] : q2.faces) faces.push_back(plane);
    const Registry& reg = registry();

    // Isometries can move the tangency point of parallel vertical planes to
    // a finite ideal point, so the two tangency kinds count as one class.
    auto contact = [](DihedralAngle::Kind k) {
        return k == DihedralAngle::Kind::TangentAtInfinity ? DihedralAngle::Kind::Tangent : k;
    };
    auto same = [&](const DihedralAngle& x, const DihedralAngle& y) {
        return contact(x.kind) == contact(y.kind) &&
               (x.kind != DihedralAngle::Kind::Angle ||
                (x.cos_sq == y.cos_sq && x.cos_sign == y.cos_sign));
    };
    for (size_t i = 0; i < faces.size(); ++i)
        for (size_t j = i + 1; j < faces.size(); ++j)
            REQUIRE(same(dihedral_angle(faces[i], faces[j]), dihedral_angle(faces[j], faces[i])));

    const std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 3}, {3, 4}, {3, 5}, {1, 2}, {0, 5}};
    for (const auto& name : reg.names()) {
        const ExtendedIsometry& g = reg.get(name);
        for (auto [i, j] : pairs) {
            REQUIRE(same(dihedral_angle(apply_to_hyperplane(g, faces[i]),
                                        apply_to_hyperplane(g, faces[j])),
                         dihedral_angle(faces[i], faces[j])));
        }
    }
}

TEST_CASE("hyperplane images under named isometries") {
    const Registry& reg = registry();
    ExtendedIsometry c_inv = ExtendedIsometry::holomorphic(reg.mat("c").inverse());
    CHECK(apply_to_hyperplane(c_inv, ball_wall(0)) == ball_wall(1));
    CHECK(apply_to_hyperplane(reg.get("f0"), kIH) == vertical_x(FieldElem::one()));
    ExtendedIsometry r_prime = reflect(kIHHalf);
    CHECK(apply_to_hyperplane(r_prime, ball_wall(0)) ==
          Hyperplane::hemisphere(fe(1, 0, 0, 0), FieldElem::one()));
    CHECK(apply_to_hyperplane(reg.get("rT"), kIH) == kIH);
}

TEST_CASE("built-in polyhedron tables verify") {
    PolyhedronReport q2 = verify_polyhedron(make_doubled_qn_spec(2));
    CHECK(q2.all_pass());
    CHECK(q2.rows.size() == 32);
    PolyhedronReport q4 = verify_polyhedron(make_doubled_qn_spec(4));
    CHECK(q4.all_pass());
    PolyhedronReport pt0 = verify_polyhedron(make_doubled_pt0_spec());
    CHECK(pt0.all_pass());
    CHECK(pt0.rows.size() == 13);
    CHECK_THROWS_AS(make_doubled_qn_spec(0), std::invalid_argument);
}

TEST_CASE("the claimed table distinguishes the two top-face readings") {
    PolyhedronReport alt = verify_polyhedron(make_doubled_qn_spec(2, TopFaceReading::ImSqrt2));
    CHECK(!alt.all_pass());
    bool disjoint_top_b0 = false;
    for (const auto& row : alt.rows) {
        if (row.face_a == "top" && row.face_b == "B0")
            disjoint_top_b0 = !row.pass && row.actual == "Disjoint";
    }
    CHECK(disjoint_top_b0);  // at height r2 the top wall misses B0 entirely
}

TEST_CASE("corrupted expected table is reported with one mismatch") {
    PolyhedronSpec spec = make_doubled_qn_spec(2);
    spec.expected[{"B0", "B1"}] = Incidence::PiOver3;  // truth: right angle
    PolyhedronReport report = verify_polyhedron(spec);
    CHECK(report.mismatches == 1);
    bool located = false;
    for (const auto& row : report.rows)
        if (!row.pass) located = row.face_a == "B0" && row.face_b == "B1";
    CHECK(located);
}

TEST_CASE("expected tables load from text") {
    PolyhedronSpec base = make_doubled_pt0_spec();
    PolyhedronSpec loaded = base.with_expected_from_text(
        "# claimed incidences\n"
        "F A0 RightAngle\n"
        "A0 A0r TwoPiOver3\n"
        "F F1 TangentAtInfinity\n");
    CHECK(loaded.expected.size() == 3);
    CHECK(verify_polyhedron(loaded).all_pass());
    CHECK_THROWS_AS(base.with_expected_from_text("F A0 Sideways\n"), ParseError);
    CHECK_THROWS_AS(base.with_expected_from_text("F nosuch RightAngle\n"), std::out_of_range);
    CHECK_THROWS_AS(base.with_expected_from_text("F A0\n"), ParseError);
}

TEST_CASE("interior reference point must avoid the faces") {
    H3Point on_wall{FieldElem::zero(), FieldElem::one()};  // on the unit hemisphere
    CHECK_THROWS_AS(dihedral_angle(ball_wall(0), ball_wall(1), on_wall), std::invalid_argument);
}

TEST_CASE("reflections whose determinant has no field square root are rejected") {
    // Direction 2 + i: the normalizer would need sqrt((3-4i)/5), absent here.
    Hyperplane slanted = Hyperplane::vertical(FieldElem::zero(), fe(2, 0, 1, 0));
    CHECK_THROWS_AS(reflect(slanted), NormalizationFailure);
    // The 45-degree line works: the field contains the eighth roots of unity.
    Hyperplane diag = Hyperplane::vertical(FieldElem::zero(), fe(1, 0, 1, 0));
    ExtendedIsometry r = reflect(diag);
    CHECK(compose(r, r) == ExtendedIsometry::identity());
}
