#pragma once

// Geodesic hyperplanes of upper half-space, exact reflections, dihedral
// angles decided by field comparisons of cos^2, and polyhedron face tables.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/moebius.hpp"

namespace kleinian {

struct NormalizationFailure : std::runtime_error {
    explicit NormalizationFailure(const std::string& what) : std::runtime_error(what) {}
};

// A geodesic plane: either vertical over the boundary line anchor + dir*R,
// or the hemisphere over the boundary circle |z - center|^2 = radius_sq.
// Vertical representations are normalized (canonical direction, anchor at the
// foot of the perpendicular from 0) so equality is plain field equality.
class Hyperplane {
public:
    enum class Kind { Vertical, Hemisphere };

    static Hyperplane vertical(FieldElem anchor, FieldElem direction);
    static Hyperplane hemisphere(FieldElem center, FieldElem radius_sq);

    Kind kind() const { return kind_; }
    const FieldElem& anchor() const { return anchor_; }     // Vertical
    const FieldElem& direction() const { return direction_; }
    const FieldElem& center() const { return anchor_; }     // Hemisphere
    const FieldElem& radius_sq() const { return radius_sq_; }

    friend bool operator==(const Hyperplane& x, const Hyperplane& y) {
        return x.kind_ == y.kind_ && x.anchor_ == y.anchor_ && x.direction_ == y.direction_ &&
               x.radius_sq_ == y.radius_sq_;
    }
    friend bool operator!=(const Hyperplane& x, const Hyperplane& y) { return !(x == y); }

    std::string str() const;

private:
    Hyperplane() = default;
    Kind kind_ = Kind::Vertical;
    FieldElem anchor_;
    FieldElem direction_;
    FieldElem radius_sq_;
};

// Point of upper half-space with exact height squared.
struct H3Point {
    FieldElem z;
    FieldElem height_sq;
};

// Exact relative position of two geodesic planes. For intersecting planes
// cos_sq is the exact squared cosine; cos_sign carries the interior-angle
// sign when the angle was computed against a region reference point, and is
// the absolute value (+) for the unoriented form.
struct DihedralAngle {
    enum class Kind { Disjoint, TangentAtInfinity, Tangent, Angle };
    Kind kind = Kind::Disjoint;
    FieldElem cos_sq;
    int cos_sign = 1;

    // The exact cosine when it exists in the field.
    std::optional<FieldElem> cosine() const;
    std::string str() const;
};

// Unoriented: reports |cos|.
DihedralAngle dihedral_angle(const Hyperplane& h1, const Hyperplane& h2);
// Interior angle of the region containing ref (ref must lie strictly on one
// side of each plane).
DihedralAngle dihedral_angle(const Hyperplane& h1, const Hyperplane& h2, const H3Point& ref);

// The antiholomorphic involution fixing h pointwise, det normalized to 1.
ExtendedIsometry reflect(const Hyperplane& h);

// Reflect first in h1, then in h2; the composite is holomorphic.
ProjectiveMatrix compose_reflections(const Hyperplane& h1, const Hyperplane& h2);

// Image hyperplane, recovered exactly from g . reflect(h) . g^-1.
Hyperplane apply_to_hyperplane(const ExtendedIsometry& g, const Hyperplane& h);

// Expected incidence classes used in face tables.
enum class Incidence { RightAngle, PiOver3, TwoPiOver3, Disjoint, TangentAtInfinity, TangentIdeal };
const char* incidence_name(Incidence inc);
std::optional<Incidence> incidence_from_name(const std::string& name);
// Maps a computed (oriented) angle onto the table vocabulary when possible.
std::optional<Incidence> classify_incidence(const DihedralAngle& angle);

struct PolyhedronSpec {
    std::string name;
    std::vector<std::pair<std::string, Hyperplane>> faces;
    std::map<std::pair<std::string, std::string>, Incidence> expected;
    H3Point interior_ref;

    const Hyperplane& face(const std::string& face_name) const;
    // Replaces the expected table with one parsed from "faceA faceB incidence"
    // lines ('#' comments allowed). Unknown face or incidence names throw.
    PolyhedronSpec with_expected_from_text(const std::string& text) const;
};

struct IncidenceRow {
    std::string face_a, face_b;
    Incidence expected;
    std::string actual;
    bool pass;
};

struct PolyhedronReport {
    std::string name;
    std::vector<IncidenceRow> rows;
    int mismatches = 0;
    bool all_pass() const { return mismatches == 0; }
    std::string summary() const;
};

PolyhedronReport verify_polyhedron(const PolyhedronSpec& spec);

// Which horizontal plane bounds the doubled polyhedron on top.
enum class TopFaceReading { ImHalf, ImSqrt2 };

// Built-in face tables: the doubled strip polyhedron Q_n u r'(Q_n) and the
// doubled slab P_T0 u r'(P_T0), with the incidence claims they must satisfy.
PolyhedronSpec make_doubled_qn_spec(int n, TopFaceReading reading = TopFaceReading::ImHalf);
PolyhedronSpec make_doubled_pt0_spec();

// The hemisphere wall B_k (unit radius, centered at k * (-i*r2)).
Hyperplane ball_wall(int k);
// Convenience planes: iH + offset (x = offset) and H + im*i (y = im).
Hyperplane vertical_x(const FieldElem& offset);
Hyperplane vertical_y(const FieldElem& im);

}  // namespace kleinian
