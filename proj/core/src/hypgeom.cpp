#include "kleinian/hypgeom.hpp"

#include <array>
#include <sstream>

namespace kleinian {

namespace {

// Initialized on first use: callers in other translation units build
// hyperplanes during their own static initialization.
const FieldElem& one_elem() {
    static const FieldElem one = FieldElem::one();
    return one;
}

// Lorentz vector of a boundary circle/line, scaled to keep entries in the
// real subfield: <v,v> = radius_sq for circles and |direction|^2 for lines.
struct MinkVec {
    std::array<FieldElem, 4> x;  // signature (+,+,+,-)
    FieldElem norm;              // <v,v>, positive
};

FieldElem mink_inner(const MinkVec& p, const MinkVec& q) {
    return p.x[0] * q.x[0] + p.x[1] * q.x[1] + p.x[2] * q.x[2] - p.x[3] * q.x[3];
}

MinkVec mink_vector(const Hyperplane& h) {
    MinkVec v;
    if (h.kind() == Hyperplane::Kind::Vertical) {
        // side(p) = Im((p - anchor) * conj(dir)) = nu . p - delta
        const FieldElem& u = h.direction();
        FieldElem nu1 = -u.imag_part();
        FieldElem nu2 = u.real_part();
        FieldElem delta = (h.anchor() * u.conj()).imag_part();
        v.x = {nu1, nu2, delta, delta};
        v.norm = (u * u.conj()).real_part();
    } else {
        const FieldElem& mu = h.center();
        FieldElem mu_sq = (mu * mu.conj()).real_part();
        FieldElem half = FieldElem::rational(1, 2);
        v.x = {mu.real_part(), mu.imag_part(), (mu_sq - h.radius_sq() - one_elem()) * half,
               (mu_sq - h.radius_sq() + one_elem()) * half};
        v.norm = h.radius_sq();
    }
    return v;
}

// +1 if ref lies on the positive side of the plane's side functional
// (above the line functional, outside the hemisphere), -1 on the other side.
int side_of(const Hyperplane& h, const H3Point& ref) {
    FieldElem value;
    if (h.kind() == Hyperplane::Kind::Vertical) {
        value = ((ref.z - h.anchor()) * h.direction().conj()).imag_part();
    } else {
        FieldElem dz = ref.z - h.center();
        value = (dz * dz.conj()).real_part() + ref.height_sq - h.radius_sq();
    }
    int s = value.sign_real();
    if (s == 0)
        throw std::invalid_argument("reference point lies on face " + h.str());
    return s;
}

DihedralAngle relative_position(const Hyperplane& h1, const Hyperplane& h2, int orient) {
    MinkVec v1 = mink_vector(h1), v2 = mink_vector(h2);
    FieldElem g = mink_inner(v1, v2);
    FieldElem cos_sq = (g * g) / (v1.norm * v2.norm);
    int cmp = (cos_sq - one_elem()).sign_real();
    DihedralAngle out;
    if (cmp > 0) {
        out.kind = DihedralAngle::Kind::Disjoint;
        out.cos_sq = cos_sq;
        return out;
    }
    if (cmp == 0 && h1 != h2) {
        bool both_vertical = h1.kind() == Hyperplane::Kind::Vertical &&
                             h2.kind() == Hyperplane::Kind::Vertical;
        out.kind = both_vertical ? DihedralAngle::Kind::TangentAtInfinity
                                 : DihedralAngle::Kind::Tangent;
        out.cos_sq = cos_sq;
        return out;
    }
    out.kind = DihedralAngle::Kind::Angle;
    out.cos_sq = cos_sq;
    int sg = g.sign_real();
    // orient = product of the outward orientations; interior cos = -e1*e2*g.
    out.cos_sign = (sg == 0) ? 0 : (orient == 0 ? 1 : -orient * sg);
    return out;
}

// Outward orientation of a face relative to the region containing ref: +1
// when ref is outside a hemisphere; for a vertical plane (the limit of large
// circles) the outside is the negative side of the side functional.
int outward_orientation(const Hyperplane& h, const H3Point& ref) {
    int side = side_of(h, ref);
    return h.kind() == Hyperplane::Kind::Vertical ? -side : side;
}

}  // namespace

Hyperplane Hyperplane::vertical(FieldElem anchor, FieldElem direction) {
    if (direction.is_zero()) throw std::invalid_argument("vertical plane needs a nonzero direction");
    Hyperplane h;
    h.kind_ = Kind::Vertical;
    // Canonical direction: 1 + q*i with q in Q(sqrt2), or i.
    FieldElem re = direction.real_part(), im = direction.imag_part();
    FieldElem u = re.is_zero() ? FieldElem::i() : one_elem() + (im / re) * FieldElem::i();
    // Canonical anchor: foot of the perpendicular from the origin.
    FieldElem norm = (u * u.conj()).real_part();
    FieldElem s = (anchor * u.conj()).real_part() / norm;
    h.anchor_ = anchor - s * u;
    h.direction_ = u;
    return h;
}

Hyperplane Hyperplane::hemisphere(FieldElem center, FieldElem radius_sq) {
    if (!radius_sq.is_real() || radius_sq.sign_real() <= 0)
        throw std::invalid_argument("hemisphere needs a positive real radius_sq");
    Hyperplane h;
    h.kind_ = Kind::Hemisphere;
    h.anchor_ = std::move(center);
    h.radius_sq_ = std::move(radius_sq);
    return h;
}

std::string Hyperplane::str() const {
    std::ostringstream os;
    if (kind_ == Kind::Vertical) {
        os << "vertical(anchor=" << anchor_.str() << ", dir=" << direction_.str() << ")";
    } else {
        os << "hemisphere(center=" << anchor_.str() << ", r^2=" << radius_sq_.str() << ")";
    }
    return os.str();
}

std::optional<FieldElem> DihedralAngle::cosine() const {
    if (kind != Kind::Angle) return std::nullopt;
    if (cos_sign == 0) return FieldElem::zero();
    auto root = sqrt_in_field(cos_sq);
    if (!root) return std::nullopt;
    FieldElem mag = root->sign_real() >= 0 ? *root : -*root;
    return cos_sign > 0 ? mag : -mag;
}

std::string DihedralAngle::str() const {
    switch (kind) {
        case Kind::Disjoint: return "disjoint";
        case Kind::TangentAtInfinity: return "tangent at infinity";
        case Kind::Tangent: return "ideally tangent";
        default: break;
    }
    std::ostringstream os;
    os << "angle(cos^2 = " << cos_sq.str();
    if (auto c = cosine()) os << ", cos = " << c->str();
    os << ")";
    return os.str();
}

DihedralAngle dihedral_angle(const Hyperplane& h1, const Hyperplane& h2) {
    return relative_position(h1, h2, 0);
}

DihedralAngle dihedral_angle(const Hyperplane& h1, const Hyperplane& h2, const H3Point& ref) {
    return relative_position(h1, h2,
                             outward_orientation(h1, ref) * outward_orientation(h2, ref));
}

ExtendedIsometry reflect(const Hyperplane& h) {
    FieldElem a, b, c, d, det;
    if (h.kind() == Hyperplane::Kind::Vertical) {
        const FieldElem& u = h.direction();
        const FieldElem& w = h.anchor();
        FieldElem q = u / u.conj();
        a = q;
        b = w - q * w.conj();
        c = FieldElem::zero();
        d = one_elem();
        det = q;
    } else {
        const FieldElem& mu = h.center();
        a = mu;
        b = h.radius_sq() - mu * mu.conj();
        c = one_elem();
        d = -mu.conj();
        det = -h.radius_sq();
    }
    auto scale = sqrt_in_field(det.inv());
    if (!scale)
        throw NormalizationFailure("reflection determinant " + det.str() +
                                   " has no square-root normalizer in the field");
    return ExtendedIsometry{ProjectiveMatrix(*scale * a, *scale * b, *scale * c, *scale * d), true};
}

ProjectiveMatrix compose_reflections(const Hyperplane& h1, const Hyperplane& h2) {
    ExtendedIsometry composite = compose(reflect(h2), reflect(h1));
    if (composite.antiholomorphic)
        throw std::logic_error("composite of two reflections must be holomorphic");
    return composite.mat;
}

Hyperplane apply_to_hyperplane(const ExtendedIsometry& g, const Hyperplane& h) {
    ExtendedIsometry image_refl = conjugate(g, reflect(h));
    if (!image_refl.antiholomorphic)
        throw std::logic_error("conjugated reflection lost its orientation flag");
    const ProjectiveMatrix& m = image_refl.mat;
    Hyperplane out = h;
    if (!m.c().is_zero()) {
        // Inversion z -> mu + rho/(conj(z) - conj(mu)).
        FieldElem mu = m.a() / m.c();
        if (m.d() / m.c() != -mu.conj())
            throw std::logic_error("image reflection is not an inversion: " + m.str());
        FieldElem rho = m.b() / m.c() + mu * mu.conj();
        out = Hyperplane::hemisphere(mu, rho);
    } else {
        // z -> q*conj(z) + beta with |q| = 1; its fixed line solves
        // (1-q1) x - q2 y = beta1, -q2 x + (1+q1) y = beta2.
        FieldElem q = m.a() / m.d();
        FieldElem beta = m.b() / m.d();
        if (!(q * q.conj()).is_one())
            throw std::logic_error("image line reflection has |q| != 1: " + m.str());
        FieldElem q1 = q.real_part(), q2 = q.imag_part();
        FieldElem b1 = beta.real_part(), b2 = beta.imag_part();
        FieldElem one_minus = one_elem() - q1, one_plus = one_elem() + q1;
        FieldElem dir_x = q2, dir_y = one_minus;
        if (dir_x.is_zero() && dir_y.is_zero()) {
            dir_x = one_plus;
            dir_y = q2;
        }
        FieldElem x, y;
        if (!one_minus.is_zero()) {
            y = FieldElem::zero();
            x = b1 / one_minus;
            if (-q2 * x != b2)
                throw std::logic_error("image reflection has no fixed line: " + m.str());
        } else if (!q2.is_zero()) {
            y = -b1 / q2;
            x = (one_plus * y - b2) / q2;
        } else {
            if (!b1.is_zero())
                throw std::logic_error("image reflection has no fixed line: " + m.str());
            x = FieldElem::zero();
            y = b2 * FieldElem::rational(1, 2);
        }
        FieldElem anchor = x + y * FieldElem::i();
        FieldElem dir = dir_x + dir_y * FieldElem::i();
        out = Hyperplane::vertical(anchor, dir);
    }
    if (reflect(out) != image_refl)
        throw std::logic_error("recovered hyperplane does not reproduce the image reflection");
    return out;
}

const char* incidence_name(Incidence inc) {
    switch (inc) {
        case Incidence::RightAngle: return "RightAngle";
        case Incidence::PiOver3: return "PiOver3";
        case Incidence::TwoPiOver3: return "TwoPiOver3";
        case Incidence::Disjoint: return "Disjoint";
        case Incidence::TangentAtInfinity: return "TangentAtInfinity";
        default: return "TangentIdeal";
    }
}

std::optional<Incidence> incidence_from_name(const std::string& name) {
    for (Incidence inc : {Incidence::RightAngle, Incidence::PiOver3, Incidence::TwoPiOver3,
                          Incidence::Disjoint, Incidence::TangentAtInfinity, Incidence::TangentIdeal}) {
        if (name == incidence_name(inc)) return inc;
    }
    return std::nullopt;
}

std::optional<Incidence> classify_incidence(const DihedralAngle& angle) {
    switch (angle.kind) {
        case DihedralAngle::Kind::Disjoint: return Incidence::Disjoint;
        case DihedralAngle::Kind::TangentAtInfinity: return Incidence::TangentAtInfinity;
        case DihedralAngle::Kind::Tangent: return Incidence::TangentIdeal;
        case DihedralAngle::Kind::Angle: break;
    }
    if (angle.cos_sq.is_zero()) return Incidence::RightAngle;
    if (angle.cos_sq == FieldElem::rational(1, 4)) {
        if (angle.cos_sign > 0) return Incidence::PiOver3;
        if (angle.cos_sign < 0) return Incidence::TwoPiOver3;
    }
    return std::nullopt;
}

const Hyperplane& PolyhedronSpec::face(const std::string& face_name) const {
    for (const auto& [fname, plane] : faces) {
        if (fname == face_name) return plane;
    }
    throw std::out_of_range("polyhedron '" + name + "' has no face named '" + face_name + "'");
}

PolyhedronSpec PolyhedronSpec::with_expected_from_text(const std::string& text) const {
    PolyhedronSpec out = *this;
    out.expected.clear();
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string fa, fb, inc_name;
        if (!(ls >> fa)) continue;  // blank
        if (!(ls >> fb >> inc_name))
            throw ParseError("expected 'faceA faceB incidence' on line " + std::to_string(lineno));
        face(fa);
        face(fb);
        auto inc = incidence_from_name(inc_name);
        if (!inc) throw ParseError("unknown incidence '" + inc_name + "' on line " + std::to_string(lineno));
        out.expected[{fa, fb}] = *inc;
    }
    return out;
}

PolyhedronReport verify_polyhedron(const PolyhedronSpec& spec) {
    PolyhedronReport report;
    report.name = spec.name;
    for (const auto& [pair, expected] : spec.expected) {
        DihedralAngle angle = dihedral_angle(spec.face(pair.first), spec.face(pair.second),
                                             spec.interior_ref);
        auto actual = classify_incidence(angle);
        IncidenceRow row;
        row.face_a = pair.first;
        row.face_b = pair.second;
        row.expected = expected;
        row.actual = actual ? incidence_name(*actual) : angle.str();
        row.pass = actual && *actual == expected;
        if (!row.pass) ++report.mismatches;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string PolyhedronReport::summary() const {
    std::ostringstream os;
    os << name << ": " << (rows.size() - mismatches) << "/" << rows.size() << " incidences match";
    for (const auto& row : rows) {
        if (!row.pass)
            os << "; " << row.face_a << "-" << row.face_b << " expected "
               << incidence_name(row.expected) << " got " << row.actual;
    }
    return os.str();
}

Hyperplane ball_wall(int k) {
    return Hyperplane::hemisphere(FieldElem(0, 0, 0, -k), one_elem());
}

Hyperplane vertical_x(const FieldElem& offset) {
    return Hyperplane::vertical(offset, FieldElem::i());
}

Hyperplane vertical_y(const FieldElem& im) {
    return Hyperplane::vertical(im * FieldElem::i(), one_elem());
}

namespace {

void expect(PolyhedronSpec& spec, const std::string& a, const std::string& b, Incidence inc) {
    spec.expected[{a, b}] = inc;
}

}  // namespace

PolyhedronSpec make_doubled_qn_spec(int n, TopFaceReading reading) {
    if (n < 1) throw std::invalid_argument("doubled Q_n table needs n >= 1");
    PolyhedronSpec spec;
    spec.name = reading == TopFaceReading::ImHalf ? "Q" + std::to_string(n) + "-doubled"
                                                  : "Q" + std::to_string(n) + "-doubled-(top=r2)";
    FieldElem top_height = reading == TopFaceReading::ImHalf ? FieldElem::rational(1, 2)
                                                             : FieldElem::sqrt2();
    spec.faces.emplace_back("top", vertical_y(top_height));
    spec.faces.emplace_back("iH", vertical_x(FieldElem::zero()));
    spec.faces.emplace_back("iH1", vertical_x(one_elem()));
    for (int k = 0; k <= n; ++k) {
        spec.faces.emplace_back("B" + std::to_string(k), ball_wall(k));
        spec.faces.emplace_back("B" + std::to_string(k) + "r",
                                Hyperplane::hemisphere(FieldElem(1, 0, 0, -k), one_elem()));
    }
    spec.interior_ref = {FieldElem::rational(1, 4), FieldElem::integer(2)};

    expect(spec, "top", "iH", Incidence::RightAngle);
    expect(spec, "top", "iH1", Incidence::RightAngle);
    expect(spec, "top", "B0", Incidence::PiOver3);
    expect(spec, "top", "B0r", Incidence::PiOver3);
    expect(spec, "iH", "iH1", Incidence::TangentAtInfinity);
    for (int k = 0; k <= n; ++k) {
        std::string bk = "B" + std::to_string(k);
        std::string bkr = bk + "r";
        if (k >= 1) {
            expect(spec, "top", bk, Incidence::Disjoint);
            expect(spec, "top", bkr, Incidence::Disjoint);
        }
        expect(spec, "iH", bk, Incidence::RightAngle);
        expect(spec, "iH", bkr, Incidence::TangentIdeal);
        expect(spec, "iH1", bkr, Incidence::RightAngle);
        expect(spec, "iH1", bk, Incidence::TangentIdeal);
        expect(spec, bk, bkr, Incidence::TwoPiOver3);
        for (int j = k + 1; j <= n; ++j) {
            std::string bj = "B" + std::to_string(j);
            std::string bjr = bj + "r";
            Incidence between = (j == k + 1) ? Incidence::RightAngle : Incidence::Disjoint;
            expect(spec, bk, bj, between);
            expect(spec, bkr, bjr, between);
            // Faces in B_k and r'(B_j), j != k, share no edge of the
            // polyhedron; at hyperplane level the claim is only checkable
            // when the walls are disjoint (|j - k| >= 2).
            if (j >= k + 2) {
                expect(spec, bk, bjr, Incidence::Disjoint);
                expect(spec, bkr, bj, Incidence::Disjoint);
            }
        }
    }
    return spec;
}

PolyhedronSpec make_doubled_pt0_spec() {
    PolyhedronSpec spec;
    spec.name = "PT0-doubled";
    spec.faces.emplace_back("F", vertical_x(FieldElem::zero()));
    spec.faces.emplace_back("F1", vertical_x(one_elem()));
    spec.faces.emplace_back("A0", ball_wall(0));
    spec.faces.emplace_back("A1", ball_wall(1));
    spec.faces.emplace_back("A0r", Hyperplane::hemisphere(FieldElem(1, 0, 0, 0), one_elem()));
    spec.faces.emplace_back("A1r", Hyperplane::hemisphere(FieldElem(1, 0, 0, -1), one_elem()));
    spec.interior_ref = {FieldElem::rational(1, 4), FieldElem::integer(2)};

    expect(spec, "F", "F1", Incidence::TangentAtInfinity);
    expect(spec, "F", "A0", Incidence::RightAngle);
    expect(spec, "F", "A1", Incidence::RightAngle);
    expect(spec, "F", "A0r", Incidence::TangentIdeal);
    expect(spec, "F", "A1r", Incidence::TangentIdeal);
    expect(spec, "F1", "A0r", Incidence::RightAngle);
    expect(spec, "F1", "A1r", Incidence::RightAngle);
    expect(spec, "F1", "A0", Incidence::TangentIdeal);
    expect(spec, "F1", "A1", Incidence::TangentIdeal);
    expect(spec, "A0", "A1", Incidence::RightAngle);
    expect(spec, "A0r", "A1r", Incidence::RightAngle);
    expect(spec, "A0", "A0r", Incidence::TwoPiOver3);
    expect(spec, "A1", "A1r", Incidence::TwoPiOver3);
    return spec;
}

}  // namespace kleinian
