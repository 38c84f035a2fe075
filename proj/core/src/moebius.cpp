#include "kleinian/moebius.hpp"

#include <sstream>
#include <vector>

namespace kleinian {

ProjectiveMatrix::ProjectiveMatrix()
    : a_(FieldElem::one()), b_(), c_(), d_(FieldElem::one()) {}

ProjectiveMatrix::ProjectiveMatrix(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    FieldElem det = a_ * d_ - b_ * c_;
    if (!det.is_one()) {
        throw std::invalid_argument("matrix determinant is " + det.str() + ", expected 1");
    }
    canonicalize();
}

ProjectiveMatrix::ProjectiveMatrix(unchecked_t, FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    canonicalize();
}

void ProjectiveMatrix::canonicalize() {
    const FieldElem* entries[4] = {&a_, &b_, &c_, &d_};
    for (const FieldElem* e : entries) {
        if (e->is_zero()) continue;
        if (!e->is_positive_normal()) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
            d_ = -d_;
        }
        return;
    }
    throw std::invalid_argument("zero matrix is not projective");
}

bool ProjectiveMatrix::is_identity() const {
    return b_.is_zero() && c_.is_zero() && a_.is_one() && d_.is_one();
}

FieldElem ProjectiveMatrix::trace_sq() const {
    FieldElem t = trace();
    return t * t;
}

ProjectiveMatrix ProjectiveMatrix::inverse() const {
    return ProjectiveMatrix(unchecked_t{}, d_, -b_, -c_, a_);
}

ProjectiveMatrix ProjectiveMatrix::entrywise_conj() const {
    return ProjectiveMatrix(unchecked_t{}, a_.conj(), b_.conj(), c_.conj(), d_.conj());
}

ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return ProjectiveMatrix(ProjectiveMatrix::unchecked_t{},
                            x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                            x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string ProjectiveMatrix::key() const {
    return a_.key() + ";" + b_.key() + ";" + c_.key() + ";" + d_.key();
}

std::string ProjectiveMatrix::str() const {
    std::ostringstream os;
    os << "[[" << a_.str() << ", " << b_.str() << "], [" << c_.str() << ", " << d_.str() << "]]";
    return os.str();
}

TraceClass trace_class(const ProjectiveMatrix& m) {
    if (m.is_identity()) return TraceClass::Identity;
    FieldElem t2 = m.trace_sq();
    if (t2 == FieldElem::integer(4)) return TraceClass::Parabolic;
    if (t2.is_real()) {
        FieldElem below4 = FieldElem::integer(4) - t2;
        if (t2.sign_real() >= 0 && below4.sign_real() > 0) return TraceClass::Elliptic;
    }
    return TraceClass::Loxodromic;
}

const char* trace_class_name(TraceClass t) {
    switch (t) {
        case TraceClass::Identity: return "identity";
        case TraceClass::Parabolic: return "parabolic";
        case TraceClass::Elliptic: return "elliptic";
        default: return "loxodromic";
    }
}

ExtendedIsometry ExtendedIsometry::inverse() const {
    if (!antiholomorphic) return {mat.inverse(), false};
    return {mat.inverse().entrywise_conj(), true};
}

std::string ExtendedIsometry::key() const {
    return mat.key() + (antiholomorphic ? "|A" : "|H");
}

std::string ExtendedIsometry::str() const {
    return mat.str() + (antiholomorphic ? " (orientation-reversing)" : "");
}

ExtendedIsometry compose(const ExtendedIsometry& x, const ExtendedIsometry& y) {
    ProjectiveMatrix right = x.antiholomorphic ? y.mat.entrywise_conj() : y.mat;
    return {x.mat * right, x.antiholomorphic != y.antiholomorphic};
}

ExtendedIsometry conjugate(const ExtendedIsometry& g, const ExtendedIsometry& x) {
    return compose(compose(g, x), g.inverse());
}

bool equals_projective(const ExtendedIsometry& x, const ExtendedIsometry& y) { return x == y; }

BoundaryPoint parabolic_fixed_point(const ProjectiveMatrix& m) {
    if (trace_class(m) != TraceClass::Parabolic) throw NotParabolic();
    if (m.c().is_zero()) return BoundaryPoint::at_infinity();
    return BoundaryPoint::at((m.a() - m.d()) / (m.c() + m.c()));
}

BoundaryPoint apply_boundary(const ExtendedIsometry& g, const BoundaryPoint& p) {
    BoundaryPoint q = p;
    if (g.antiholomorphic && !q.infinite) q.z = q.z.conj();
    const ProjectiveMatrix& m = g.mat;
    if (q.infinite) {
        if (m.c().is_zero()) return BoundaryPoint::at_infinity();
        return BoundaryPoint::at(m.a() / m.c());
    }
    FieldElem den = m.c() * q.z + m.d();
    if (den.is_zero()) return BoundaryPoint::at_infinity();
    return BoundaryPoint::at((m.a() * q.z + m.b()) / den);
}

namespace {

// Splits "e0, e1" at the top-level comma of a bracketed row body.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    size_t start = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '[') ++depth;
        if (s[k] == ']') --depth;
        if (s[k] == ',' && depth == 0) {
            out.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    }
    out.push_back(s.substr(start));
    return out;
}

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n");
    size_t e = s.find_last_not_of(" \t\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

ProjectiveMatrix parse_matrix(const std::string& text) {
    std::string body = strip(text);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("matrix literal must be of the form [[a,b],[c,d]]: " + text);
    std::vector<std::string> rows = split_top_level(body.substr(1, body.size() - 2));
    if (rows.size() != 2) throw ParseError("matrix literal needs two rows: " + text);
    FieldElem entries[4];
    for (int r = 0; r < 2; ++r) {
        std::string row = strip(rows[r]);
        if (row.size() < 2 || row.front() != '[' || row.back() != ']')
            throw ParseError("matrix row must be bracketed: " + row);
        std::vector<std::string> cols = split_top_level(row.substr(1, row.size() - 2));
        if (cols.size() != 2) throw ParseError("matrix row needs two entries: " + row);
        entries[2 * r] = parse_field(strip(cols[0]));
        entries[2 * r + 1] = parse_field(strip(cols[1]));
    }
    return ProjectiveMatrix(entries[0], entries[1], entries[2], entries[3]);
}

}  // namespace kleinian
