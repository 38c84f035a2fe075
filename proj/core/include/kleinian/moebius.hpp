#pragma once

// Projective 2x2 matrices over Q(i,sqrt2) with exact canonical form, the
// orientation-reversing extension, trace classification and boundary action.

#include <stdexcept>
#include <string>

#include "kleinian/numfield.hpp"

namespace kleinian {

struct NotParabolic : std::domain_error {
    NotParabolic() : std::domain_error("fixed-point formula requires a parabolic element") {}
};

// Element of PSL2 over the field: determinant exactly 1, stored as the
// representative of {M, -M} whose first nonzero entry (in order a,b,c,d)
// is positive-normal. Equality and hashing are therefore exact.
class ProjectiveMatrix {
public:
    ProjectiveMatrix();  // identity
    ProjectiveMatrix(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

    const FieldElem& a() const { return a_; }
    const FieldElem& b() const { return b_; }
    const FieldElem& c() const { return c_; }
    const FieldElem& d() const { return d_; }

    bool is_identity() const;
    FieldElem trace() const { return a_ + d_; }     // of the canonical representative
    FieldElem trace_sq() const;                     // well defined projectively
    ProjectiveMatrix inverse() const;
    ProjectiveMatrix entrywise_conj() const;

    friend ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y);
    friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
        return !(x == y);
    }

    std::string key() const;
    std::string str() const;  // "[[a, b], [c, d]]"

private:
    struct unchecked_t {};
    ProjectiveMatrix(unchecked_t, FieldElem a, FieldElem b, FieldElem c, FieldElem d);
    void canonicalize();

    FieldElem a_, b_, c_, d_;
};

enum class TraceClass { Identity, Parabolic, Elliptic, Loxodromic };

TraceClass trace_class(const ProjectiveMatrix& m);
const char* trace_class_name(TraceClass t);

// Point of the sphere at infinity: a field element or the point at infinity.
struct BoundaryPoint {
    bool infinite = false;
    FieldElem z;

    static BoundaryPoint at_infinity() { return {true, FieldElem::zero()}; }
    static BoundaryPoint at(FieldElem w) { return {false, std::move(w)}; }

    friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) {
        return p.infinite == q.infinite && (p.infinite || p.z == q.z);
    }
    std::string str() const { return infinite ? "inf" : z.str(); }
};

// Isometry of upper half-space: a projective matrix plus an orientation flag.
// An antiholomorphic element (M, true) acts on the boundary by z -> M(conj z).
// Composition: (M1,e1)(M2,e2) = (M1 * sigma^e1(M2), e1 xor e2), sigma = entrywise conj.
struct ExtendedIsometry {
    ProjectiveMatrix mat;
    bool antiholomorphic = false;

    static ExtendedIsometry identity() { return {ProjectiveMatrix(), false}; }
    static ExtendedIsometry holomorphic(ProjectiveMatrix m) { return {std::move(m), false}; }

    ExtendedIsometry inverse() const;
    std::string key() const;
    std::string str() const;

    friend bool operator==(const ExtendedIsometry& x, const ExtendedIsometry& y) {
        return x.antiholomorphic == y.antiholomorphic && x.mat == y.mat;
    }
    friend bool operator!=(const ExtendedIsometry& x, const ExtendedIsometry& y) {
        return !(x == y);
    }
};

ExtendedIsometry compose(const ExtendedIsometry& x, const ExtendedIsometry& y);
// g x g^-1
ExtendedIsometry conjugate(const ExtendedIsometry& g, const ExtendedIsometry& x);
bool equals_projective(const ExtendedIsometry& x, const ExtendedIsometry& y);

// The unique fixed point of a parabolic element; throws NotParabolic.
BoundaryPoint parabolic_fixed_point(const ProjectiveMatrix& m);

BoundaryPoint apply_boundary(const ExtendedIsometry& g, const BoundaryPoint& z);

// Matrix literal grammar "[[a,b],[c,d]]" with field-element entries.
ProjectiveMatrix parse_matrix(const std::string& text);

}  // namespace kleinian
