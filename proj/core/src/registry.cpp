#include "kleinian/registry.hpp"

namespace kleinian {

namespace {

FieldElem fe(long a, long b, long c, long d) {
    return FieldElem(Rational(a), Rational(b), Rational(c), Rational(d));
}

ProjectiveMatrix mat4(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    return ProjectiveMatrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

}  // namespace

Registry::Registry() {
    const ProjectiveMatrix s = mat4(fe(1, 0, 0, 0), fe(0, 0, 0, 0), fe(-1, 0, 0, 0), fe(1, 0, 0, 0));
    const ProjectiveMatrix t = mat4(fe(0, 0, 2, 0), fe(2, 0, -1, 0), fe(0, 0, 1, 0), fe(1, 0, -1, 0));
    const ProjectiveMatrix f = s;
    const ProjectiveMatrix g =
        mat4(fe(-1, 0, 0, 1), fe(1, 0, 0, -2), fe(-2, 0, 0, 0), fe(3, 0, 0, -1));
    const ProjectiveMatrix h =
        mat4(fe(0, 0, 0, 2), fe(-3, 0, 0, -1), fe(-3, 0, 0, 1), fe(0, 0, 0, -3));
    const ProjectiveMatrix c = mat4(fe(1, 0, 0, 0), fe(0, 0, 0, 1), fe(0, 0, 0, 0), fe(1, 0, 0, 0));
    const ProjectiveMatrix m1 =
        mat4(fe(-3, 0, 0, 0), fe(5, 0, 0, 0), fe(-2, 0, 0, 0), fe(3, 0, 0, 0));
    const ProjectiveMatrix p1 = mat4(fe(1, 0, 0, 0), fe(0, 0, 0, 0), fe(1, 0, 0, 0), fe(1, 0, 0, 0));
    const ProjectiveMatrix p2 =
        mat4(fe(-1, 0, 0, 0), fe(5, 0, 0, 0), fe(0, 0, 0, 0), fe(-1, 0, 0, 0));
    const ProjectiveMatrix p3 =
        mat4(fe(-14, 0, 0, 0), fe(25, 0, 0, 0), fe(-9, 0, 0, 0), fe(16, 0, 0, 0));
    const ProjectiveMatrix p4 =
        mat4(fe(29, 0, 0, 0), fe(-45, 0, 0, 0), fe(20, 0, 0, 0), fe(-31, 0, 0, 0));
    const ProjectiveMatrix f0 = mat4(fe(1, 0, 0, 0), fe(1, 0, 0, 0), fe(0, 0, 0, 0), fe(1, 0, 0, 0));
    const ProjectiveMatrix b0 = mat4(fe(0, 0, 0, 0), fe(0, 0, 1, 0), fe(0, 0, 1, 0), fe(1, 0, 0, 0));
    const ProjectiveMatrix a0 =
        mat4(fe(0, 0, 0, 0), fe(-1, 0, 0, 0), fe(1, 0, 0, 0), fe(-1, 0, 0, 0));
    const ProjectiveMatrix a1 =
        mat4(fe(0, 0, 0, -1), fe(1, 0, 0, 1), fe(1, 0, 0, 0), fe(-1, 0, 0, 1));

    add("s", ExtendedIsometry::holomorphic(s));
    add("t", ExtendedIsometry::holomorphic(t));
    add("f", ExtendedIsometry::holomorphic(f));
    add("g", ExtendedIsometry::holomorphic(g));
    add("h", ExtendedIsometry::holomorphic(h));
    add("c", ExtendedIsometry::holomorphic(c));
    add("m1", ExtendedIsometry::holomorphic(m1));
    add("p1", ExtendedIsometry::holomorphic(p1));
    add("p2", ExtendedIsometry::holomorphic(p2));
    add("p3", ExtendedIsometry::holomorphic(p3));
    add("p4", ExtendedIsometry::holomorphic(p4));
    add("f0", ExtendedIsometry::holomorphic(f0));
    add("b0", ExtendedIsometry::holomorphic(b0));
    add("a0", ExtendedIsometry::holomorphic(a0));
    add("a1", ExtendedIsometry::holomorphic(a1));

    // rT acts by x -> conj(x) translated by -2*i*r2, i.e. (c^-2, reversing).
    const ProjectiveMatrix c2 = c * c;
    add("rT", ExtendedIsometry{c2.inverse(), true});

    // Conjugated families: x_j = c^-j x c^j (level doubles for p's and m1,
    // which live one sphere deeper per step of c^2).
    ProjectiveMatrix cinv = c.inverse();
    auto conj_level = [&](const ProjectiveMatrix& x, int j) {
        ProjectiveMatrix out = x;
        for (int k = 0; k < j; ++k) out = cinv * out * c;
        return out;
    };
    add("a2", ExtendedIsometry::holomorphic(conj_level(a1, 1)));
    add("a3", ExtendedIsometry::holomorphic(conj_level(a1, 2)));
    for (int j = 1; j <= kMaxConjLevel; ++j) {
        for (int k = 1; k <= 4; ++k) {
            const ProjectiveMatrix& base = mat("p" + std::to_string(k));
            add("p" + std::to_string(k) + "_" + std::to_string(j),
                ExtendedIsometry::holomorphic(conj_level(base, 2 * j)));
        }
        add("m1_" + std::to_string(j), ExtendedIsometry::holomorphic(conj_level(m1, 2 * j)));
    }
}

void Registry::add(const std::string& name, ExtendedIsometry iso) {
    entries_.emplace(name, std::move(iso));
    order_.push_back(name);
}

const ExtendedIsometry& Registry::get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::out_of_range("no registry entry named '" + name + "'");
    return it->second;
}

const ProjectiveMatrix& Registry::mat(const std::string& name) const {
    const ExtendedIsometry& iso = get(name);
    if (iso.antiholomorphic)
        throw std::logic_error("registry entry '" + name + "' is orientation-reversing");
    return iso.mat;
}

std::vector<std::string> Registry::base_names() const {
    return {"s", "t", "f", "g", "h", "c", "m1", "p1", "p2", "p3", "p4", "f0", "b0", "a0", "a1"};
}

const Registry& registry() {
    static const Registry instance;
    return instance;
}

}  // namespace kleinian
